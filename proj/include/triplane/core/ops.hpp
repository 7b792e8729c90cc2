#pragma once

#include <map>
#include <string>
#include <vector>

#include "triplane/core/matrix.hpp"
#include "triplane/core/rng.hpp"

namespace triplane {

Coeff random_scalar(const PrimeField& k, Rng& rng);
Coeff random_nonzero_scalar(const PrimeField& k, Rng& rng);

/// All monomials of weighted degree d, decreasing in the ring order.
std::vector<Monomial> monomials_of_degree(const Ring& r, int d);

/// Uniform coefficients on every monomial of degree d (may be zero).
Polynomial random_form(const RingPtr& r, int d, Rng& rng);
/// Uniform coefficients on the variables; the all-zero draw is resampled.
Polynomial random_linear_form(const RingPtr& r, Rng& rng);
/// rows x cols matrix of uniform scalars.
PolyMatrix random_scalar_matrix(const RingPtr& r, int rows, int cols, Rng& rng);

/// Partial derivatives in variable order as a 1 x n matrix.
PolyMatrix jacobian(const Polynomial& f);
/// Jacobian matrix of a list of polynomials: row i holds the partials of f_i.
PolyMatrix jacobian(const std::vector<Polynomial>& fs);

/// Ring homomorphism evaluation: variable v of f's ring goes to images[v]
/// (all images in `target`).
Polynomial substitute(const Polynomial& f, const RingPtr& target, const std::vector<Polynomial>& images);
/// Substitution by variable names: every variable of f's ring must be mapped
/// to a variable of `target`.
Polynomial substitute(const Polynomial& f, const RingPtr& target, const std::map<std::string, std::string>& names);
PolyMatrix substitute(const PolyMatrix& m, const RingPtr& target, const std::vector<Polynomial>& images);

}  // namespace triplane
