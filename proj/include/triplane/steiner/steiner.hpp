#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "triplane/core/matrix.hpp"
#include "triplane/core/rng.hpp"
#include "triplane/groebner/ideal.hpp"
#include "triplane/resolutions/module.hpp"

namespace triplane {

/// Line c0 x0 + c1 x1 + c2 x2 = 0 of the plane, i.e. a point of the dual plane.
/// Stored with the first nonzero coordinate equal to 1.
struct LineInDualPlane {
  std::array<Coeff, 3> c{0, 0, 1};

  static LineInDualPlane normalized(const PrimeField& k, std::array<Coeff, 3> c);
  /// The line H = 0 of a nonzero linear form in three variables.
  static LineInDualPlane of_form(const Polynomial& H);
  int pivot() const;
  Polynomial equation(const RingPtr& plane) const;
  std::string to_string() const;
  bool operator==(const LineInDualPlane& o) const { return c == o.c; }
  bool operator<(const LineInDualPlane& o) const { return c < o.c; }
};

/// F restricted to a line is O(first) + O(second), first <= second.
struct SplittingType {
  int first = 0;
  int second = 0;
  bool operator==(const SplittingType& o) const { return first == o.first && second == o.second; }
  std::string to_string() const;
};

enum class SteinerKind { Given, Generic, Logarithmic, Schwarzenberger };
std::string to_string(SteinerKind k);
SteinerKind steiner_kind_from_string(const std::string& s);

/// F = coker(M) for a (b-2) x (b-4) matrix M of linear forms in three
/// variables; rows in degree 0, columns in degree 1.
struct SteinerPresentation {
  int b = 0;
  PolyMatrix matrix;
  SteinerKind kind = SteinerKind::Given;
  /// Number of unstable lines the generator aimed for; -1 when not applicable.
  int intended_alpha = -1;
  std::uint64_t seed = 0;
  /// Lines the construction makes unstable.
  std::vector<LineInDualPlane> candidates;

  const RingPtr& ring() const { return matrix.ring(); }
  /// Checks shape and linearity, and sets the standard degrees.
  static SteinerPresentation from_matrix(const PolyMatrix& M, SteinerKind kind = SteinerKind::Given);
};

class GenerationError : public std::runtime_error {
 public:
  GenerationError(const std::string& what, std::uint64_t seed) : std::runtime_error(what), seed_(seed) {}
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
};

/// k[x0,x1,x2].
RingPtr plane_ring(std::uint32_t prime = PrimeField::kDefaultPrime);

/// First alpha rows H_k c_k^T (random linear form times a random scalar row),
/// the rest random linear forms. Draws again until the result is locally free
/// and every H_k = 0 is unstable, at most max_attempts times.
SteinerPresentation gen_steiner_matrix(const RingPtr& plane, int b, int alpha, Rng& rng, int max_attempts = 32);

/// alpha = b - 1: the presentation of the logarithmic bundle of b - 1 general
/// lines, read off the resolution of the syzygies of the Jacobian of their product.
SteinerPresentation gen_logarithmic_matrix(const RingPtr& plane, int b, Rng& rng, int max_attempts = 32);

/// M(i, k) = x_{i-k} for 0 <= i - k <= 2.
SteinerPresentation gen_schwarzenberger_matrix(const RingPtr& plane, int b);

/// a[i][k][j] = coefficient of variable j in entry (i, k).
std::vector<std::vector<std::vector<Coeff>>> linear_coefficients(const PolyMatrix& M);

/// Entry (i, k) = sum_j a_ijk x_j becomes entry (j, k) = sum_i a_ijk z_i over
/// `target`, which needs one variable per row of M.
PolyMatrix fliptensor(const PolyMatrix& M, const RingPtr& target);
/// Over k[y0..y_{b-3}].
PolyMatrix fliptensor(const SteinerPresentation& P);

bool is_locally_free(const SteinerPresentation& P, const GroebnerOptions& opts = {});

/// k[u0,u1], the coordinate ring of a line.
RingPtr line_ring(std::uint32_t prime);
/// Substitutes x_pivot = -sum c_j x_j / c_pivot; the remaining two variables
/// become u0, u1 in order. pivot = -1 picks the first nonzero coordinate.
PolyMatrix restrict_to_line(const SteinerPresentation& P, const LineInDualPlane& L, int pivot = -1);

/// Generator degrees of the kernel of the transposed restriction, which is
/// the graded module of sections of the dual of F on L.
SplittingType splitting_type(const SteinerPresentation& P, const LineInDualPlane& L, int pivot = -1);
bool is_unstable(const SteinerPresentation& P, const LineInDualPlane& L);

enum class LineSearch { Candidates, Exhaustive };

/// Sorted unstable lines. Exhaustive mode walks all p^2 + p + 1 rational lines
/// and needs p <= 1000.
std::vector<LineInDualPlane> unstable_lines(const SteinerPresentation& P, LineSearch mode);

/// Rank of the 6-column matrix of quadratic monomials of the points; at most 5
/// exactly when they lie on a conic.
int veronese_rank(const PrimeField& k, const std::vector<LineInDualPlane>& pts);

/// Sym^k F as the cokernel of Sym^{k-1}(R^{b-2}) (x) R(-1)^{b-4} -> Sym^k(R^{b-2}).
/// Basis of Sym^k: multi-indices i_1 <= ... <= i_k in lexicographic order.
GradedModule sym_power_module(const SteinerPresentation& P, int k);
std::vector<std::vector<int>> sym_basis(int n, int k);

/// h^0 of the sheaf of M twisted by `twist`, computed on the double dual of
/// M. Valid when the sheaf is locally free on the plane.
long long sheaf_sections(const GradedModule& M, int twist, const GroebnerOptions& opts = {});

/// chi(F(t)) for a rank-2 bundle on the plane with Chern classes c1, c2.
long long rank2_euler_characteristic(long long c1, long long c2, long long t);

struct SteinerCriterion {
  long long h0_F_m1 = 0;
  long long h0_F = 0;
  long long h1_F_m2 = 0;
  long long h2_F_m2 = 0;
  long long chi_F_m2 = 0;
  bool ok = false;
};

/// h0(F(-1)) = 0, h0(F) = b - 2 and h1(F(-2)) = b - 4.
SteinerCriterion steiner_criterion_check(const SteinerPresentation& P, const GroebnerOptions& opts = {});

/// Zero scheme of the section of F given by a constant vector v of length
/// b - 2: the maximal minors of [M | v].
Ideal section_zero_scheme(const SteinerPresentation& P, const std::vector<Coeff>& v);

}  // namespace triplane
