#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "triplane/core/matrix.hpp"
#include "triplane/groebner/engine.hpp"
#include "triplane/groebner/hilbert.hpp"

namespace triplane {

using GroebnerBasis = ModuleGB;

/// Finitely generated ideal with a write-once cache for its reduced basis.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> generators);
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_homogeneous() const;

  /// Reduced Gröbner basis (computed on first use; options only apply then).
  const GroebnerBasis& gb(const GroebnerOptions& opts = {}) const;
  bool has_cached_gb() const;
  /// Seeds the cache with a known reduced basis.
  void set_gb(GroebnerBasis g) const;

  bool is_zero() const;
  bool is_unit() const;
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& J) const;
  bool equals(const Ideal& J) const { return contains(J) && J.contains(*this); }
  std::vector<Polynomial> minimal_generators() const;

  Ideal operator+(const Ideal& J) const;
  Ideal operator*(const Ideal& J) const;
  /// Same ideal in a compatible ring with another order.
  Ideal in_ring(const RingPtr& target) const;

  std::string to_string() const;

 private:
  struct Cache {
    std::mutex mu;
    std::shared_ptr<const GroebnerBasis> gb;
  };
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

GroebnerBasis buchberger(const Ideal& I, const GroebnerOptions& opts = {});

/// I ∩ k[variables not in `block`], generators expressed in I's ring.
Ideal eliminate(const Ideal& I, const std::vector<int>& block, const GroebnerOptions& opts = {});
Ideal intersect(const Ideal& I, const Ideal& J, const GroebnerOptions& opts = {});
Ideal quotient(const Ideal& I, const Ideal& J, const GroebnerOptions& opts = {});
Ideal saturate(const Ideal& I, const Ideal& J, const GroebnerOptions& opts = {});
/// Saturation by the ideal generated by the variables.
Ideal saturate_irrelevant(const Ideal& I, const GroebnerOptions& opts = {});
Ideal irrelevant_ideal(const RingPtr& ring);

/// Ideal of all k x k minors (nonzero ones, in lexicographic row/column order).
Ideal minors(const PolyMatrix& M, int k);

/// Kernel of the map source -> target / I sending variable v to targets[v].
/// Targets must be homogeneous of one common degree d; the source is
/// graded with every variable of weight d during elimination.
Ideal ring_map_kernel(const std::vector<Polynomial>& targets, const Ideal& I, const RingPtr& source,
                      const GroebnerOptions& opts = {});

HilbertData hilbert(const Ideal& I, const GroebnerOptions& opts = {});
/// Codimension from the Hilbert data of I.
int codimension(const Ideal& I);
/// I plus the c x c minors of the Jacobian of I's generators, c = codim I.
Ideal singular_locus(const Ideal& I, const GroebnerOptions& opts = {});
/// True when the projective zero set is empty (affine cone dimension <= 0).
bool is_projectively_empty(const Ideal& I, const GroebnerOptions& opts = {});

/// Leading monomials (component 0) of a basis.
std::vector<Monomial> leading_monomials(const std::vector<Polynomial>& basis);

}  // namespace triplane
