#pragma once

#include <vector>

#include "triplane/core/matrix.hpp"
#include "triplane/groebner/engine.hpp"
#include "triplane/groebner/hilbert.hpp"
#include "triplane/groebner/ideal.hpp"

namespace triplane {

/// Finitely generated graded module given as a subquotient (K + Q) / Q of a
/// free module F = ⊕ R(-degrees[c]). When `whole` is set K = F and the
/// module is simply the cokernel F / Q.
class GradedModule {
 public:
  GradedModule() = default;

  /// coker(P) for a degree-compatible matrix P.
  static GradedModule cokernel(const PolyMatrix& P);
  static GradedModule free(RingPtr ring, std::vector<int> degrees);
  /// R / I.
  static GradedModule quotient_ring(const Ideal& I);
  static GradedModule subquotient(RingPtr ring, std::vector<int> degrees, std::vector<Polynomial> generators,
                                  std::vector<Polynomial> relations);

  const RingPtr& ring() const { return ring_; }
  const std::vector<int>& degrees() const { return degrees_; }
  bool is_cokernel() const { return whole_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const std::vector<Polynomial>& relations() const { return rels_; }

  /// A presentation matrix P with M ≅ coker(P), pruned: no unit entries and
  /// minimal generators and relations.
  PolyMatrix presentation() const;
  /// The module rewritten as coker(presentation()).
  GradedModule pruned() const { return cokernel(presentation()); }

  HilbertData hilbert() const;
  long long graded_piece_dim(int d) const;
  long long euler_characteristic() const { return hilbert().euler_characteristic(); }

 private:
  RingPtr ring_;
  std::vector<int> degrees_;
  bool whole_ = true;
  std::vector<Polynomial> gens_;
  std::vector<Polynomial> rels_;
};

/// Hilbert numerator of F / U over (1 - t)^n, given a Gröbner basis of U.
LaurentPoly module_hilbert_numerator(const Ring& r, const std::vector<int>& degrees,
                                     const std::vector<Polynomial>& gb);

/// Cancels unit entries, drops zero columns and keeps minimal columns.
PolyMatrix prune_presentation(const PolyMatrix& P);

/// Minimal generators of the kernel of the map given by M (columns are the
/// images of the source basis). The result has M.cols() rows; M * result = 0.
PolyMatrix syzygies(const PolyMatrix& M, const GroebnerOptions& opts = {});

}  // namespace triplane
