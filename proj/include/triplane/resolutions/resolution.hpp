#pragma once

#include <string>
#include <vector>

#include "triplane/resolutions/module.hpp"

namespace triplane {

/// Complex 0 <- F_0 <- F_1 <- ... with maps[i] = d_{i+1}: F_{i+1} -> F_i.
struct FreeResolution {
  RingPtr ring;
  std::vector<PolyMatrix> maps;
  bool minimal = false;

  int length() const { return static_cast<int>(maps.size()); }
  /// Generator degrees of F_i.
  std::vector<int> degrees(int i) const;
  int rank(int i) const { return static_cast<int>(degrees(i).size()); }
  /// Betti numbers β_{i,j}: generators of F_i in degree j.
  std::vector<std::vector<long long>> betti_table(int& min_degree) const;
  std::string betti_string() const;
  /// d_i ∘ d_{i+1} = 0 for every consecutive pair.
  bool is_complex() const;
  /// No nonzero constant entries in any map.
  bool has_unit_entries() const;
};

/// Minimal free resolution by iterated minimal syzygies of a pruned
/// presentation. Stops when a kernel is zero or after max_length maps.
FreeResolution free_resolution(const GradedModule& M, int max_length, const GroebnerOptions& opts = {});

/// Hom(M, N) from presentations, as a subquotient of Hom(F_0(M), N).
GradedModule hom_module(const GradedModule& M, const GradedModule& N, const GroebnerOptions& opts = {});

/// Dual Hom(M, R) of a module.
GradedModule dual_module(const GradedModule& M, const GroebnerOptions& opts = {});

/// Ext^i(M, R(twist)) as ker(d_{i+1}^T) / im(d_i^T).
GradedModule ext_module(int i, const GradedModule& M, int twist, const GroebnerOptions& opts = {});
/// Same, reusing a resolution of M with at least i + 1 maps (or a shorter one
/// that ended because a kernel vanished).
GradedModule ext_from_resolution(int i, const FreeResolution& F, int twist, const GroebnerOptions& opts = {});

long long euler_characteristic(const GradedModule& M);
long long graded_piece_dim(const GradedModule& M, int d);

}  // namespace triplane
