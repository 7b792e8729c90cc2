#include <algorithm>
#include <map>

#include "triplane/resolutions/resolution.hpp"
#include "triplane/steiner/steiner.hpp"

namespace triplane {

std::vector<std::vector<int>> sym_basis(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  if (k == 0) return {{}};
  if (n == 0) return {};
  for (;;) {
    out.push_back(idx);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - 1) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int q = pos + 1; q < k; ++q) idx[q] = idx[pos];
  }
  return out;
}

GradedModule sym_power_module(const SteinerPresentation& P, int k) {
  if (k < 1 || k > 3) throw UsageError("sym_power_module: k must be 1, 2 or 3");
  const RingPtr& R = P.ring();
  const int n = P.matrix.rows(), w = P.matrix.cols();
  const auto target = sym_basis(n, k);
  const auto source = sym_basis(n, k - 1);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < target.size(); ++i) index[target[i]] = static_cast<int>(i);
  const int ncols = static_cast<int>(source.size()) * w;
  PolyMatrix S(R, static_cast<int>(target.size()), ncols, std::vector<int>(target.size(), 0),
               std::vector<int>(ncols, 1));
  for (std::size_t s = 0; s < source.size(); ++s)
    for (int j = 0; j < w; ++j) {
      const int col = static_cast<int>(s) * w + j;
      for (int i = 0; i < n; ++i) {
        if (P.matrix.at(i, j).is_zero()) continue;
        std::vector<int> t = source[s];
        t.insert(std::upper_bound(t.begin(), t.end(), i), i);
        S.at(index.at(t), col) += P.matrix.at(i, j);
      }
    }
  return GradedModule::cokernel(S);
}

long long sheaf_sections(const GradedModule& M, int twist, const GroebnerOptions& opts) {
  if (M.ring()->nvars() != 3) throw UsageError("sheaf_sections: module must live over the plane");
  const GradedModule dd = dual_module(dual_module(M, opts), opts);
  return dd.graded_piece_dim(twist);
}

long long rank2_euler_characteristic(long long c1, long long c2, long long t) {
  const long long a = c1 + 2 * t;
  const long long b = c2 + c1 * t + t * t;
  return 2 + a * (a + 3) / 2 - b;
}

SteinerCriterion steiner_criterion_check(const SteinerPresentation& P, const GroebnerOptions& opts) {
  const GradedModule F = GradedModule::cokernel(P.matrix);
  const GradedModule dd = dual_module(dual_module(F, opts), opts);
  const HilbertData h = dd.hilbert();
  const long long c1 = P.b - 4;
  const long long c2 = static_cast<long long>(P.b - 3) * (P.b - 4) / 2;
  SteinerCriterion r;
  r.h0_F_m1 = h.hilbert_function(-1);
  r.h0_F = h.hilbert_function(0);
  const long long h0_m2 = h.hilbert_function(-2);
  // Serre duality: h2(F(-2)) = h0(F(3-b))
  r.h2_F_m2 = h.hilbert_function(3 - P.b);
  r.chi_F_m2 = rank2_euler_characteristic(c1, c2, -2);
  r.h1_F_m2 = h0_m2 + r.h2_F_m2 - r.chi_F_m2;
  r.ok = r.h0_F_m1 == 0 && r.h0_F == P.b - 2 && r.h1_F_m2 == P.b - 4;
  return r;
}

Ideal section_zero_scheme(const SteinerPresentation& P, const std::vector<Coeff>& v) {
  if (static_cast<int>(v.size()) != P.b - 2) throw UsageError("section_zero_scheme: vector length must be b-2");
  const RingPtr& R = P.ring();
  PolyMatrix col(R, P.b - 2, 1, std::vector<int>(P.b - 2, 0), {0});
  for (int i = 0; i < P.b - 2; ++i) col.at(i, 0) = Polynomial::constant(R, v[i]);
  return minors(P.matrix.concat(col), P.b - 3);
}

}  // namespace triplane
