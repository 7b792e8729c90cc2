#include "triplane/resolutions/resolution.hpp"

#include <algorithm>
#include <climits>

namespace triplane {

std::vector<int> FreeResolution::degrees(int i) const {
  if (maps.empty()) return {};
  if (i == 0) return maps[0].row_degrees();
  if (i <= length()) return maps[i - 1].col_degrees();
  return {};
}

std::vector<std::vector<long long>> FreeResolution::betti_table(int& min_degree) const {
  min_degree = INT_MAX;
  int max_degree = INT_MIN;
  for (int i = 0; i <= length(); ++i)
    for (int d : degrees(i)) {
      min_degree = std::min(min_degree, d);
      max_degree = std::max(max_degree, d);
    }
  std::vector<std::vector<long long>> t(length() + 1);
  if (min_degree == INT_MAX) {
    min_degree = 0;
    return t;
  }
  for (int i = 0; i <= length(); ++i) {
    t[i].assign(static_cast<std::size_t>(max_degree - min_degree + 1), 0);
    for (int d : degrees(i)) ++t[i][d - min_degree];
  }
  return t;
}

std::string FreeResolution::betti_string() const {
  std::string s;
  for (int i = 0; i <= length(); ++i) {
    if (i) s += " <- ";
    s += "R^" + std::to_string(rank(i));
  }
  return s;
}

bool FreeResolution::is_complex() const {
  for (int i = 0; i + 1 < length(); ++i)
    if (!(maps[i] * maps[i + 1]).is_zero()) return false;
  return true;
}

bool FreeResolution::has_unit_entries() const {
  for (const PolyMatrix& d : maps)
    for (int i = 0; i < d.rows(); ++i)
      for (int j = 0; j < d.cols(); ++j) {
        const Polynomial& p = d.at(i, j);
        if (!p.is_zero() && p.size() == 1 && p.lead().m.is_one()) return true;
      }
  return false;
}

FreeResolution free_resolution(const GradedModule& M, int max_length, const GroebnerOptions& opts) {
  FreeResolution F;
  F.ring = M.ring();
  PolyMatrix d = M.presentation();
  F.maps.push_back(d);
  while (F.length() < max_length && d.cols() > 0) {
    PolyMatrix next = syzygies(d, opts);
    if (next.cols() == 0) break;
    F.maps.push_back(next);
    d = next;
  }
  F.minimal = !F.has_unit_entries();
  return F;
}

namespace {

/// Twisted dual of a free module ⊕R(-d): generator degrees -d - twist.
std::vector<int> dual_degrees(const std::vector<int>& d, int twist) {
  std::vector<int> out;
  for (int x : d) out.push_back(-x - twist);
  return out;
}

/// Transpose of d (F_i -> F_{i-1}) as the map Hom(F_{i-1}, R(tw)) -> Hom(F_i, R(tw)).
PolyMatrix twisted_transpose(const PolyMatrix& d, int twist) {
  PolyMatrix t = d.transpose();
  std::vector<int> rd = t.row_degrees(), cd = t.col_degrees();
  for (int& x : rd) x -= twist;
  for (int& x : cd) x -= twist;
  t.set_row_degrees(rd);
  t.set_col_degrees(cd);
  return t;
}

}  // namespace

GradedModule hom_module(const GradedModule& M, const GradedModule& N, const GroebnerOptions& opts) {
  if (M.ring() != N.ring() && !(*M.ring() == *N.ring())) throw UsageError("hom_module: modules over different rings");
  const RingPtr& R = M.ring();
  const PolyMatrix P = M.presentation();
  const GradedModule Np = N.is_cokernel() ? N : N.pruned();
  const std::vector<int>& a = P.row_degrees();
  const std::vector<int>& b = P.col_degrees();
  const std::vector<int>& e = Np.degrees();
  const int r = P.rows(), q = P.cols(), s = static_cast<int>(e.size());

  std::vector<int> src_deg(static_cast<std::size_t>(r) * s), tgt_deg(static_cast<std::size_t>(q) * s);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < s; ++k) src_deg[i * s + k] = e[k] - a[i];
  for (int j = 0; j < q; ++j)
    for (int k = 0; k < s; ++k) tgt_deg[j * s + k] = e[k] - b[j];

  auto replicate_rels = [&](int copies) {
    std::vector<Polynomial> out;
    for (int c = 0; c < copies; ++c)
      for (const Polynomial& rel : Np.relations()) {
        std::vector<Term> t = rel.terms();
        for (Term& x : t) x.m.comp += static_cast<std::uint32_t>(c * s);
        out.push_back(Polynomial::from_sorted(R, std::move(t)));
      }
    return out;
  };
  std::vector<Polynomial> src_rels = replicate_rels(r);

  if (q == 0) {
    std::vector<Polynomial> basis;
    for (int c = 0; c < r * s; ++c) basis.push_back(Polynomial::constant(R, 1, static_cast<std::uint32_t>(c)));
    return GradedModule::subquotient(R, src_deg, basis, src_rels);
  }
  std::vector<Polynomial> cols;
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < s; ++k) {
      std::vector<Term> t;
      for (int j = 0; j < q; ++j)
        for (const Term& x : P.at(i, j).terms()) {
          Monomial m = x.m;
          m.comp = static_cast<std::uint32_t>(j * s + k);
          t.push_back({m, x.c});
        }
      cols.push_back(Polynomial::from_terms(R, std::move(t)));
    }
  std::vector<Polynomial> tgt_rels = replicate_rels(q);
  std::vector<Polynomial> tgt_gb;
  if (!tgt_rels.empty()) tgt_gb = groebner(tgt_rels, tgt_deg, opts).elements;
  std::vector<Polynomial> kernel = kernel_mod(cols, src_deg, tgt_deg, tgt_gb, opts);
  kernel = minimalize_generators(kernel, src_deg, opts);
  return GradedModule::subquotient(R, src_deg, kernel, src_rels);
}

GradedModule dual_module(const GradedModule& M, const GroebnerOptions& opts) {
  return hom_module(M, GradedModule::free(M.ring(), {0}), opts);
}

GradedModule ext_from_resolution(int i, const FreeResolution& F, int twist, const GroebnerOptions& opts) {
  const RingPtr& R = F.ring;
  if (i < 0) throw UsageError("ext: negative index");
  const std::vector<int> Fi = F.degrees(i);
  if (Fi.empty()) return GradedModule::free(R, {});
  const std::vector<int> amb = dual_degrees(Fi, twist);
  std::vector<Polynomial> gens;
  if (i < F.length()) {
    const PolyMatrix dt = twisted_transpose(F.maps[i], twist);  // Hom(F_i) -> Hom(F_{i+1})
    std::vector<Polynomial> cols = dt.columns();
    gens = kernel_mod(cols, dt.col_degrees(), dt.row_degrees(), {}, opts);
    gens = minimalize_generators(gens, amb, opts);
  } else {
    for (std::size_t c = 0; c < amb.size(); ++c) gens.push_back(Polynomial::constant(R, 1, static_cast<std::uint32_t>(c)));
  }
  std::vector<Polynomial> rels;
  if (i > 0) {
    const PolyMatrix dt = twisted_transpose(F.maps[i - 1], twist);  // Hom(F_{i-1}) -> Hom(F_i)
    for (Polynomial& c : dt.columns())
      if (!c.is_zero()) rels.push_back(std::move(c));
  }
  return GradedModule::subquotient(R, amb, gens, rels);
}

GradedModule ext_module(int i, const GradedModule& M, int twist, const GroebnerOptions& opts) {
  if (i < 0 || i > M.ring()->nvars()) throw UsageError("ext: index outside 0..number of variables");
  const FreeResolution F = free_resolution(M, i + 1, opts);
  return ext_from_resolution(i, F, twist, opts);
}

long long euler_characteristic(const GradedModule& M) { return M.euler_characteristic(); }

long long graded_piece_dim(const GradedModule& M, int d) { return M.graded_piece_dim(d); }

}  // namespace triplane
