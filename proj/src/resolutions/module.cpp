#include "triplane/resolutions/module.hpp"

#include <algorithm>
#include <map>

namespace triplane {

namespace {

bool is_unit_entry(const Polynomial& p) { return p.size() == 1 && p.lead().m.is_one(); }

int vector_degree(const Polynomial& v, const std::vector<int>& degrees) {
  const Term& t = v.lead();
  return t.m.deg + degrees[t.m.comp];
}

}  // namespace

GradedModule GradedModule::cokernel(const PolyMatrix& P) {
  GradedModule m;
  m.ring_ = P.ring();
  m.degrees_ = P.row_degrees();
  for (Polynomial& c : P.columns())
    if (!c.is_zero()) m.rels_.push_back(std::move(c));
  return m;
}

GradedModule GradedModule::free(RingPtr ring, std::vector<int> degrees) {
  GradedModule m;
  m.ring_ = std::move(ring);
  m.degrees_ = std::move(degrees);
  return m;
}

GradedModule GradedModule::quotient_ring(const Ideal& I) {
  GradedModule m;
  m.ring_ = I.ring();
  m.degrees_ = {0};
  m.rels_ = I.generators();
  return m;
}

GradedModule GradedModule::subquotient(RingPtr ring, std::vector<int> degrees, std::vector<Polynomial> generators,
                                       std::vector<Polynomial> relations) {
  GradedModule m;
  m.ring_ = std::move(ring);
  m.degrees_ = std::move(degrees);
  m.whole_ = false;
  for (auto& g : generators)
    if (!g.is_zero()) m.gens_.push_back(std::move(g));
  for (auto& q : relations)
    if (!q.is_zero()) m.rels_.push_back(std::move(q));
  return m;
}

PolyMatrix prune_presentation(const PolyMatrix& P0) {
  PolyMatrix P = P0;
  const RingPtr& r = P.ring();
  const PrimeField& k = r->field();
  for (;;) {
    int pi = -1, pj = -1;
    for (int j = 0; j < P.cols() && pi < 0; ++j)
      for (int i = 0; i < P.rows(); ++i)
        if (is_unit_entry(P.at(i, j))) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    // generator pi is expressed through the others by column pj
    const Coeff inv = k.inv(P.at(pi, pj).lead().c);
    for (int i = 0; i < P.rows(); ++i) {
      if (i == pi || P.at(i, pj).is_zero()) continue;
      const Polynomial f = P.at(i, pj).scale(inv);
      for (int j = 0; j < P.cols(); ++j)
        if (!P.at(pi, j).is_zero()) P.at(i, j) -= f * P.at(pi, j);
    }
    std::vector<int> rows, cols;
    for (int i = 0; i < P.rows(); ++i)
      if (i != pi) rows.push_back(i);
    for (int j = 0; j < P.cols(); ++j)
      if (j != pj) cols.push_back(j);
    P = P.submatrix(rows, cols);
  }
  std::vector<Polynomial> cols;
  for (int j = 0; j < P.cols(); ++j) {
    Polynomial c = P.column(j);
    if (c.is_zero()) continue;
    cols.push_back(std::move(c));
  }
  cols = minimalize_generators(cols, P.row_degrees());
  return PolyMatrix::from_columns(r, P.rows(), cols, P.row_degrees());
}

PolyMatrix syzygies(const PolyMatrix& M, const GroebnerOptions& opts) {
  const RingPtr& r = M.ring();
  std::vector<Polynomial> cols;
  std::vector<int> cdeg;
  for (int j = 0; j < M.cols(); ++j) {
    cols.push_back(M.column(j));
    cdeg.push_back(M.col_degrees()[j]);
  }
  std::vector<Polynomial> ker = kernel_mod(cols, cdeg, M.row_degrees(), {}, opts);
  ker = minimalize_generators(ker, cdeg, opts);
  return PolyMatrix::from_columns(r, M.cols(), ker, cdeg);
}

PolyMatrix GradedModule::presentation() const {
  if (whole_) {
    PolyMatrix P = PolyMatrix::from_columns(ring_, static_cast<int>(degrees_.size()), rels_, degrees_);
    return prune_presentation(P);
  }
  // generators K of (K + Q) / Q; relations are {a : Σ a_i k_i ∈ Q}
  std::vector<Polynomial> gens = minimalize_generators(gens_, degrees_);
  std::vector<int> gdeg;
  for (const Polynomial& g : gens) gdeg.push_back(vector_degree(g, degrees_));
  std::vector<Polynomial> qgb;
  if (!rels_.empty()) qgb = groebner(rels_, degrees_).elements;
  std::vector<Polynomial> ker = kernel_mod(gens, gdeg, degrees_, qgb);
  PolyMatrix P = PolyMatrix::from_columns(ring_, static_cast<int>(gens.size()), ker, gdeg);
  return prune_presentation(P);
}

LaurentPoly module_hilbert_numerator(const Ring& r, const std::vector<int>& degrees, const std::vector<Polynomial>& gb) {
  std::map<std::uint32_t, std::vector<Monomial>> per_comp;
  for (const Polynomial& g : gb)
    if (!g.is_zero()) per_comp[g.lead().m.comp].push_back(g.lead().m);
  LaurentPoly total;
  for (std::uint32_t c = 0; c < degrees.size(); ++c) {
    auto it = per_comp.find(c);
    LaurentPoly n = it == per_comp.end() ? LaurentPoly::one() : hilbert_numerator(r, it->second);
    total = total + n.shifted(degrees[c]);
  }
  return total;
}

HilbertData GradedModule::hilbert() const {
  const Ring& r = *ring_;
  if (!r.standard_grading()) throw UsageError("module hilbert: only standard-graded rings are supported");
  std::vector<Polynomial> qgb;
  if (!rels_.empty()) qgb = groebner(rels_, degrees_).elements;
  LaurentPoly num = module_hilbert_numerator(r, degrees_, qgb);
  if (!whole_) {
    std::vector<Polynomial> kgb = groebner(gens_, degrees_, {}, qgb).elements;
    num = num - module_hilbert_numerator(r, degrees_, kgb);
  }
  return hilbert_data_from_numerator(num, r.nvars());
}

long long GradedModule::graded_piece_dim(int d) const { return hilbert().hilbert_function(d); }

}  // namespace triplane
