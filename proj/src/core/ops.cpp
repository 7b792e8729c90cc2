#include "triplane/core/ops.hpp"

#include <algorithm>

namespace triplane {

Coeff random_scalar(const PrimeField& k, Rng& rng) {
  return static_cast<Coeff>(rng.uniform(k.characteristic()));
}

Coeff random_nonzero_scalar(const PrimeField& k, Rng& rng) {
  return static_cast<Coeff>(1 + rng.uniform(k.characteristic() - 1));
}

std::vector<Monomial> monomials_of_degree(const Ring& r, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  const int n = r.nvars();
  std::vector<int> e(n, 0);
  // depth-first over exponent vectors with the remaining weighted degree
  auto rec = [&](auto& self, int v, int left) -> void {
    if (v == n) {
      if (left == 0) out.push_back(r.monomial(e));
      return;
    }
    const int w = r.weights()[v];
    for (int k = left / w; k >= 0; --k) {
      e[v] = k;
      self(self, v + 1, left - k * w);
    }
    e[v] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return r.compare(a, b) > 0; });
  return out;
}

Polynomial random_form(const RingPtr& r, int d, Rng& rng) {
  std::vector<Term> terms;
  for (const Monomial& m : monomials_of_degree(*r, d)) {
    const Coeff c = random_scalar(r->field(), rng);
    if (c) terms.push_back({m, c});
  }
  return Polynomial::from_sorted(r, std::move(terms));
}

Polynomial random_linear_form(const RingPtr& r, Rng& rng) {
  if (r->nvars() < 1) throw UsageError("random_linear_form: ring has no variables");
  for (;;) {
    std::vector<Term> terms;
    for (int v = 0; v < r->nvars(); ++v) {
      const Coeff c = random_scalar(r->field(), rng);
      if (c) terms.push_back({r->variable(v), c});
    }
    if (!terms.empty()) return Polynomial::from_terms(r, std::move(terms));
  }
}

PolyMatrix random_scalar_matrix(const RingPtr& r, int rows, int cols, Rng& rng) {
  PolyMatrix m(r, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = Polynomial::constant(r, random_scalar(r->field(), rng));
  return m;
}

PolyMatrix jacobian(const Polynomial& f) { return jacobian(std::vector<Polynomial>{f}); }

PolyMatrix jacobian(const std::vector<Polynomial>& fs) {
  if (fs.empty()) throw UsageError("jacobian: empty list");
  const RingPtr& r = fs.front().ring();
  const int n = r->nvars();
  std::vector<int> rd(fs.size()), cd(n);
  for (std::size_t i = 0; i < fs.size(); ++i) rd[i] = -std::max(fs[i].degree(), 0);
  for (int v = 0; v < n; ++v) cd[v] = -r->weights()[v];
  PolyMatrix j(r, static_cast<int>(fs.size()), n, rd, cd);
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (int v = 0; v < n; ++v) j.at(static_cast<int>(i), v) = fs[i].derivative(v);
  return j;
}

Polynomial substitute(const Polynomial& f, const RingPtr& target, const std::vector<Polynomial>& images) {
  const Ring& src = *f.ring();
  if (static_cast<int>(images.size()) != src.nvars()) throw UsageError("substitute: need one image per variable");
  for (const auto& img : images)
    if (img.ring() != target && !(*img.ring() == *target)) throw UsageError("substitute: image outside the target ring");
  const PrimeField& kt = target->field();
  if (!(kt == src.field())) throw UsageError("substitute: rings over different fields");
  // cache powers of each image
  std::vector<std::vector<Polynomial>> powers(src.nvars());
  auto power = [&](int v, int e) -> const Polynomial& {
    auto& pv = powers[v];
    if (pv.empty()) pv.push_back(Polynomial::constant(target, 1));
    while (static_cast<int>(pv.size()) <= e) pv.push_back(pv.back() * images[v]);
    return pv[e];
  };
  Polynomial out(target);
  for (const Term& t : f.terms()) {
    Polynomial p = Polynomial::constant(target, t.c, t.m.comp);
    for (int v = 0; v < src.nvars(); ++v) {
      const int e = t.m.exp(v);
      if (e) p = p * power(v, e);
      if (p.is_zero()) break;
    }
    out += p;
  }
  return out;
}

Polynomial substitute(const Polynomial& f, const RingPtr& target, const std::map<std::string, std::string>& names) {
  const Ring& src = *f.ring();
  std::vector<Polynomial> images;
  for (int v = 0; v < src.nvars(); ++v) {
    auto it = names.find(src.variables()[v]);
    if (it == names.end()) throw UsageError("substitute: no image for variable " + src.variables()[v]);
    const int w = target->index_of(it->second);
    if (w < 0) throw UsageError("substitute: target ring has no variable " + it->second);
    images.push_back(Polynomial::variable(target, w));
  }
  return substitute(f, target, images);
}

PolyMatrix substitute(const PolyMatrix& m, const RingPtr& target, const std::vector<Polynomial>& images) {
  PolyMatrix out(target, m.rows(), m.cols(), m.row_degrees(), m.col_degrees());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = substitute(m.at(i, j), target, images);
  return out;
}

}  // namespace triplane
