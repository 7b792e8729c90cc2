#include "triplane/groebner/ideal.hpp"

#include <algorithm>
#include <numeric>

#include "triplane/core/ops.hpp"

namespace triplane {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (!g.ring()) throw UsageError("ideal: generator without a ring");
    if (g.ring() != ring_ && !(*g.ring() == *ring_)) throw UsageError("ideal: generator from another ring");
    for (const Term& t : g.terms())
      if (t.m.comp) throw UsageError("ideal: generator is a module vector");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

const GroebnerBasis& Ideal::gb(const GroebnerOptions& opts) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->gb) return *cache_->gb;
  }
  auto computed = std::make_shared<const GroebnerBasis>(groebner(gens_, {}, opts));
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->gb) {
    if (!computed->ring) {
      auto fixed = std::make_shared<GroebnerBasis>(*computed);
      fixed->ring = ring_;
      computed = fixed;
    }
    cache_->gb = computed;
  }
  return *cache_->gb;
}

bool Ideal::has_cached_gb() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  return static_cast<bool>(cache_->gb);
}

void Ideal::set_gb(GroebnerBasis g) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->gb) cache_->gb = std::make_shared<const GroebnerBasis>(std::move(g));
}

bool Ideal::is_zero() const { return gens_.empty(); }

bool Ideal::is_unit() const {
  const auto& g = gb();
  return !g.elements.empty() && g.elements.front().lead().m.is_one();
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f, gb()).is_zero(); }

bool Ideal::contains(const Ideal& J) const {
  return std::all_of(J.gens_.begin(), J.gens_.end(), [&](const Polynomial& g) { return contains(g); });
}

std::vector<Polynomial> Ideal::minimal_generators() const { return minimalize_generators(gens_, {}); }

Ideal Ideal::operator+(const Ideal& J) const {
  std::vector<Polynomial> g = gens_;
  g.insert(g.end(), J.gens_.begin(), J.gens_.end());
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::operator*(const Ideal& J) const {
  std::vector<Polynomial> g;
  for (const auto& a : gens_)
    for (const auto& b : J.gens_) g.push_back(a * b);
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::in_ring(const RingPtr& target) const {
  std::vector<Polynomial> g;
  for (const auto& f : gens_) g.push_back(f.in_ring(target));
  return Ideal(target, std::move(g));
}

std::string Ideal::to_string() const {
  std::string s = "ideal(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

GroebnerBasis buchberger(const Ideal& I, const GroebnerOptions& opts) { return I.gb(opts); }

namespace {

/// Moves f into `target`, whose variable t is variable perm[t] of f's ring.
Polynomial permute_into(const Polynomial& f, const RingPtr& target, const std::vector<int>& perm) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  const int n = target->nvars();
  for (const Term& t : f.terms()) {
    Monomial m;
    for (int v = 0; v < n; ++v) m.set_exp(v, perm[v] >= 0 ? t.m.exp(perm[v]) : 0);
    m.deg = target->weighted_degree(m);
    terms.push_back({m, t.c});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

void require_same_ring(const Ideal& I, const Ideal& J) {
  if (I.ring() != J.ring() && !(*I.ring() == *J.ring())) throw UsageError("ideals live in different rings");
}

std::vector<Polynomial> replicate(const std::vector<Polynomial>& basis, std::uint32_t copies) {
  std::vector<Polynomial> out;
  for (std::uint32_t c = 0; c < copies; ++c)
    for (const Polynomial& g : basis) out.push_back(c == 0 ? g : g.with_comp(c));
  return out;
}

}  // namespace

Ideal eliminate(const Ideal& I, const std::vector<int>& block, const GroebnerOptions& opts) {
  const RingPtr& r = I.ring();
  const int n = r->nvars();
  std::vector<bool> in_block(n, false);
  for (int v : block) {
    if (v < 0 || v >= n) throw UsageError("eliminate: variable index out of range");
    in_block[v] = true;
  }
  std::vector<int> perm;  // new position -> old variable
  for (int v : block) perm.push_back(v);
  for (int v = 0; v < n; ++v)
    if (!in_block[v]) perm.push_back(v);
  std::vector<std::string> names;
  std::vector<int> weights;
  for (int v : perm) {
    names.push_back(r->variables()[v]);
    weights.push_back(r->weights()[v]);
  }
  const int k = static_cast<int>(block.size());
  std::vector<int> blocks{k};
  if (n - k > 0) blocks.push_back(n - k);
  RingPtr er = std::make_shared<const Ring>(r->field(), names, MonomialOrder::BlockElimination, weights, blocks);
  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.generators()) gens.push_back(permute_into(g, er, perm));
  ModuleGB gb = groebner(gens, {}, opts);
  std::vector<int> back(n);  // old variable -> new position
  for (int t = 0; t < n; ++t) back[perm[t]] = t;
  std::vector<Polynomial> out;
  for (const Polynomial& g : gb.elements) {
    bool free = true;
    for (const Term& t : g.terms()) {
      for (int v = 0; v < k && free; ++v)
        if (t.m.exp(v)) free = false;
      if (!free) break;
    }
    if (free) out.push_back(permute_into(g, r, back));
  }
  return Ideal(r, std::move(out));
}

Ideal intersect(const Ideal& I, const Ideal& J, const GroebnerOptions& opts) {
  require_same_ring(I, J);
  const RingPtr& r = I.ring();
  if (I.is_zero() || J.is_zero()) return Ideal(r, {});
  std::vector<Polynomial> seeds = I.gb(opts).elements;
  for (const Polynomial& g : J.gb(opts).elements) seeds.push_back(g.with_comp(1));
  Polynomial col = Polynomial::constant(r, 1, 0) + Polynomial::constant(r, 1, 1);
  std::vector<Polynomial> ker = kernel_mod({col}, {0}, {0, 0}, seeds, opts);
  return Ideal(r, std::move(ker));
}

Ideal quotient(const Ideal& I, const Ideal& J, const GroebnerOptions& opts) {
  require_same_ring(I, J);
  const RingPtr& r = I.ring();
  if (J.is_zero()) return Ideal::unit(r);
  const auto& js = J.generators();
  const std::uint32_t m = static_cast<std::uint32_t>(js.size());
  std::vector<int> shifts(m);
  Polynomial col(r);
  for (std::uint32_t c = 0; c < m; ++c) {
    shifts[c] = -js[c].degree();
    col += js[c].with_comp(c);
  }
  std::vector<Polynomial> ker = kernel_mod({col}, {0}, shifts, replicate(I.gb(opts).elements, m), opts);
  return Ideal(r, std::move(ker));
}

Ideal saturate(const Ideal& I, const Ideal& J, const GroebnerOptions& opts) {
  Ideal cur = I;
  for (;;) {
    Ideal next = quotient(cur, J, opts);
    if (cur.contains(next)) return cur;
    cur = next;
  }
}

Ideal irrelevant_ideal(const RingPtr& ring) {
  std::vector<Polynomial> g;
  for (int v = 0; v < ring->nvars(); ++v) g.push_back(Polynomial::variable(ring, v));
  return Ideal(ring, std::move(g));
}

Ideal saturate_irrelevant(const Ideal& I, const GroebnerOptions& opts) {
  return saturate(I, irrelevant_ideal(I.ring()), opts);
}

Ideal minors(const PolyMatrix& M, int k) {
  const RingPtr& r = M.ring();
  if (k < 0 || k > std::min(M.rows(), M.cols())) throw UsageError("minors: size exceeds the matrix");
  if (k == 0) return Ideal::unit(r);
  std::vector<Polynomial> out;
  std::vector<int> rs(k), cs(k);
  auto next_comb = [](std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    return true;
  };
  std::iota(rs.begin(), rs.end(), 0);
  do {
    std::iota(cs.begin(), cs.end(), 0);
    do {
      Polynomial d = determinant(M.submatrix(rs, cs));
      if (!d.is_zero()) out.push_back(std::move(d));
    } while (next_comb(cs, M.cols()));
  } while (next_comb(rs, M.rows()));
  return Ideal(r, std::move(out));
}

Ideal ring_map_kernel(const std::vector<Polynomial>& targets, const Ideal& I, const RingPtr& source,
                      const GroebnerOptions& opts) {
  const RingPtr& S = I.ring();
  if (static_cast<int>(targets.size()) != source->nvars())
    throw UsageError("ring_map_kernel: need one target per source variable");
  if (!(source->field() == S->field())) throw UsageError("ring_map_kernel: rings over different fields");
  int d = -1;
  for (const Polynomial& q : targets) {
    if (q.ring() != S && !(*q.ring() == *S)) throw UsageError("ring_map_kernel: target outside the ideal's ring");
    if (q.is_zero()) continue;
    if (!q.is_homogeneous()) throw UsageError("ring_map_kernel: inhomogeneous target");
    if (d >= 0 && q.degree() != d) throw UsageError("ring_map_kernel: targets of different degrees");
    d = q.degree();
  }
  if (d < 0) d = 1;
  const int ns = S->nvars(), nt = source->nvars();
  if (ns + nt > kMaxVars) throw UsageError("ring_map_kernel: too many variables for the graph ring");
  std::vector<std::string> names = S->variables();
  std::vector<int> weights = S->weights();
  for (int v = 0; v < nt; ++v) {
    std::string nm = source->variables()[v];
    while (std::find(names.begin(), names.end(), nm) != names.end()) nm += "'";
    names.push_back(nm);
    weights.push_back(d);
  }
  RingPtr G = std::make_shared<const Ring>(S->field(), names, MonomialOrder::BlockElimination, weights,
                                           std::vector<int>{ns, nt});
  std::vector<int> from_s(ns + nt, -1);
  for (int v = 0; v < ns; ++v) from_s[v] = v;
  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.generators()) gens.push_back(permute_into(g, G, from_s));
  for (int v = 0; v < nt; ++v)
    gens.push_back(Polynomial::variable(G, ns + v) - permute_into(targets[v], G, from_s));
  ModuleGB gb = groebner(gens, {}, opts);
  std::vector<int> to_source(nt);
  for (int v = 0; v < nt; ++v) to_source[v] = ns + v;
  std::vector<Polynomial> out;
  for (const Polynomial& g : gb.elements) {
    bool free = true;
    for (const Term& t : g.terms()) {
      for (int v = 0; v < ns && free; ++v)
        if (t.m.exp(v)) free = false;
      if (!free) break;
    }
    if (free) out.push_back(permute_into(g, source, to_source));
  }
  return Ideal(source, std::move(out));
}

std::vector<Monomial> leading_monomials(const std::vector<Polynomial>& basis) {
  std::vector<Monomial> out;
  for (const Polynomial& g : basis)
    if (!g.is_zero()) out.push_back(g.lead().m);
  return out;
}

HilbertData hilbert(const Ideal& I, const GroebnerOptions& opts) {
  const Ring& r = *I.ring();
  if (!r.standard_grading()) throw UsageError("hilbert: only standard-graded rings are supported");
  if (!I.is_homogeneous()) throw UsageError("hilbert: ideal is not homogeneous");
  return hilbert_data_from_numerator(hilbert_numerator(r, leading_monomials(I.gb(opts).elements)), r.nvars());
}

int codimension(const Ideal& I) {
  const HilbertData h = hilbert(I);
  return h.empty() ? I.ring()->nvars() + 1 : I.ring()->nvars() - h.krull_dim;
}

Ideal singular_locus(const Ideal& I, const GroebnerOptions& opts) {
  const int c = I.ring()->nvars() - std::max(hilbert(I, opts).krull_dim, 0);
  if (I.is_zero()) return Ideal::unit(I.ring());
  const PolyMatrix jac = jacobian(I.generators());
  if (c > std::min(jac.rows(), jac.cols())) return I;
  return I + minors(jac, c);
}

bool is_projectively_empty(const Ideal& I, const GroebnerOptions& opts) {
  if (!I.is_homogeneous()) throw UsageError("is_projectively_empty: ideal is not homogeneous");
  if (I.is_zero()) return I.ring()->nvars() == 0;
  if (I.has_cached_gb()) return hilbert(I).krull_dim <= 0;
  GroebnerOptions o = opts;
  o.stop_when_artinian = true;
  return groebner(I.generators(), {}, o).artinian;
}

}  // namespace triplane
