#include "triplane/groebner/engine.hpp"

#include <algorithm>
#include <numeric>

namespace triplane {

namespace {

struct Elem {
  std::vector<Term> t;
  Monomial lt;
  std::uint64_t mask = 0;
  Coeff inv_lc = 1;
  int sugar = 0;
  bool active = true;
};

struct Stream {
  const Term* terms;
  std::size_t n;
  std::size_t pos;
  Monomial mult;
  Coeff coef;
};

struct HeapEntry {
  Monomial m;
  std::uint32_t stream;
};

Monomial times(const Monomial& a, const Monomial& b) {
  Monomial out;
  if (!mono::mul(a, b, out)) throw DomainError("monomial exponent exceeds 127 during reduction");
  return out;
}

/// Normal-form machinery shared by the engine and the standalone reducers.
class Reducer {
 public:
  explicit Reducer(const Ring& r) : r_(r), k_(r.field()) {}

  void add(int idx, const Elem& e) {
    if (by_comp_.size() <= e.lt.comp) by_comp_.resize(e.lt.comp + 1);
    by_comp_[e.lt.comp].push_back(idx);
  }
  void remove(int idx, const Elem& e) {
    auto& v = by_comp_[e.lt.comp];
    v.erase(std::remove(v.begin(), v.end(), idx), v.end());
  }

  int find(const Monomial& m, const std::vector<Elem>& G) const {
    if (m.comp >= by_comp_.size()) return -1;
    const std::uint64_t nm = ~mono::divmask(m);
    int best = -1;
    std::size_t best_len = 0;
    for (int idx : by_comp_[m.comp]) {
      const Elem& e = G[idx];
      if (e.mask & nm) continue;
      if (!mono::divides_exp(e.lt, m)) continue;
      if (best < 0 || e.t.size() < best_len) {
        best = idx;
        best_len = e.t.size();
      }
    }
    return best;
  }

  /// Sum of the streams, fully reduced. Terms that must not be reduced
  /// (e.g. a kept leading term) are handled by the caller.
  std::vector<Term> run(std::vector<Stream>& streams, const std::vector<Elem>& G) {
    heap_.clear();
    for (std::uint32_t s = 0; s < streams.size(); ++s) push_next(streams, s);
    std::vector<Term> out;
    while (!heap_.empty()) {
      const Monomial M = heap_.front().m;
      std::uint64_t acc = 0;
      while (!heap_.empty() && heap_.front().m == M) {
        std::pop_heap(heap_.begin(), heap_.end(), cmp_);
        const std::uint32_t s = heap_.back().stream;
        heap_.pop_back();
        Stream& st = streams[s];
        acc += static_cast<std::uint64_t>(st.coef) * st.terms[st.pos].c % k_.characteristic();
        ++st.pos;
        push_next(streams, s);
      }
      const Coeff c = static_cast<Coeff>(acc % k_.characteristic());
      if (c == 0) continue;
      const int idx = find(M, G);
      if (idx >= 0) {
        const Elem& g = G[idx];
        if (g.t.size() > 1) {
          streams.push_back({g.t.data(), g.t.size(), 1, mono::div(M, g.lt), k_.neg(k_.mul(c, g.inv_lc))});
          push_next(streams, static_cast<std::uint32_t>(streams.size() - 1));
        }
      } else {
        out.push_back({M, c});
      }
    }
    return out;
  }

 private:
  struct Cmp {
    const Ring* r;
    bool operator()(const HeapEntry& a, const HeapEntry& b) const { return r->compare(a.m, b.m) < 0; }
  };

  void push_next(std::vector<Stream>& streams, std::uint32_t s) {
    const Stream& st = streams[s];
    if (st.pos >= st.n) return;
    heap_.push_back({times(st.mult, st.terms[st.pos].m), s});
    std::push_heap(heap_.begin(), heap_.end(), cmp_);
  }

  const Ring& r_;
  const PrimeField& k_;
  std::vector<std::vector<int>> by_comp_;
  std::vector<HeapEntry> heap_;
  Cmp cmp_{&r_};
};

struct Pair {
  int i, j;
  Monomial lcm;
  int sugar;
  bool alive = true;
};

int term_sugar(const std::vector<Term>& t, const std::vector<int>& shifts) {
  int s = INT_MIN;
  for (const Term& x : t) s = std::max(s, x.m.deg + (x.m.comp < shifts.size() ? shifts[x.m.comp] : 0));
  return s;
}

class Engine {
 public:
  Engine(RingPtr ring, std::vector<int> shifts, const GroebnerOptions& opts)
      : ring_(std::move(ring)), r_(*ring_), k_(r_.field()), shifts_(std::move(shifts)), opts_(opts), red_(r_) {}

  ModuleGB run(const std::vector<Polynomial>& gens, const std::vector<Polynomial>& seeds) {
    ideal_ = true;
    for (const auto* list : {&gens, &seeds})
      for (const Polynomial& f : *list)
        for (const Term& t : f.terms())
          if (t.m.comp) ideal_ = false;

    for (const Polynomial& s : seeds) {
      if (s.is_zero()) continue;
      Elem e = make_elem(s.terms(), 0);
      e.sugar = term_sugar(e.t, shifts_);
      if (red_.find(e.lt, G_) >= 0) continue;
      insert_plain(std::move(e));
    }

    // inputs in degree order, stable in input order
    std::vector<int> order;
    std::vector<int> in_sugar(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].is_zero()) continue;
      in_sugar[i] = term_sugar(gens[i].terms(), shifts_);
      order.push_back(static_cast<int>(i));
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return in_sugar[a] < in_sugar[b]; });

    ModuleGB out;
    out.ring = ring_;
    out.shifts = shifts_;
    std::size_t next_gen = 0;
    bool stopped = false;
    for (;;) {
      int d = INT_MAX;
      for (const Pair& p : pairs_)
        if (p.alive) d = std::min(d, p.sugar);
      if (next_gen < order.size()) d = std::min(d, in_sugar[order[next_gen]]);
      if (d == INT_MAX) break;
      if (d > opts_.degree_limit) {
        stopped = true;
        break;
      }
      stats_.max_degree = std::max(stats_.max_degree, d);

      std::vector<int> batch;
      for (std::size_t q = 0; q < pairs_.size(); ++q)
        if (pairs_[q].alive && pairs_[q].sugar == d) batch.push_back(static_cast<int>(q));
      std::sort(batch.begin(), batch.end(), [&](int a, int b) {
        const int c = r_.compare(pairs_[a].lcm, pairs_[b].lcm);
        if (c) return c < 0;
        if (pairs_[a].i != pairs_[b].i) return pairs_[a].i < pairs_[b].i;
        return pairs_[a].j < pairs_[b].j;
      });
      for (int q : batch) {
        if (!pairs_[q].alive) continue;
        pairs_[q].alive = false;
        const Pair p = pairs_[q];
        step();
        std::vector<Term> h = spoly_reduce(p.i, p.j);
        if (h.empty()) {
          ++stats_.zero_reductions;
          continue;
        }
        add_new(make_elem(h, p.sugar));
      }
      compact_pairs();

      while (next_gen < order.size() && in_sugar[order[next_gen]] == d) {
        const int gi = order[next_gen++];
        step();
        std::vector<Stream> st{{gens[gi].terms().data(), gens[gi].size(), 0, Monomial{}, 1}};
        std::vector<Term> h = red_.run(st, G_);
        if (h.empty()) {
          ++stats_.zero_reductions;
          continue;
        }
        out.minimal_inputs.push_back(gi);
        add_new(make_elem(h, d));
      }

      if (opts_.stop_when_artinian && artinian()) {
        out.artinian = true;
        stopped = true;
        break;
      }
    }
    if (stopped) {
      bool pending = next_gen < order.size();
      for (const Pair& p : pairs_) pending = pending || p.alive;
      out.complete = !pending;
    }
    if (!out.artinian && opts_.stop_when_artinian) out.artinian = artinian();

    // final basis: active elements, tails reduced
    std::vector<int> act;
    for (std::size_t i = 0; i < G_.size(); ++i)
      if (G_[i].active) act.push_back(static_cast<int>(i));
    std::sort(act.begin(), act.end(), [&](int a, int b) { return r_.compare(G_[a].lt, G_[b].lt) < 0; });
    for (int i : act) {
      Elem& e = G_[i];
      std::vector<Term> poly;
      if (opts_.reduce_tails && e.t.size() > 1) {
        std::vector<Stream> st{{e.t.data(), e.t.size(), 1, Monomial{}, 1}};
        std::vector<Term> tail = red_.run(st, G_);
        poly.reserve(tail.size() + 1);
        poly.push_back(e.t.front());
        poly.insert(poly.end(), tail.begin(), tail.end());
      } else {
        poly = e.t;
      }
      out.elements.push_back(Polynomial::from_sorted(ring_, std::move(poly)));
    }
    std::sort(out.minimal_inputs.begin(), out.minimal_inputs.end());
    out.stats = stats_;
    return out;
  }

 private:
  void step() {
    ++stats_.steps;
    if (opts_.step_budget > 0 && stats_.steps > opts_.step_budget) {
      std::size_t pending = 0;
      for (const Pair& p : pairs_) pending += p.alive;
      throw BudgetExceeded("groebner: step budget of " + std::to_string(opts_.step_budget) +
                               " exceeded (basis size " + std::to_string(G_.size()) + ", pending pairs " +
                               std::to_string(pending) + ", degree " + std::to_string(stats_.max_degree) + ")",
                           stats_, G_.size(), pending);
    }
  }

  Elem make_elem(const std::vector<Term>& t, int sugar) {
    Elem e;
    e.t = t;
    const Coeff lc = e.t.front().c;
    if (lc != 1) {
      const Coeff inv = k_.inv(lc);
      for (Term& x : e.t) x.c = k_.mul(x.c, inv);
    }
    e.lt = e.t.front().m;
    e.mask = mono::divmask(e.lt);
    e.sugar = sugar;
    return e;
  }

  int lcm_deg(const Monomial& l) const { return r_.weighted_degree(l); }

  void insert_plain(Elem e) {
    const int idx = static_cast<int>(G_.size());
    G_.push_back(std::move(e));
    red_.add(idx, G_[idx]);
  }

  std::vector<Term> spoly_reduce(int i, int j) {
    const Elem& a = G_[i];
    const Elem& b = G_[j];
    Monomial l = mono::lcm_exp(a.lt, b.lt);
    l.deg = lcm_deg(l);
    std::vector<Stream> st;
    if (a.t.size() > 1) st.push_back({a.t.data(), a.t.size(), 1, mono::div(l, a.lt), 1});
    if (b.t.size() > 1) st.push_back({b.t.data(), b.t.size(), 1, mono::div(l, b.lt), k_.neg(1)});
    return red_.run(st, G_);
  }

  Monomial pair_lcm(const Monomial& a, const Monomial& b) const {
    Monomial l = mono::lcm_exp(a, b);
    l.deg = lcm_deg(l);
    return l;
  }

  int pair_sugar(int i, int j, const Monomial& l) const {
    const Elem& a = G_[i];
    const Elem& b = G_[j];
    return std::max(a.sugar + l.deg - a.lt.deg, b.sugar + l.deg - b.lt.deg);
  }

  /// Gebauer–Möller update for the new element h.
  void add_new(Elem e) {
    const int h = static_cast<int>(G_.size());
    G_.push_back(std::move(e));
    const Elem& H = G_[h];

    struct Cand {
      int g;
      Monomial lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Cand> C;
    for (int g = 0; g < h; ++g) {
      if (!G_[g].active || G_[g].lt.comp != H.lt.comp) continue;
      C.push_back({g, pair_lcm(G_[g].lt, H.lt), ideal_ && mono::coprime(G_[g].lt, H.lt)});
    }
    // criterion M/F: drop (g,h) when another candidate's lcm divides its lcm;
    // equal lcms keep the last one, coprime pairs always survive this stage
    for (std::size_t a = 0; a < C.size(); ++a) {
      if (C[a].coprime) continue;
      for (std::size_t b = 0; b < C.size(); ++b) {
        if (a == b || !C[b].keep) continue;
        if (!mono::divides_exp(C[b].lcm, C[a].lcm)) continue;
        if (C[b].lcm == C[a].lcm && b < a) continue;
        C[a].keep = false;
        break;
      }
    }
    // old pairs: chain criterion
    for (Pair& p : pairs_) {
      if (!p.alive || p.lcm.comp != H.lt.comp) continue;
      if (!mono::divides_exp(H.lt, p.lcm)) continue;
      const Monomial li = pair_lcm(G_[p.i].lt, H.lt);
      const Monomial lj = pair_lcm(G_[p.j].lt, H.lt);
      if (li == p.lcm || lj == p.lcm) continue;
      p.alive = false;
      ++stats_.pairs_pruned;
    }
    for (const Cand& c : C) {
      if (!c.keep || c.coprime) {
        ++stats_.pairs_pruned;
        continue;
      }
      pairs_.push_back({c.g, h, c.lcm, pair_sugar(c.g, h, c.lcm)});
      ++stats_.pairs_created;
    }
    // retire elements whose leading term is now redundant
    for (int g = 0; g < h; ++g) {
      if (G_[g].active && mono::divides(H.lt, G_[g].lt)) {
        G_[g].active = false;
        red_.remove(g, G_[g]);
      }
    }
    red_.add(h, G_[h]);
  }

  void compact_pairs() {
    pairs_.erase(std::remove_if(pairs_.begin(), pairs_.end(), [](const Pair& p) { return !p.alive; }), pairs_.end());
  }

  bool artinian() const {
    const int n = r_.nvars();
    std::uint32_t covered = 0;
    for (const Elem& e : G_) {
      if (!e.active || e.lt.comp != 0) continue;
      int var = -1;
      bool pure = true;
      for (int v = 0; v < n; ++v)
        if (e.lt.exp(v)) {
          if (var >= 0) pure = false;
          var = v;
        }
      if (var < 0) return true;  // a unit
      if (pure) covered |= 1u << var;
    }
    return covered == (n >= 32 ? ~0u : ((1u << n) - 1));
  }

  RingPtr ring_;
  const Ring& r_;
  const PrimeField& k_;
  std::vector<int> shifts_;
  GroebnerOptions opts_;
  Reducer red_;
  std::vector<Elem> G_;
  std::vector<Pair> pairs_;
  GroebnerStats stats_;
  bool ideal_ = true;
};

RingPtr ring_of(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  for (const auto* list : {&a, &b})
    for (const Polynomial& f : *list)
      if (f.ring()) return f.ring();
  return nullptr;
}

}  // namespace

ModuleGB groebner(const std::vector<Polynomial>& gens, std::vector<int> shifts, const GroebnerOptions& opts,
                  const std::vector<Polynomial>& seeds) {
  RingPtr ring = ring_of(gens, seeds);
  if (!ring) {
    ModuleGB empty;
    empty.shifts = std::move(shifts);
    return empty;
  }
  for (const auto* list : {&gens, &seeds})
    for (const Polynomial& f : *list)
      if (f.ring() != ring && !(*f.ring() == *ring)) throw UsageError("groebner: generators from different rings");
  Engine eng(ring, std::move(shifts), opts);
  return eng.run(gens, seeds);
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  if (f.is_zero()) return f;
  const Ring& r = *f.ring();
  const PrimeField& k = r.field();
  std::vector<Elem> G;
  Reducer red(r);
  for (const Polynomial& g : basis) {
    if (g.is_zero()) continue;
    Elem e;
    e.t = g.terms();
    e.lt = e.t.front().m;
    e.mask = mono::divmask(e.lt);
    e.inv_lc = k.inv(e.t.front().c);
    G.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < G.size(); ++i) red.add(static_cast<int>(i), G[i]);
  std::vector<Stream> st{{f.terms().data(), f.size(), 0, Monomial{}, 1}};
  return Polynomial::from_sorted(f.ring(), red.run(st, G));
}

Polynomial normal_form(const Polynomial& f, const ModuleGB& G) { return normal_form(f, G.elements); }

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw UsageError("s_polynomial: zero input");
  const Ring& r = *f.ring();
  const PrimeField& k = r.field();
  const Monomial& a = f.lead().m;
  const Monomial& b = g.lead().m;
  if (a.comp != b.comp) return Polynomial(f.ring());
  Monomial l = mono::lcm_exp(a, b);
  l.deg = r.weighted_degree(l);
  Monomial ma = mono::div(l, a), mb = mono::div(l, b);
  return f.mul_term(ma, k.inv(f.lead().c)) - g.mul_term(mb, k.inv(g.lead().c));
}

std::vector<Polynomial> kernel_mod(const std::vector<Polynomial>& columns, const std::vector<int>& column_degrees,
                                   const std::vector<int>& shifts, const std::vector<Polynomial>& quotient_gb,
                                   const GroebnerOptions& opts) {
  if (columns.size() != column_degrees.size()) throw UsageError("kernel_mod: degree list mismatch");
  RingPtr ring = ring_of(columns, quotient_gb);
  if (!ring) return {};
  const std::uint32_t m = static_cast<std::uint32_t>(shifts.size());
  for (const auto* list : {&columns, &quotient_gb})
    for (const Polynomial& f : *list)
      for (const Term& t : f.terms())
        if (t.m.comp >= m) throw UsageError("kernel_mod: component outside the target module");
  std::vector<int> all_shifts = shifts;
  all_shifts.insert(all_shifts.end(), column_degrees.begin(), column_degrees.end());
  std::vector<Polynomial> gens;
  gens.reserve(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    std::vector<Term> t = columns[j].terms();
    Monomial tag;
    tag.comp = m + static_cast<std::uint32_t>(j);
    t.push_back({tag, 1});
    gens.push_back(Polynomial::from_sorted(ring, std::move(t)));
  }
  GroebnerOptions o = opts;
  o.reduce_tails = false;
  ModuleGB gb = groebner(gens, all_shifts, o, quotient_gb);
  std::vector<Polynomial> ker;
  for (const Polynomial& e : gb.elements) {
    if (e.lead().m.comp < m) continue;
    std::vector<Term> t = e.terms();
    for (Term& x : t) x.m.comp -= m;
    ker.push_back(Polynomial::from_sorted(ring, std::move(t)));
  }
  return ker;
}

std::vector<Polynomial> minimalize_generators(const std::vector<Polynomial>& gens, const std::vector<int>& shifts,
                                              const GroebnerOptions& opts) {
  // an input is redundant iff it reduces to zero at its own degree
  GroebnerOptions o = opts;
  o.reduce_tails = false;
  int top = INT_MIN;
  for (const Polynomial& g : gens)
    for (const Term& t : g.terms())
      top = std::max(top, t.m.deg + (t.m.comp < shifts.size() ? shifts[t.m.comp] : 0));
  if (top != INT_MIN) o.degree_limit = std::min(o.degree_limit, top);
  ModuleGB gb = groebner(gens, shifts, o);
  std::vector<Polynomial> out;
  for (int i : gb.minimal_inputs) out.push_back(gens[i]);
  return out;
}

}  // namespace triplane
