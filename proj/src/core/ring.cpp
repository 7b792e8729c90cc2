#include "triplane/core/ring.hpp"

#include <numeric>
#include <set>

namespace triplane {

std::string to_string(MonomialOrder o) {
  switch (o) {
    case MonomialOrder::GRevLex:
      return "grevlex";
    case MonomialOrder::Lex:
      return "lex";
    case MonomialOrder::BlockElimination:
      return "block";
  }
  return "?";
}

MonomialOrder order_from_string(std::string_view s) {
  if (s == "grevlex") return MonomialOrder::GRevLex;
  if (s == "lex") return MonomialOrder::Lex;
  if (s == "block" || s == "elimination") return MonomialOrder::BlockElimination;
  throw UsageError("unknown monomial order '" + std::string(s) + "'");
}

Ring::Ring(PrimeField field, std::vector<std::string> variables, MonomialOrder order,
           std::vector<int> weights, std::vector<int> blocks)
    : field_(field), vars_(std::move(variables)), weights_(std::move(weights)),
      blocks_(std::move(blocks)), order_(order) {
  const int n = nvars();
  if (n > kMaxVars) throw UsageError("ring: at most 16 variables are supported");
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty()) throw UsageError("ring: empty variable name");
    if (!seen.insert(v).second) throw UsageError("ring: duplicate variable '" + v + "'");
  }
  if (weights_.empty()) weights_.assign(n, 1);
  if (static_cast<int>(weights_.size()) != n) throw UsageError("ring: weight count differs from variable count");
  for (int w : weights_) {
    if (w <= 0) throw UsageError("ring: weights must be positive");
    if (w != 1) unit_weights_ = false;
  }
  if (order_ == MonomialOrder::BlockElimination) {
    if (blocks_.empty()) throw UsageError("ring: block order needs block sizes");
    int total = 0;
    for (int b : blocks_) {
      if (b <= 0) throw UsageError("ring: block sizes must be positive");
      total += b;
    }
    if (total != n) throw UsageError("ring: block sizes must add up to the number of variables");
    int first = 0;
    for (int b : blocks_) {
      BlockMask bm{{0, 0}, first, first + b - 1};
      for (int v = first; v < first + b; ++v) bm.w[v >> 3] |= 0xffULL << ((v & 7) * 8);
      block_masks_.push_back(bm);
      first += b;
    }
  } else {
    blocks_.clear();
  }
}

int Ring::index_of(std::string_view name) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars_[i] == name) return i;
  return -1;
}

Monomial Ring::monomial(const std::vector<int>& exps, std::uint32_t comp) const {
  if (static_cast<int>(exps.size()) != nvars()) throw UsageError("monomial: exponent vector has wrong length");
  Monomial m;
  m.comp = comp;
  for (int v = 0; v < nvars(); ++v) {
    if (exps[v] < 0 || exps[v] > kMaxExponent) throw UsageError("monomial: exponent out of range [0,127]");
    m.set_exp(v, exps[v]);
    m.deg += exps[v] * weights_[v];
  }
  return m;
}

Monomial Ring::variable(int v) const {
  Monomial m;
  m.set_exp(v, 1);
  m.deg = weights_[v];
  return m;
}

std::vector<int> Ring::exponents(const Monomial& m) const {
  std::vector<int> e(nvars());
  for (int v = 0; v < nvars(); ++v) e[v] = m.exp(v);
  return e;
}

int Ring::weighted_degree(const Monomial& m) const {
  int d = 0;
  for (int v = 0; v < nvars(); ++v) d += m.exp(v) * weights_[v];
  return d;
}

std::string Ring::monomial_string(const Monomial& m) const {
  std::string s;
  for (int v = 0; v < nvars(); ++v) {
    const int e = m.exp(v);
    if (!e) continue;
    if (!s.empty()) s += '*';
    s += vars_[v];
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

int Ring::block_compare(const Monomial& a, const Monomial& b) const {
  for (const auto& bm : block_masks_) {
    const std::uint64_t a0 = a.w[0] & bm.w[0], a1 = a.w[1] & bm.w[1];
    const std::uint64_t b0 = b.w[0] & bm.w[0], b1 = b.w[1] & bm.w[1];
    if (a0 == b0 && a1 == b1) continue;
    int da = 0, db = 0;
    for (int v = bm.first; v <= bm.last; ++v) {
      da += a.exp(v) * weights_[v];
      db += b.exp(v) * weights_[v];
    }
    if (da != db) return da > db ? 1 : -1;
    const std::uint64_t aw[2] = {a0, a1}, bw[2] = {b0, b1};
    return revlex(aw, bw);
  }
  return 0;
}

bool Ring::compatible(const Ring& o) const {
  return field_ == o.field_ && vars_ == o.vars_ && weights_ == o.weights_;
}

bool Ring::operator==(const Ring& o) const {
  return compatible(o) && order_ == o.order_ && blocks_ == o.blocks_;
}

RingPtr make_ring(std::uint32_t prime, std::vector<std::string> variables, MonomialOrder order,
                  std::vector<int> weights, std::vector<int> blocks) {
  return std::make_shared<const Ring>(PrimeField(prime), std::move(variables), order, std::move(weights),
                                      std::move(blocks));
}

std::vector<std::string> indexed_names(std::string_view prefix, int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::string(prefix) + std::to_string(i));
  return out;
}

RingPtr with_order(const RingPtr& r, MonomialOrder order, std::vector<int> blocks) {
  return std::make_shared<const Ring>(r->field(), r->variables(), order, r->weights(), std::move(blocks));
}

}  // namespace triplane
