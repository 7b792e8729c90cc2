#include "triplane/core/polynomial.hpp"

#include <algorithm>

namespace triplane {

namespace {

void require_same(const Polynomial& f, const Polynomial& g) {
  if (!f.ring() || !g.ring()) throw UsageError("polynomial: missing ring");
  if (f.ring() != g.ring() && !(*f.ring() == *g.ring()))
    throw UsageError("polynomial: operands live in different rings");
}

Monomial checked_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  if (!mono::mul(a, b, out)) throw DomainError("monomial exponent exceeds 127");
  return out;
}

}  // namespace

std::vector<Term> axpy_terms(const Ring& r, const std::vector<Term>& a, Coeff c, const std::vector<Term>& b) {
  const PrimeField& k = r.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const int cmp = r.compare(a[i].m, b[j].m);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({b[j].m, k.mul(c, b[j].c)});
      ++j;
    } else {
      const Coeff s = k.add(a[i].c, k.mul(c, b[j].c));
      if (s) out.push_back({a[i].m, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].m, k.mul(c, b[j].c)});
  return out;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const Ring& r = *ring;
  const PrimeField& k = r.field();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return r.compare(a.m, b.m) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const Term& t : terms) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c = k.add(out.back().c, t.c);
    } else {
      if (!out.empty() && out.back().c == 0) out.pop_back();
      out.push_back({t.m, t.c % k.characteristic()});
    }
  }
  if (!out.empty() && out.back().c == 0) out.pop_back();
  Polynomial f(std::move(ring));
  f.terms_ = std::move(out);
  return f;
}

Polynomial Polynomial::from_sorted(RingPtr ring, std::vector<Term> terms) {
  Polynomial f(std::move(ring));
  f.terms_ = std::move(terms);
  return f;
}

Polynomial Polynomial::constant(RingPtr ring, Coeff c, std::uint32_t comp) {
  Polynomial f(std::move(ring));
  c %= f.ring_->field().characteristic();
  if (c) {
    Monomial m;
    m.comp = comp;
    f.terms_.push_back({m, c});
  }
  return f;
}

Polynomial Polynomial::variable(RingPtr ring, int v) {
  if (v < 0 || v >= ring->nvars()) throw UsageError("polynomial: variable index out of range");
  Polynomial f(ring);
  f.terms_.push_back({ring->variable(v), 1});
  return f;
}

Polynomial Polynomial::term(RingPtr ring, const Monomial& m, Coeff c) {
  Polynomial f(std::move(ring));
  c %= f.ring_->field().characteristic();
  if (c) f.terms_.push_back({m, c});
  return f;
}

int Polynomial::degree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, t.m.deg);
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const Term& t : terms_)
    if (t.m.deg != terms_.front().m.deg) return false;
  return true;
}

Coeff Polynomial::coefficient(const Monomial& m) const {
  for (const Term& t : terms_)
    if (t.m == m) return t.c;
  return 0;
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  require_same(*this, g);
  return from_sorted(ring_, axpy_terms(*ring_, terms_, 1, g.terms_));
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
  require_same(*this, g);
  return from_sorted(ring_, axpy_terms(*ring_, terms_, ring_->field().characteristic() - 1, g.terms_));
}

Polynomial Polynomial::operator-() const { return scale(ring_->field().characteristic() - 1); }

Polynomial Polynomial::operator*(const Polynomial& g) const {
  require_same(*this, g);
  if (is_zero() || g.is_zero()) return Polynomial(ring_);
  const PrimeField& k = ring_->field();
  std::vector<Term> prod;
  prod.reserve(size() * g.size());
  for (const Term& a : terms_) {
    for (const Term& b : g.terms_) {
      if (a.m.comp && b.m.comp) throw UsageError("polynomial: product of two module vectors");
      prod.push_back({checked_mul(a.m, b.m), k.mul(a.c, b.c)});
    }
  }
  return from_terms(ring_, std::move(prod));
}

Polynomial Polynomial::scale(Coeff c) const {
  const PrimeField& k = ring_->field();
  c %= k.characteristic();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (Term& t : out) t.c = k.mul(t.c, c);
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::mul_term(const Monomial& m, Coeff c) const {
  const PrimeField& k = ring_->field();
  c %= k.characteristic();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(size());
  // multiplying by a monomial preserves the order, except across components
  for (const Term& t : terms_) out.push_back({checked_mul(t.m, m), k.mul(t.c, c)});
  if (m.comp) return from_terms(ring_, std::move(out));
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::make_monic() const {
  if (is_zero()) return *this;
  return scale(ring_->field().inv(lead().c));
}

Polynomial Polynomial::derivative(int var) const {
  const PrimeField& k = ring_->field();
  std::vector<Term> out;
  for (const Term& t : terms_) {
    const int e = t.m.exp(var);
    if (!e) continue;
    Monomial m = t.m;
    m.set_exp(var, e - 1);
    m.deg -= ring_->weights()[var];
    out.push_back({m, k.mul(t.c, k.reduce(e))});
  }
  return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::with_comp(std::uint32_t comp) const {
  std::vector<Term> out = terms_;
  for (Term& t : out) t.m.comp = comp;
  return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::component(std::uint32_t comp) const {
  std::vector<Term> out;
  for (const Term& t : terms_)
    if (t.m.comp == comp) out.push_back({Monomial{{t.m.w[0], t.m.w[1]}, 0, t.m.deg}, t.c});
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (!ring_->compatible(*target)) throw UsageError("polynomial: target ring is not compatible");
  return from_terms(target, terms_);
}

bool Polynomial::operator==(const Polynomial& g) const {
  if (terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].m != g.terms_[i].m || terms_[i].c != g.terms_[i].c) return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  const PrimeField& k = ring_->field();
  std::string s;
  for (const Term& t : terms_) {
    const long long c = k.lift(t.c);
    const bool unit_mon = t.m.is_one();
    std::string mon = ring_->monomial_string(t.m);
    if (t.m.comp) mon += (unit_mon ? "" : "*") + std::string("e") + std::to_string(t.m.comp);
    const bool show_mon = !(unit_mon && !t.m.comp);
    if (s.empty()) {
      if (c < 0) s += '-';
    } else {
      s += c < 0 ? " - " : " + ";
    }
    const long long a = c < 0 ? -c : c;
    if (a != 1 || !show_mon) s += std::to_string(a);
    if (show_mon) {
      if (a != 1) s += '*';
      s += unit_mon ? ("e" + std::to_string(t.m.comp)) : mon;
    }
  }
  return s;
}

}  // namespace triplane
