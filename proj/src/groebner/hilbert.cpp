#include "triplane/groebner/hilbert.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "triplane/core/field.hpp"

namespace triplane {

namespace {

long long narrow(__int128 v) {
  if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
    throw DomainError("integer overflow in Hilbert series arithmetic");
  return static_cast<long long>(v);
}

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make_rational(__int128 n, __int128 d) {
  if (d == 0) throw DomainError("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rational r;
  r.num = narrow(n);
  r.den = narrow(d);
  return r;
}

}  // namespace

Rational::Rational(long long n, long long d) { *this = make_rational(n, d); }

Rational Rational::operator+(const Rational& o) const {
  return make_rational(static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den,
                       static_cast<__int128>(den) * o.den);
}
Rational Rational::operator-(const Rational& o) const {
  return make_rational(static_cast<__int128>(num) * o.den - static_cast<__int128>(o.num) * den,
                       static_cast<__int128>(den) * o.den);
}
Rational Rational::operator*(const Rational& o) const {
  return make_rational(static_cast<__int128>(num) * o.num, static_cast<__int128>(den) * o.den);
}
std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

bool LaurentPoly::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](long long x) { return x == 0; });
}

void LaurentPoly::trim() {
  std::size_t first = 0;
  while (first < c.size() && c[first] == 0) ++first;
  if (first == c.size()) {
    c.clear();
    low = 0;
    return;
  }
  c.erase(c.begin(), c.begin() + static_cast<long>(first));
  low += static_cast<int>(first);
  while (!c.empty() && c.back() == 0) c.pop_back();
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (c.empty()) return o;
  if (o.c.empty()) return *this;
  const int lo = std::min(low, o.low);
  const int hi = std::max(high(), o.high());
  LaurentPoly r{lo, std::vector<long long>(static_cast<std::size_t>(hi - lo + 1), 0)};
  for (std::size_t i = 0; i < c.size(); ++i) r.c[low - lo + i] += c[i];
  for (std::size_t i = 0; i < o.c.size(); ++i) r.c[o.low - lo + i] += o.c[i];
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly n = o;
  for (auto& x : n.c) x = -x;
  return *this + n;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (c.empty() || o.c.empty()) return {};
  LaurentPoly r{low + o.low, std::vector<long long>(c.size() + o.c.size() - 1, 0)};
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i])
      for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] = narrow(static_cast<__int128>(r.c[i + j]) + static_cast<__int128>(c[i]) * o.c[j]);
  r.trim();
  return r;
}

long long LaurentPoly::at(int e) const {
  const int i = e - low;
  return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : 0;
}

long long LaurentPoly::value_at_one() const {
  __int128 s = 0;
  for (long long x : c) s += x;
  return narrow(s);
}

namespace {

int mono_degree(const Ring& r, const Monomial& m) { return r.weighted_degree(m); }

void minimalize(const Ring& r, std::vector<Monomial>& g) {
  for (auto& m : g) {
    m.comp = 0;
    m.deg = mono_degree(r, m);
  }
  std::sort(g.begin(), g.end(), [&](const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return r.compare_exp(a, b) < 0;
  });
  g.erase(std::unique(g.begin(), g.end()), g.end());
  std::vector<Monomial> kept;
  kept.reserve(g.size());
  for (const Monomial& m : g) {
    bool red = false;
    for (const Monomial& k : kept)
      if (mono::divides_exp(k, m)) {
        red = true;
        break;
      }
    if (!red) kept.push_back(m);
  }
  g.swap(kept);
}

LaurentPoly one_minus_t_pow(int d) {
  LaurentPoly p{0, std::vector<long long>(static_cast<std::size_t>(d) + 1, 0)};
  p.c[0] += 1;
  p.c[d] -= 1;
  p.trim();
  return p;
}

LaurentPoly numerator_rec(const Ring& r, std::vector<Monomial> g) {
  if (g.empty()) return LaurentPoly::one();
  for (const Monomial& m : g)
    if (m.is_one()) return {};
  const int n = r.nvars();
  std::vector<int> count(n, 0);
  for (const Monomial& m : g)
    for (int v = 0; v < n; ++v)
      if (m.exp(v)) ++count[v];
  int best = 0;
  for (int v = 1; v < n; ++v)
    if (count[v] > count[best]) best = v;
  if (count[best] <= 1) {
    LaurentPoly p = LaurentPoly::one();
    for (const Monomial& m : g) p = p * one_minus_t_pow(m.deg);
    return p;
  }
  int e = kMaxExponent;
  for (const Monomial& m : g)
    if (m.exp(best)) e = std::min(e, m.exp(best));
  Monomial pivot;
  pivot.set_exp(best, e);
  pivot.deg = e * r.weights()[best];

  std::vector<Monomial> plus;
  plus.reserve(g.size() + 1);
  for (const Monomial& m : g)
    if (m.exp(best) < e) plus.push_back(m);
  plus.push_back(pivot);
  minimalize(r, plus);

  std::vector<Monomial> colon;
  colon.reserve(g.size());
  for (Monomial m : g) {
    m.set_exp(best, std::max(0, m.exp(best) - e));
    colon.push_back(m);
  }
  minimalize(r, colon);
  return numerator_rec(r, std::move(plus)) + numerator_rec(r, std::move(colon)).shifted(pivot.deg);
}

}  // namespace

LaurentPoly hilbert_numerator(const Ring& r, std::vector<Monomial> gens) {
  minimalize(r, gens);
  return numerator_rec(r, std::move(gens));
}

long long binomial(long long m, int r) {
  if (r < 0) return 0;
  __int128 res = 1;
  for (int i = 0; i < r; ++i) res = res * (m - i) / (i + 1);
  return narrow(res);
}

HilbertData hilbert_data_from_numerator(LaurentPoly numerator, int nvars) {
  numerator.trim();
  HilbertData h;
  h.numerator = numerator;
  h.nvars = nvars;
  if (numerator.is_zero()) {
    h.krull_dim = kEmptyDim;
    return h;
  }
  LaurentPoly q = numerator;
  int d = nvars;
  while (d > 0 && q.value_at_one() == 0) {
    // divide by (1 - t): prefix sums
    LaurentPoly nq{q.low, std::vector<long long>(q.c.size() > 1 ? q.c.size() - 1 : 0)};
    __int128 run = 0;
    for (std::size_t i = 0; i + 1 < q.c.size(); ++i) {
      run += q.c[i];
      nq.c[i] = narrow(run);
    }
    nq.trim();
    q = nq;
    --d;
  }
  if (q.value_at_one() == 0) throw DomainError("Hilbert series numerator vanishes at 1 beyond the ring dimension");
  h.krull_dim = d;
  h.reduced_numerator = q;
  h.degree = q.value_at_one();
  if (d >= 1) {
    // HP(s) = Σ_k q_k C(s - k + d - 1, d - 1)
    const int r = d - 1;
    std::vector<__int128> acc(static_cast<std::size_t>(r) + 1, 0);
    for (std::size_t i = 0; i < q.c.size(); ++i) {
      const long long qk = q.c[i];
      if (!qk) continue;
      const long long k = q.low + static_cast<long long>(i);
      const long long a = d - 1 - k;
      std::vector<__int128> poly{1};
      for (int j = 0; j < r; ++j) {
        std::vector<__int128> next(poly.size() + 1, 0);
        const __int128 root = a - j;
        for (std::size_t t = 0; t < poly.size(); ++t) {
          next[t + 1] += poly[t];
          next[t] += poly[t] * root;
        }
        poly.swap(next);
      }
      for (std::size_t t = 0; t < poly.size(); ++t) acc[t] += poly[t] * qk;
    }
    __int128 fact = 1;
    for (int j = 2; j <= r; ++j) fact *= j;
    for (std::size_t t = 0; t < acc.size(); ++t) h.hilbert_polynomial.push_back(make_rational(acc[t], fact));
    while (!h.hilbert_polynomial.empty() && h.hilbert_polynomial.back().num == 0) h.hilbert_polynomial.pop_back();
  }
  for (int i = 0; i < d; ++i) {
    __int128 delta = 0;
    for (int j = 0; j <= i; ++j) {
      const __int128 term = static_cast<__int128>(binomial(i, j)) * h.hp_value(-j);
      delta += (j % 2) ? -term : term;
    }
    const __int128 g = ((d - 1 - i) % 2) ? -(delta - 1) : (delta - 1);
    h.genera.push_back(narrow(g));
  }
  return h;
}

long long HilbertData::hp_value(long long s) const {
  if (krull_dim <= 0) return 0;
  __int128 v = 0;
  for (std::size_t i = 0; i < reduced_numerator.c.size(); ++i) {
    const long long k = reduced_numerator.low + static_cast<long long>(i);
    v += static_cast<__int128>(reduced_numerator.c[i]) * binomial(s - k + krull_dim - 1, krull_dim - 1);
  }
  return narrow(v);
}

long long HilbertData::hilbert_function(int d) const {
  __int128 v = 0;
  for (std::size_t i = 0; i < numerator.c.size(); ++i) {
    const long long k = numerator.low + static_cast<long long>(i);
    if (k > d) break;
    if (nvars == 0) {
      if (k == d) v += numerator.c[i];
      continue;
    }
    v += static_cast<__int128>(numerator.c[i]) * binomial(d - k + nvars - 1, nvars - 1);
  }
  return narrow(v);
}

}  // namespace triplane
