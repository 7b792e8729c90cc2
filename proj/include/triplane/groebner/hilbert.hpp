#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "triplane/core/ring.hpp"

namespace triplane {

/// Exact rational with 64-bit numerator and positive denominator.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n, long long d);

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  std::string to_string() const;
};

/// Integer Laurent polynomial  Σ c[i] t^(low + i).
struct LaurentPoly {
  int low = 0;
  std::vector<long long> c;

  static LaurentPoly one() { return {0, {1}}; }
  bool is_zero() const;
  void trim();
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly shifted(int s) const { return {low + s, c}; }
  long long at(int exponent) const;
  int high() const { return low + static_cast<int>(c.size()) - 1; }
  long long value_at_one() const;
};

/// Numerator N of the Hilbert series N(t)/∏(1 - t^{w_v}) of R/J, for the
/// monomial ideal J generated by `gens` (components ignored).
LaurentPoly hilbert_numerator(const Ring& r, std::vector<Monomial> gens);

inline constexpr int kEmptyDim = -1;

/// Numerics of a graded module with a standard-graded Hilbert series.
struct HilbertData {
  /// Numerator of the series over (1 - t)^nvars.
  LaurentPoly numerator;
  int nvars = 0;
  /// Krull dimension of the affine cone; kEmptyDim for the zero module.
  int krull_dim = kEmptyDim;
  /// Multiplicity (projective degree when krull_dim >= 1, length when 0).
  long long degree = 0;
  /// Ascending rational coefficients of the Hilbert polynomial.
  std::vector<Rational> hilbert_polynomial;
  /// g_i = (-1)^(r - i) (Δ^i P(0) - 1) for i = 0 .. r, r = krull_dim - 1.
  std::vector<long long> genera;
  /// Numerator after cancelling (1 - t)^(nvars - krull_dim).
  LaurentPoly reduced_numerator;

  bool empty() const { return krull_dim == kEmptyDim; }
  /// Value of the Hilbert polynomial at an integer.
  long long hp_value(long long s) const;
  /// Dimension of the degree-d piece.
  long long hilbert_function(int d) const;
  /// Hilbert polynomial of the associated sheaf at 0.
  long long euler_characteristic() const { return hp_value(0); }
};

/// Builds HilbertData from a numerator over (1 - t)^nvars.
HilbertData hilbert_data_from_numerator(LaurentPoly numerator, int nvars);

/// Generalized binomial C(m, r) for any integer m and r >= 0.
long long binomial(long long m, int r);

}  // namespace triplane
