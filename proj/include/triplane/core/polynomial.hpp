#pragma once

#include <string>
#include <vector>

#include "triplane/core/ring.hpp"

namespace triplane {

struct Term {
  Monomial m;
  Coeff c;
};

/// Sparse polynomial (or free-module vector when terms carry components).
/// Terms are kept strictly decreasing in the ring order with nonzero
/// coefficients, so equality is structural.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  /// Caller guarantees the terms are already normalized.
  static Polynomial from_sorted(RingPtr ring, std::vector<Term> terms);
  static Polynomial constant(RingPtr ring, Coeff c, std::uint32_t comp = 0);
  static Polynomial variable(RingPtr ring, int v);
  static Polynomial term(RingPtr ring, const Monomial& m, Coeff c);
  /// Parses integers in (-2^63, 2^63) and reduces them mod p.
  static Polynomial from_int(RingPtr ring, long long c) { return constant(ring, ring->field().reduce(c)); }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }

  /// Largest weighted degree of a term, -1 for zero.
  int degree() const;
  bool is_homogeneous() const;
  /// Coefficient of m (0 when absent).
  Coeff coefficient(const Monomial& m) const;

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }
  Polynomial scale(Coeff c) const;
  Polynomial mul_term(const Monomial& m, Coeff c) const;
  Polynomial pow(unsigned e) const;
  Polynomial make_monic() const;

  Polynomial derivative(int var) const;

  /// Every term moved to component `comp`.
  Polynomial with_comp(std::uint32_t comp) const;
  /// Terms in component `comp`, moved to component 0.
  Polynomial component(std::uint32_t comp) const;

  /// Same terms viewed in a compatible ring (e.g. another monomial order).
  Polynomial in_ring(const RingPtr& target) const;

  bool operator==(const Polynomial& g) const;
  bool operator!=(const Polynomial& g) const { return !(*this == g); }

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Merge-add of two normalized term lists: a + c*b.
std::vector<Term> axpy_terms(const Ring& r, const std::vector<Term>& a, Coeff c, const std::vector<Term>& b);

}  // namespace triplane
