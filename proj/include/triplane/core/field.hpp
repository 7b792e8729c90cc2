#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace triplane {

/// Field element stored as its canonical representative in [0, p).
using Coeff = std::uint32_t;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t n);

/// The prime field F_p. Primes below 5 and above 2^31 are rejected so that
/// products of two representatives always fit in 64 bits.
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t characteristic() const { return p_; }

  Coeff reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  Coeff add(Coeff a, Coeff b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// Multiplicative inverse; throws DomainError on zero.
  Coeff inv(Coeff a) const;
  Coeff pow(Coeff a, std::uint64_t e) const;
  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }

  /// Symmetric representative in (-p/2, p/2], used for printing.
  std::int64_t lift(Coeff a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace triplane
