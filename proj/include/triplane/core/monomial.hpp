#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>

namespace triplane {

inline constexpr int kMaxVars = 16;
inline constexpr int kMaxExponent = 127;

/// Packed exponent vector: variable i lives in byte i of `w` (little end first).
/// Exponents are kept below 128 so divisibility is a branch-free byte test.
/// `comp` is the free-module component (0 for ring elements) and `deg` caches
/// the weighted degree of the exponent part.
struct Monomial {
  std::uint64_t w[2] = {0, 0};
  std::uint32_t comp = 0;
  std::int32_t deg = 0;

  int exp(int var) const { return static_cast<int>((w[var >> 3] >> ((var & 7) * 8)) & 0xff); }
  void set_exp(int var, int e) {
    const int shift = (var & 7) * 8;
    w[var >> 3] = (w[var >> 3] & ~(0xffULL << shift)) | (static_cast<std::uint64_t>(e) << shift);
  }
  bool is_one() const { return w[0] == 0 && w[1] == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.w[0] == b.w[0] && a.w[1] == b.w[1] && a.comp == b.comp;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

namespace mono {

inline constexpr std::uint64_t kHigh = 0x8080808080808080ULL;

/// a | b, ignoring components.
inline bool divides_exp(const Monomial& a, const Monomial& b) {
  return (((b.w[0] | kHigh) - a.w[0]) & kHigh) == kHigh &&
         (((b.w[1] | kHigh) - a.w[1]) & kHigh) == kHigh;
}
inline bool divides(const Monomial& a, const Monomial& b) {
  return a.comp == b.comp && divides_exp(a, b);
}

/// Product; components add (at most one factor may carry a component).
/// Returns false when an exponent would exceed kMaxExponent.
inline bool mul(const Monomial& a, const Monomial& b, Monomial& out) {
  out.w[0] = a.w[0] + b.w[0];
  out.w[1] = a.w[1] + b.w[1];
  out.comp = a.comp + b.comp;
  out.deg = a.deg + b.deg;
  return ((out.w[0] | out.w[1]) & kHigh) == 0;
}

/// b / a, assuming a | b. The quotient is a ring monomial (component 0).
inline Monomial div(const Monomial& b, const Monomial& a) {
  Monomial q;
  q.w[0] = b.w[0] - a.w[0];
  q.w[1] = b.w[1] - a.w[1];
  q.comp = 0;
  q.deg = b.deg - a.deg;
  return q;
}

inline std::uint64_t bytewise_max(std::uint64_t x, std::uint64_t y) {
  // per byte: x >= y ? x : y, valid for bytes below 128
  const std::uint64_t ge = (((x | kHigh) - y) & kHigh) >> 7;  // 1 in byte k iff x_k >= y_k
  const std::uint64_t mask = ge * 0xff;
  return (x & mask) | (y & ~mask);
}

/// Exponent-wise maximum; `deg` is left for the caller to recompute.
inline Monomial lcm_exp(const Monomial& a, const Monomial& b) {
  Monomial l;
  l.w[0] = bytewise_max(a.w[0], b.w[0]);
  l.w[1] = bytewise_max(a.w[1], b.w[1]);
  l.comp = a.comp;
  return l;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  // a byte is nonzero in both words iff some variable is shared
  auto nz = [](std::uint64_t x) {
    return ((((x & ~kHigh) + ~kHigh) | x) & kHigh);
  };
  return (nz(a.w[0]) & nz(b.w[0])) == 0 && (nz(a.w[1]) & nz(b.w[1])) == 0;
}

/// Bit signature used to reject divisibility quickly: bit v set when e_v >= 1,
/// bit 16+v when e_v >= 2, bit 32+v when e_v >= 4, bit 48+v when e_v >= 8.
inline std::uint64_t divmask(const Monomial& m) {
  std::uint64_t s = 0;
  for (int v = 0; v < kMaxVars; ++v) {
    const int e = m.exp(v);
    if (e >= 1) s |= 1ULL << v;
    if (e >= 2) s |= 1ULL << (16 + v);
    if (e >= 4) s |= 1ULL << (32 + v);
    if (e >= 8) s |= 1ULL << (48 + v);
  }
  return s;
}

inline std::size_t hash(const Monomial& m) {
  std::uint64_t h = m.w[0] * 0x9e3779b97f4a7c15ULL;
  h ^= (m.w[1] + 0x632be59bd9b4e019ULL + (h << 6) + (h >> 2));
  h ^= static_cast<std::uint64_t>(m.comp) * 0xff51afd7ed558ccdULL;
  return static_cast<std::size_t>(h ^ (h >> 29));
}

struct Hash {
  std::size_t operator()(const Monomial& m) const { return hash(m); }
};

}  // namespace mono
}  // namespace triplane
