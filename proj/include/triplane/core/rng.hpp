#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace triplane {

/// Deterministic generator: xoshiro256** seeded through splitmix64.
///
/// Every Rng remembers the seed it was created from. `substream(tag)` derives
/// a child generator from that seed and the tag only, so the child's sequence
/// does not depend on how many values the parent has already produced. The
/// pipeline gives every stage (and every retry of a stage) its own substream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next();
  /// Uniform integer in [0, bound), bound > 0 (rejection sampling, no modulo bias).
  std::uint64_t uniform(std::uint64_t bound);

  Rng substream(std::uint64_t tag) const;
  Rng substream(std::string_view tag) const;

 private:
  std::uint64_t seed_;
  std::array<std::uint64_t, 4> s_{};
};

std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t hash_tag(std::string_view tag);

}  // namespace triplane
