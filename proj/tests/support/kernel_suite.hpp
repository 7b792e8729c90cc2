#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace triplane::testing {

struct PropertyResult {
  std::string name;
  bool ok = true;
  int cases = 0;
  std::string detail;
};

/// Exact property checks on seeded random inputs; needs only the algebra kernel.
std::vector<PropertyResult> run_kernel_suite(std::uint64_t seed = 2024);

}  // namespace triplane::testing
