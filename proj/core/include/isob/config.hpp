#pragma once

#include <cstdint>

namespace isob {

/// Work limits for the enumerative algorithms. These are configuration,
/// not invariants; the CLI exposes each one as a flag.
struct Limits {
  std::uint64_t orbit_cap = 10'000'000;
  std::uint64_t freudenthal_cap = 100'000;
  /// Coefficient bound |a_i| <= B for the brute-force kernel audit.
  int kernel_search_bound = 6;
};

}  // namespace isob
