#pragma once

#include <cstdint>

namespace osmx {

/// Tally of vector-element reads and writes observed during one algorithm
/// run. Only element traffic on the input, output and materialized
/// intermediate vectors is counted; scalar running state (the maximum, the
/// normalizer, and the K+1 top-k scratch slots) models registers and is
/// deliberately excluded.
struct access_stats {
  std::uint64_t loads = 0;
  std::uint64_t stores = 0;

  std::uint64_t total() const { return loads + stores; }

  friend bool operator==(const access_stats&, const access_stats&) = default;
};

}  // namespace osmx
