#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "osmx/access_stats.hpp"
#include "osmx/detail/views.hpp"
#include "osmx/topk.hpp"

namespace osmx {

/// The six benchmarked algorithms. Names follow the benchmark column keys,
/// see column_name().
enum class algorithm {
  naive_softmax,
  safe_softmax,
  online_softmax,
  safe_softmax_unfused_topk,
  safe_softmax_fused_topk,
  online_softmax_fused_topk,
};

inline constexpr std::array<algorithm, 6> all_algorithms{
    algorithm::naive_softmax,          algorithm::safe_softmax,
    algorithm::online_softmax,         algorithm::safe_softmax_unfused_topk,
    algorithm::safe_softmax_fused_topk, algorithm::online_softmax_fused_topk,
};

/// Column key used in CSV/plot output, e.g. "OnlineSoftmaxFusedTopK".
std::string_view column_name(algorithm alg);

/// Accepts column keys and short aliases (naive, safe, online,
/// safe-unfused-topk, safe-fused-topk, online-fused-topk).
std::optional<algorithm> parse_algorithm(std::string_view name);

bool uses_topk(algorithm alg);

/// Float vector whose element loads/stores are tallied into an access_stats.
/// The counted entry points below aggregate the traffic of every vector the
/// run touches (input, output, intermediates) into this instance's stats.
/// Counters are unsynchronized: keep each instance on one thread.
class counting_vec {
 public:
  explicit counting_vec(std::vector<float> data) : data_(std::move(data)) {}

  std::size_t size() const { return data_.size(); }
  float load(std::size_t i) const {
    ++stats_.loads;
    return data_[i];
  }
  void store(std::size_t i, float v) {
    ++stats_.stores;
    data_[i] = v;
  }

  const std::vector<float>& data() const { return data_; }
  const access_stats& stats() const { return stats_; }
  void reset_stats() { stats_ = {}; }

  detail::counted_read_view<float> read_view() const { return {data_.data(), data_.size(), &stats_}; }

 private:
  std::vector<float> data_;
  mutable access_stats stats_;
};

// Access-instrumented twins of the public algorithms. Numerical results are
// bit-identical to the plain versions; the only difference is the tally.
std::vector<float> naive_softmax(counting_vec& x);
std::vector<float> safe_softmax(counting_vec& x);
std::vector<float> online_softmax(counting_vec& x);
topk_result topk_of(counting_vec& values, std::size_t k);
topk_result safe_softmax_then_topk(counting_vec& x, std::size_t k);
topk_result safe_softmax_fused_topk(counting_vec& x, std::size_t k);
topk_result online_softmax_topk(counting_vec& x, std::size_t k);

/// Run `alg` instrumented on a deterministic input of length v and return
/// the exact element-access totals. k must be given (1 <= k <= v) exactly
/// for the top-k algorithms and must be 0 otherwise. Counts depend only on
/// (alg, v, k), never on element values:
///   naive 3V, safe 4V, online 3V;
///   safe unfused top-k 5V + 2K (the 2K are the result writes),
///   safe fused top-k 3V + 2K, online fused top-k V + 2K with loads == V.
access_stats count_accesses(algorithm alg, std::size_t v, std::size_t k = 0);

}  // namespace osmx
