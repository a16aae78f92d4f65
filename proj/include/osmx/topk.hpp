#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace osmx {

/// K largest values of a vector with their 0-based positions. values is
/// sorted non-increasing, indices are distinct, and equal values are
/// ordered by smaller index first.
struct topk_result {
  std::vector<float> values;
  std::vector<std::int64_t> indices;
};

/// K+1-slot scratch for streaming top-k selection. The first k slots hold
/// the running top-k sorted non-increasing; slot k receives each candidate
/// before it bubbles into place with a strict compare, so an equal value
/// never displaces an earlier one. Value slots start at -inf and index
/// slots at -1; once k or more candidates have been offered every index
/// slot is a real position.
class topk_buffer {
 public:
  explicit topk_buffer(std::size_t k)
      : values_(k + 1, -std::numeric_limits<float>::infinity()), indices_(k + 1, -1), k_(k) {}

  std::size_t k() const { return k_; }
  float value(std::size_t rank) const { return values_[rank]; }
  std::int64_t index(std::size_t rank) const { return indices_[rank]; }

  void offer(float value, std::int64_t index) {
    // Full buffer and value at or below the k-th best: the strict-< bubble
    // below would discard it from the scratch slot anyway.
    if (!(value > values_[k_ - 1]) && indices_[k_ - 1] >= 0) return;
    values_[k_] = value;
    indices_[k_] = index;
    for (std::size_t s = k_; s >= 1 && values_[s - 1] < values_[s]; --s) {
      std::swap(values_[s - 1], values_[s]);
      std::swap(indices_[s - 1], indices_[s]);
    }
  }

 private:
  std::vector<float> values_;
  std::vector<std::int64_t> indices_;
  std::size_t k_;
};

/// K largest elements of `values` (ties to the smaller index).
/// Throws empty_input_error, invalid_k_error, non_finite_error.
topk_result topk_of(std::span<const float> values, std::size_t k);

/// safe_softmax followed by topk_of; materializes the full probability
/// vector in between.
topk_result safe_softmax_then_topk(std::span<const float> x, std::size_t k);

/// Three passes over x (max, normalizer, selection); probabilities are
/// computed on the fly for the selection and never stored. Indices and
/// values match safe_softmax_then_topk bit for bit.
topk_result safe_softmax_fused_topk(std::span<const float> x, std::size_t k);

/// Single pass over x carrying the online (max, normalizer) state and the
/// top-k buffer together; selection is on raw inputs, which is
/// order-equivalent to selecting on probabilities. One load per element.
topk_result online_softmax_topk(std::span<const float> x, std::size_t k);

}  // namespace osmx
