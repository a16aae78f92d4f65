#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <span>

#include "osmx/error.hpp"

namespace osmx {

/// Running (maximum, sum of exponentials) pair for the streaming softmax
/// normalizer. After absorbing elements x_1..x_j, `max` is their exact
/// maximum and `sum` approximates sum_i exp(x_i - max), so 1 <= sum <= j.
///
/// A default-constructed state is the identity element (-inf, 0): merging
/// it with any state returns that state unchanged, and it is the only
/// valid state with sum == 0.
///
/// T selects the accumulator width. float matches 32-bit storage (safe for
/// vector lengths up to ~1.7e37 since sum <= j); double is what the softmax
/// kernels use and what very long vectors require.
template <std::floating_point T>
struct norm_state {
  T max = -std::numeric_limits<T>::infinity();
  T sum = T(0);

  /// Absorb one element: max' = max(max, x), sum' = sum*e^(max-max') + e^(x-max').
  /// Branching on the new-maximum case is bit-identical to the unconditional
  /// form because exp(0) == 1 exactly. Throws non_finite_error for NaN/inf.
  void add(T x) {
    if (!std::isfinite(x)) throw non_finite_error();
    if (x > max) {
      // exp(-inf) == 0, so the first element always yields (x, 1).
      sum = sum * std::exp(max - x) + T(1);
      max = x;
    } else {
      sum += std::exp(x - max);
    }
  }

  bool is_identity() const { return std::isinf(max) && max < T(0); }

  friend bool operator==(const norm_state&, const norm_state&) = default;
};

/// Combine two partial normalizer states. Associative and commutative up to
/// rounding; the m component is exact. Identity operands are returned
/// unchanged (in particular merging two identities yields the identity
/// rather than the NaN that -inf minus -inf would produce).
template <std::floating_point T>
norm_state<T> merge(const norm_state<T>& a, const norm_state<T>& b) {
  if (a.is_identity()) return b;
  if (b.is_identity()) return a;
  const T m = std::max(a.max, b.max);
  return {m, a.sum * std::exp(a.max - m) + b.sum * std::exp(b.max - m)};
}

/// Single sequential pass over x: returns (exact max, sum of e^(x_i - max)).
template <std::floating_point T>
norm_state<T> run_normalizer(std::span<const float> x) {
  if (x.empty()) throw empty_input_error();
  norm_state<T> s;
  for (float v : x) s.add(static_cast<T>(v));
  return s;
}

/// Chunked evaluation: reduce each contiguous chunk sequentially, then merge
/// the per-chunk states left to right. The m component matches the
/// sequential pass exactly for every chunk length; the sum component agrees
/// to within accumulation noise. Deterministic for a fixed chunk length.
template <std::floating_point T>
norm_state<T> run_normalizer_chunked(std::span<const float> x, std::size_t chunk_len) {
  if (x.empty()) throw empty_input_error();
  if (chunk_len == 0) throw invalid_chunk_error();
  norm_state<T> acc;
  for (std::size_t start = 0; start < x.size(); start += chunk_len) {
    const std::size_t len = std::min(chunk_len, x.size() - start);
    norm_state<T> part;
    for (std::size_t i = start; i < start + len; ++i) part.add(static_cast<T>(x[i]));
    acc = merge(acc, part);
  }
  return acc;
}

}  // namespace osmx
