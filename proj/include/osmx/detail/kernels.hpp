#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>

#include "osmx/error.hpp"
#include "osmx/normalizer.hpp"
#include "osmx/topk.hpp"

// Kernel templates shared by the plain and access-counted entry points.
// In is a read view over the fp32 input, Out/VOut/ZOut are write views
// (see views.hpp). Each kernel checks finiteness while streaming its first
// pass so validation never costs an extra pass over memory.
//
// Output probabilities are fp32. The normalizer accumulates in double: the
// running sum is bounded by V so 32-bit storage would not overflow, but the
// extra accumulator width keeps every variant within a fraction of a ULP of
// the others, which the equivalence guarantees of the public API rely on.

namespace osmx::detail {

inline void require_nonempty(std::size_t n) {
  if (n == 0) throw empty_input_error();
}

inline void require_valid_k(std::size_t k, std::size_t n) {
  if (k == 0 || k > n) throw invalid_k_error();
}

inline float checked(float v) {
  if (!std::isfinite(v)) throw non_finite_error();
  return v;
}

// Two passes, no overflow protection: exp of a large input saturates to inf
// and the result carries the Inf/NaN through.
template <class In, class Out>
void naive_softmax_kernel(const In& x, const Out& y) {
  const std::size_t n = x.size();
  require_nonempty(n);
  double d = 0.0;
  for (std::size_t j = 0; j < n; ++j) d += static_cast<double>(std::exp(checked(x.load(j))));
  for (std::size_t i = 0; i < n; ++i) y.store(i, static_cast<float>(std::exp(x.load(i)) / d));
}

// Three passes: maximum, normalizer, outputs.
template <class In, class Out>
void safe_softmax_kernel(const In& x, const Out& y) {
  const std::size_t n = x.size();
  require_nonempty(n);
  float m = -std::numeric_limits<float>::infinity();
  for (std::size_t j = 0; j < n; ++j) m = std::max(m, checked(x.load(j)));
  double d = 0.0;
  for (std::size_t j = 0; j < n; ++j) d += std::exp(static_cast<double>(x.load(j)) - m);
  for (std::size_t i = 0; i < n; ++i) y.store(i, static_cast<float>(std::exp(x.load(i) - m) / d));
}

// Two passes: fused maximum+normalizer, then outputs.
template <class In, class Out>
void online_softmax_kernel(const In& x, const Out& y) {
  const std::size_t n = x.size();
  require_nonempty(n);
  norm_state<double> s;
  for (std::size_t j = 0; j < n; ++j) s.add(static_cast<double>(x.load(j)));
  const float m = static_cast<float>(s.max);
  for (std::size_t i = 0; i < n; ++i) y.store(i, static_cast<float>(std::exp(x.load(i) - m) / s.sum));
}

// One selection pass over arbitrary values.
template <class In, class VOut, class ZOut>
void topk_kernel(const In& values, std::size_t k, const VOut& v, const ZOut& z) {
  const std::size_t n = values.size();
  require_nonempty(n);
  require_valid_k(k, n);
  topk_buffer buf(k);
  for (std::size_t j = 0; j < n; ++j) buf.offer(checked(values.load(j)), static_cast<std::int64_t>(j));
  for (std::size_t i = 0; i < k; ++i) {
    v.store(i, buf.value(i));
    z.store(i, buf.index(i));
  }
}

// Max pass, normalizer pass, then one selection pass keyed on the on-the-fly
// probability e^(x_j - m)/d; the probability vector itself never hits memory.
template <class In, class VOut, class ZOut>
void safe_softmax_fused_topk_kernel(const In& x, std::size_t k, const VOut& v, const ZOut& z) {
  const std::size_t n = x.size();
  require_nonempty(n);
  require_valid_k(k, n);
  float m = -std::numeric_limits<float>::infinity();
  for (std::size_t j = 0; j < n; ++j) m = std::max(m, checked(x.load(j)));
  double d = 0.0;
  for (std::size_t j = 0; j < n; ++j) d += std::exp(static_cast<double>(x.load(j)) - m);
  topk_buffer buf(k);
  for (std::size_t j = 0; j < n; ++j) {
    buf.offer(static_cast<float>(std::exp(x.load(j) - m) / d), static_cast<std::int64_t>(j));
  }
  for (std::size_t i = 0; i < k; ++i) {
    v.store(i, buf.value(i));
    z.store(i, buf.index(i));
  }
}

// Single pass: each loaded element feeds both the (max, normalizer) state
// and the raw-value top-k buffer; only the K winners are exponentiated.
template <class In, class VOut, class ZOut>
void online_softmax_topk_kernel(const In& x, std::size_t k, const VOut& v, const ZOut& z) {
  const std::size_t n = x.size();
  require_nonempty(n);
  require_valid_k(k, n);
  norm_state<double> s;
  topk_buffer buf(k);
  for (std::size_t j = 0; j < n; ++j) {
    const float e = x.load(j);
    s.add(static_cast<double>(e));
    buf.offer(e, static_cast<std::int64_t>(j));
  }
  const float m = static_cast<float>(s.max);
  for (std::size_t i = 0; i < k; ++i) {
    v.store(i, static_cast<float>(std::exp(buf.value(i) - m) / s.sum));
    z.store(i, buf.index(i));
  }
}

}  // namespace osmx::detail
