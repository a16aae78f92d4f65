#include "osmx/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "osmx/error.hpp"

namespace osmx {

namespace {

void require_finite(std::span<const float> x) {
  if (x.empty()) throw empty_input_error();
  for (float v : x) {
    if (!std::isfinite(v)) throw non_finite_error();
  }
}

}  // namespace

std::vector<double> oracle_softmax(std::span<const float> x) {
  require_finite(x);
  double m = -std::numeric_limits<double>::infinity();
  for (float v : x) m = std::max(m, static_cast<double>(v));
  double d = 0.0;
  for (float v : x) d += std::exp(static_cast<double>(v) - m);
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = std::exp(static_cast<double>(x[i]) - m) / d;
  return y;
}

norm_state<double> oracle_normalizer(std::span<const float> x) {
  require_finite(x);
  double m = -std::numeric_limits<double>::infinity();
  for (float v : x) m = std::max(m, static_cast<double>(v));
  double d = 0.0;
  for (float v : x) d += std::exp(static_cast<double>(v) - m);
  return {m, d};
}

topk_result oracle_topk(std::span<const float> values, std::size_t k) {
  require_finite(values);
  if (k == 0 || k > values.size()) throw invalid_k_error();
  std::vector<std::int64_t> order(values.size());
  std::iota(order.begin(), order.end(), std::int64_t{0});
  std::sort(order.begin(), order.end(), [&](std::int64_t a, std::int64_t b) {
    if (values[a] != values[b]) return values[a] > values[b];
    return a < b;
  });
  topk_result r;
  r.values.reserve(k);
  r.indices.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    r.values.push_back(values[order[i]]);
    r.indices.push_back(order[i]);
  }
  return r;
}

}  // namespace osmx
