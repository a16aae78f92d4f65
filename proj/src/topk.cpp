#include "osmx/topk.hpp"

#include "osmx/detail/kernels.hpp"
#include "osmx/detail/views.hpp"
#include "osmx/softmax.hpp"

namespace osmx {

namespace {

topk_result make_result(std::size_t k) {
  topk_result r;
  r.values.resize(k);
  r.indices.resize(k);
  return r;
}

}  // namespace

topk_result topk_of(std::span<const float> values, std::size_t k) {
  detail::require_nonempty(values.size());
  detail::require_valid_k(k, values.size());
  topk_result r = make_result(k);
  detail::topk_kernel(detail::plain_read_view<float>{values.data(), values.size()}, k,
                      detail::plain_write_view<float>{r.values.data()},
                      detail::plain_write_view<std::int64_t>{r.indices.data()});
  return r;
}

topk_result safe_softmax_then_topk(std::span<const float> x, std::size_t k) {
  detail::require_nonempty(x.size());
  detail::require_valid_k(k, x.size());
  const std::vector<float> y = safe_softmax(x);
  return topk_of(y, k);
}

topk_result safe_softmax_fused_topk(std::span<const float> x, std::size_t k) {
  detail::require_nonempty(x.size());
  detail::require_valid_k(k, x.size());
  topk_result r = make_result(k);
  detail::safe_softmax_fused_topk_kernel(detail::plain_read_view<float>{x.data(), x.size()}, k,
                                         detail::plain_write_view<float>{r.values.data()},
                                         detail::plain_write_view<std::int64_t>{r.indices.data()});
  return r;
}

topk_result online_softmax_topk(std::span<const float> x, std::size_t k) {
  detail::require_nonempty(x.size());
  detail::require_valid_k(k, x.size());
  topk_result r = make_result(k);
  detail::online_softmax_topk_kernel(detail::plain_read_view<float>{x.data(), x.size()}, k,
                                     detail::plain_write_view<float>{r.values.data()},
                                     detail::plain_write_view<std::int64_t>{r.indices.data()});
  return r;
}

}  // namespace osmx
