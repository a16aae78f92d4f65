#include "osmx/softmax.hpp"

#include "osmx/detail/kernels.hpp"
#include "osmx/detail/views.hpp"

namespace osmx {

namespace {

template <void (*Kernel)(const detail::plain_read_view<float>&, const detail::plain_write_view<float>&)>
std::vector<float> run(std::span<const float> x) {
  std::vector<float> y(x.size());
  Kernel(detail::plain_read_view<float>{x.data(), x.size()}, detail::plain_write_view<float>{y.data()});
  return y;
}

}  // namespace

std::vector<float> naive_softmax(std::span<const float> x) {
  return run<detail::naive_softmax_kernel>(x);
}

std::vector<float> safe_softmax(std::span<const float> x) {
  return run<detail::safe_softmax_kernel>(x);
}

std::vector<float> online_softmax(std::span<const float> x) {
  return run<detail::online_softmax_kernel>(x);
}

}  // namespace osmx
