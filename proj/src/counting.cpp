#include "osmx/counting.hpp"

#include "osmx/bench.hpp"
#include "osmx/detail/kernels.hpp"
#include "osmx/error.hpp"

namespace osmx {

std::string_view column_name(algorithm alg) {
  switch (alg) {
    case algorithm::naive_softmax: return "NaiveSoftmax";
    case algorithm::safe_softmax: return "SafeSoftmax";
    case algorithm::online_softmax: return "OnlineSoftmax";
    case algorithm::safe_softmax_unfused_topk: return "SafeSoftmaxUnfusedTopK";
    case algorithm::safe_softmax_fused_topk: return "SafeSoftmaxFusedTopK";
    case algorithm::online_softmax_fused_topk: return "OnlineSoftmaxFusedTopK";
  }
  return "?";
}

std::optional<algorithm> parse_algorithm(std::string_view name) {
  for (algorithm alg : all_algorithms) {
    if (name == column_name(alg)) return alg;
  }
  if (name == "naive") return algorithm::naive_softmax;
  if (name == "safe") return algorithm::safe_softmax;
  if (name == "online") return algorithm::online_softmax;
  if (name == "safe-unfused-topk") return algorithm::safe_softmax_unfused_topk;
  if (name == "safe-fused-topk") return algorithm::safe_softmax_fused_topk;
  if (name == "online-fused-topk") return algorithm::online_softmax_fused_topk;
  return std::nullopt;
}

bool uses_topk(algorithm alg) {
  switch (alg) {
    case algorithm::naive_softmax:
    case algorithm::safe_softmax:
    case algorithm::online_softmax:
      return false;
    default:
      return true;
  }
}

namespace {

template <void (*Kernel)(const detail::counted_read_view<float>&, const detail::counted_write_view<float>&)>
std::vector<float> run_counted(counting_vec& x) {
  std::vector<float> y(x.size());
  auto in = x.read_view();
  Kernel(in, detail::counted_write_view<float>{y.data(), in.stats});
  return y;
}

topk_result make_result(std::size_t k) {
  topk_result r;
  r.values.resize(k);
  r.indices.resize(k);
  return r;
}

}  // namespace

std::vector<float> naive_softmax(counting_vec& x) {
  return run_counted<detail::naive_softmax_kernel>(x);
}

std::vector<float> safe_softmax(counting_vec& x) {
  return run_counted<detail::safe_softmax_kernel>(x);
}

std::vector<float> online_softmax(counting_vec& x) {
  return run_counted<detail::online_softmax_kernel>(x);
}

topk_result topk_of(counting_vec& values, std::size_t k) {
  detail::require_nonempty(values.size());
  detail::require_valid_k(k, values.size());
  topk_result r = make_result(k);
  auto in = values.read_view();
  detail::topk_kernel(in, k, detail::counted_write_view<float>{r.values.data(), in.stats},
                      detail::counted_write_view<std::int64_t>{r.indices.data(), in.stats});
  return r;
}

topk_result safe_softmax_then_topk(counting_vec& x, std::size_t k) {
  detail::require_nonempty(x.size());
  detail::require_valid_k(k, x.size());
  auto in = x.read_view();
  // The intermediate probability vector is real memory traffic here: its
  // store and reload are what the fused variants save.
  std::vector<float> y(x.size());
  detail::safe_softmax_kernel(in, detail::counted_write_view<float>{y.data(), in.stats});
  topk_result r = make_result(k);
  detail::topk_kernel(detail::counted_read_view<float>{y.data(), y.size(), in.stats}, k,
                      detail::counted_write_view<float>{r.values.data(), in.stats},
                      detail::counted_write_view<std::int64_t>{r.indices.data(), in.stats});
  return r;
}

topk_result safe_softmax_fused_topk(counting_vec& x, std::size_t k) {
  detail::require_nonempty(x.size());
  detail::require_valid_k(k, x.size());
  topk_result r = make_result(k);
  auto in = x.read_view();
  detail::safe_softmax_fused_topk_kernel(in, k,
                                         detail::counted_write_view<float>{r.values.data(), in.stats},
                                         detail::counted_write_view<std::int64_t>{r.indices.data(), in.stats});
  return r;
}

topk_result online_softmax_topk(counting_vec& x, std::size_t k) {
  detail::require_nonempty(x.size());
  detail::require_valid_k(k, x.size());
  topk_result r = make_result(k);
  auto in = x.read_view();
  detail::online_softmax_topk_kernel(in, k,
                                     detail::counted_write_view<float>{r.values.data(), in.stats},
                                     detail::counted_write_view<std::int64_t>{r.indices.data(), in.stats});
  return r;
}

access_stats count_accesses(algorithm alg, std::size_t v, std::size_t k) {
  detail::require_nonempty(v);
  if (uses_topk(alg)) {
    detail::require_valid_k(k, v);
  } else if (k != 0) {
    throw invalid_k_error();
  }
  counting_vec x(generate_inputs(/*seed=*/1, /*batch=*/1, v).front());
  switch (alg) {
    case algorithm::naive_softmax: naive_softmax(x); break;
    case algorithm::safe_softmax: safe_softmax(x); break;
    case algorithm::online_softmax: online_softmax(x); break;
    case algorithm::safe_softmax_unfused_topk: safe_softmax_then_topk(x, k); break;
    case algorithm::safe_softmax_fused_topk: safe_softmax_fused_topk(x, k); break;
    case algorithm::online_softmax_fused_topk: online_softmax_topk(x, k); break;
  }
  return x.stats();
}

}  // namespace osmx
