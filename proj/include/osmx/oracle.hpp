#pragma once

#include <span>
#include <vector>

#include "osmx/normalizer.hpp"
#include "osmx/topk.hpp"

namespace osmx {

// Double-precision reference implementations, used as ground truth by the
// test suites. They share no code with the fp32 kernels: straight-line
// evaluation of the defining formulas.

/// Max-subtracted softmax evaluated entirely in double.
std::vector<double> oracle_softmax(std::span<const float> x);

/// Exact maximum and double-precision sum of e^(x_i - max).
norm_state<double> oracle_normalizer(std::span<const float> x);

/// Top-k by full sort on (value descending, index ascending).
topk_result oracle_topk(std::span<const float> values, std::size_t k);

}  // namespace osmx
