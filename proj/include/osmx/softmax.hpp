#pragma once

#include <span>
#include <vector>

namespace osmx {

// Whole-vector softmax over 32-bit floats. All three variants are pure
// functions: no shared state, safe to call concurrently, deterministic for
// a given input on a given build. Inputs must be non-empty and finite
// (empty_input_error / non_finite_error otherwise); a fresh output vector
// is returned.

/// Two passes (normalizer, outputs) with no overflow protection: any input
/// above ~88.7 overflows exp in single precision and the Inf/NaN is
/// returned as-is.
std::vector<float> naive_softmax(std::span<const float> x);

/// Three passes (maximum, normalizer, outputs); subtracting the maximum
/// keeps every intermediate finite, outputs lie in [0, 1] and sum to 1 up
/// to rounding.
std::vector<float> safe_softmax(std::span<const float> x);

/// Two passes: the maximum and the normalizer are computed together in one
/// streaming pass, rescaling the partial normalizer whenever the running
/// maximum grows. Same guarantees as safe_softmax; outputs agree with it
/// to within a couple of ULPs.
std::vector<float> online_softmax(std::span<const float> x);

}  // namespace osmx
