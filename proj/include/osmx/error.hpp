#pragma once

#include <stdexcept>

namespace osmx {

/// Operation received an empty vector; every algorithm here needs V >= 1.
struct empty_input_error : std::invalid_argument {
  empty_input_error() : std::invalid_argument("empty input vector") {}
};

/// Operation received a NaN or infinity where a finite value is required.
struct non_finite_error : std::invalid_argument {
  non_finite_error() : std::invalid_argument("non-finite input element") {}
};

/// Top-k width outside [1, V]. K > V is rejected rather than clamped.
struct invalid_k_error : std::invalid_argument {
  invalid_k_error() : std::invalid_argument("k must satisfy 1 <= k <= input size") {}
};

/// Chunked reduction called with chunk length 0.
struct invalid_chunk_error : std::invalid_argument {
  invalid_chunk_error() : std::invalid_argument("chunk length must be >= 1") {}
};

}  // namespace osmx
