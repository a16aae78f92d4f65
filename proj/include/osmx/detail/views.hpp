#pragma once

#include <cstddef>

#include "osmx/access_stats.hpp"

namespace osmx::detail {

// Element-access policies the kernel templates are instantiated with.
// The counted variants differ from the plain ones only by the tally
// increment, so both instantiations perform identical arithmetic.

template <class T>
struct plain_read_view {
  const T* data;
  std::size_t n;
  std::size_t size() const { return n; }
  T load(std::size_t i) const { return data[i]; }
};

template <class T>
struct plain_write_view {
  T* data;
  void store(std::size_t i, T v) const { data[i] = v; }
};

template <class T>
struct counted_read_view {
  const T* data;
  std::size_t n;
  access_stats* stats;
  std::size_t size() const { return n; }
  T load(std::size_t i) const {
    ++stats->loads;
    return data[i];
  }
};

template <class T>
struct counted_write_view {
  T* data;
  access_stats* stats;
  void store(std::size_t i, T v) const {
    ++stats->stores;
    data[i] = v;
  }
};

}  // namespace osmx::detail
