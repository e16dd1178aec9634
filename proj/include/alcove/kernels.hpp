#pragma once

#include <utility>
#include <vector>

#include "alcove/jet.hpp"

namespace alcove {

enum class Exec { Serial, Parallel };

// out[i] = fn(i) for 0 <= i < n. The parallel path hands indices to OpenMP
// threads dynamically; fn must be safe to call concurrently.
template <typename T, typename F>
std::vector<T> map_indices(int n, F&& fn, Exec exec) {
  std::vector<T> out(static_cast<std::size_t>(n));
  if (exec == Exec::Serial) {
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(i);
    return out;
  }
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(i);
  return out;
}

// One row of the double shift sum: the outer jet and the (index, multiplicity)
// list of inner jets it pairs with.
struct ShiftRow {
  int outer = 0;
  std::vector<std::pair<int, long>> inner;
};

// sum over rows r of outer[r.outer] * sum_{(j, m) in r.inner} m * inner[j].
// Rows are reduced in order, so both paths give identical results.
Jet shift_sum(const std::vector<Jet>& outer, const std::vector<Jet>& inner, const std::vector<ShiftRow>& rows,
              int precision, Exec exec);

}  // namespace alcove
