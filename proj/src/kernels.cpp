#include "alcove/kernels.hpp"

namespace alcove {

Jet shift_sum(const std::vector<Jet>& outer, const std::vector<Jet>& inner, const std::vector<ShiftRow>& rows,
              int precision, Exec exec) {
  auto row_value = [&](int r) {
    const ShiftRow& row = rows[static_cast<std::size_t>(r)];
    Jet acc(precision);
    for (const auto& [j, m] : row.inner) acc += CycScalar(m) * inner[static_cast<std::size_t>(j)];
    return outer[static_cast<std::size_t>(row.outer)] * acc;
  };
  const std::vector<Jet> parts = map_indices<Jet>(static_cast<int>(rows.size()), row_value, exec);
  Jet total(precision);
  for (const Jet& p : parts) total += p;
  return total;
}

}  // namespace alcove
