#include "alcove/jet.hpp"

#include <algorithm>

namespace alcove {

LaurentJet divide(const Jet& num, const Jet& den) {
  const int n = den.precision();
  const int v = den.valuation();
  if (v == n) throw NonExactDivision("jet denominator vanishes to full precision");
  const int a = num.valuation();
  LaurentJet out;
  out.valuation = a - v;
  const int len = std::min(n - a, n - v);
  if (len <= 0) return out;

  // inverse of den / eps^v to length len
  std::vector<CycScalar> inv(static_cast<std::size_t>(len));
  const CycScalar lead_inv = den[v].inverse();
  inv[0] = lead_inv;
  for (int k = 1; k < len; ++k) {
    CycScalar s(0);
    for (int j = 1; j <= k && v + j < n; ++j) s += den[v + j] * inv[static_cast<std::size_t>(k - j)];
    inv[static_cast<std::size_t>(k)] = -(s * lead_inv);
  }
  out.coeffs.assign(static_cast<std::size_t>(len), CycScalar(0));
  for (int i = 0; i < len; ++i) {
    const CycScalar& x = num[a + i];
    if (x.is_zero()) continue;
    for (int j = 0; i + j < len; ++j) out.coeffs[static_cast<std::size_t>(i + j)] += x * inv[static_cast<std::size_t>(j)];
  }
  return out;
}

}  // namespace alcove
