#pragma once

#include <vector>

#include "alcove/cyclotomic.hpp"

namespace alcove {

// Truncated power series a_0 + a_1 eps + ... + a_{N-1} eps^{N-1} over Q(zeta_l).
class Jet {
 public:
  Jet() = default;
  explicit Jet(int precision) : a_(static_cast<std::size_t>(precision), CycScalar(0)) {}

  int precision() const { return static_cast<int>(a_.size()); }
  const CycScalar& operator[](int k) const { return a_[static_cast<std::size_t>(k)]; }
  CycScalar& operator[](int k) { return a_[static_cast<std::size_t>(k)]; }
  // Index of the first nonzero coefficient, or precision() if none.
  int valuation() const {
    for (int k = 0; k < precision(); ++k)
      if (!a_[static_cast<std::size_t>(k)].is_zero()) return k;
    return precision();
  }

  Jet& operator+=(const Jet& o) {
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b) {
    const int n = a.precision();
    Jet out(n);
    for (int i = 0; i < n; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; i + j < n; ++j)
        if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
    return out;
  }
  friend Jet operator*(const CycScalar& s, const Jet& a) {
    Jet out(a.precision());
    for (int k = 0; k < a.precision(); ++k) out[k] = s * a[k];
    return out;
  }

 private:
  std::vector<CycScalar> a_;
};

// Quotient of two jets as a truncated Laurent series: coefficient k of
// `coeffs` multiplies eps^{valuation + k}.
struct LaurentJet {
  int valuation = 0;
  std::vector<CycScalar> coeffs;

  CycScalar coefficient(int power) const {
    const int k = power - valuation;
    if (k < 0 || k >= static_cast<int>(coeffs.size())) return CycScalar(0);
    return coeffs[static_cast<std::size_t>(k)];
  }
  // True if some eps^k with k < 0 has a nonzero coefficient.
  bool has_pole() const {
    for (int k = 0; k < static_cast<int>(coeffs.size()) && valuation + k < 0; ++k)
      if (!coeffs[static_cast<std::size_t>(k)].is_zero()) return true;
    return false;
  }
};

// num / den. Throws NonExactDivision if den vanishes to full precision.
LaurentJet divide(const Jet& num, const Jet& den);

}  // namespace alcove
