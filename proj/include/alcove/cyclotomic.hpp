#pragma once

#include <string>
#include <vector>

#include "alcove/errors.hpp"
#include "alcove/rational.hpp"

namespace alcove {

class CycScalar;

// Q(zeta_l) as Q[x] / Phi_l(x). Fields are created once per l and shared;
// the instance cache is guarded, the fields themselves are immutable.
class CyclotomicField {
 public:
  using Coeff = CycScalar;

  static const CyclotomicField& get(int l);

  int order() const { return l_; }
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  // Coefficients of Phi_l, constant term first, monic.
  const std::vector<Rational>& modulus() const { return modulus_; }

  CycScalar zero() const;
  CycScalar one() const;
  CycScalar from_rational(const Rational& c) const;
  // zeta_l^k for any integer k.
  CycScalar zeta_power(long k) const;
  // Same as zeta_power: the specialization of q_e^k.
  CycScalar qpow(long k) const;

  // Reduces a coefficient vector of any length modulo Phi_l.
  std::vector<Rational> reduce(std::vector<Rational> poly) const;

 private:
  explicit CyclotomicField(int l);

  int l_;
  std::vector<Rational> modulus_;
  std::vector<std::vector<Rational>> powers_;  // x^k mod Phi_l, 0 <= k < l
};

// An element of Q(zeta_l) in the power basis 1, zeta, ..., zeta^{phi(l)-1}.
// A default or integer-constructed scalar is a bare rational with no field
// attached; it adopts the field of whatever it is combined with.
class CycScalar {
 public:
  CycScalar() : c_{Rational(0)} {}
  CycScalar(long v) : c_{Rational(v)} {}
  CycScalar(const Rational& v) : c_{v} {}
  CycScalar(const CyclotomicField* field, std::vector<Rational> coeffs);

  const CyclotomicField* field() const { return field_; }
  // Coefficients in the power basis, padded to the field degree.
  std::vector<Rational> coefficients() const;
  bool is_zero() const;
  bool is_rational() const;
  Rational rational_part() const { return c_[0]; }

  CycScalar& operator+=(const CycScalar& o);
  CycScalar& operator-=(const CycScalar& o);
  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator-(const CycScalar& a);
  friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
  CycScalar& operator*=(const CycScalar& o) { return *this = *this * o; }
  CycScalar inverse() const;
  friend CycScalar operator/(const CycScalar& a, const CycScalar& b) { return a * b.inverse(); }
  friend bool operator==(const CycScalar& a, const CycScalar& b);

  std::string to_string() const;

 private:
  void adopt(const CyclotomicField* f);

  const CyclotomicField* field_ = nullptr;
  std::vector<Rational> c_;
};

inline bool is_zero(const CycScalar& x) { return x.is_zero(); }
inline CycScalar divide_exact(const CycScalar& a, const CycScalar& b) {
  if (b.is_zero()) throw NonExactDivision("division by zero in the cyclotomic field");
  return a / b;
}

}  // namespace alcove
