#include "alcove/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace alcove {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

// Quotient of a by b (b monic or not), exact division assumed.
Poly poly_divide(Poly a, const Poly& b) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(a.size()) - 1 < db) return {};
  Poly q(a.size() - static_cast<std::size_t>(db), Rational(0));
  for (int k = static_cast<int>(a.size()) - 1; k >= db; --k) {
    const Rational c = a[static_cast<std::size_t>(k)] / b.back();
    q[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(k - db + j)] -= c * b[static_cast<std::size_t>(j)];
  }
  return q;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Remainder of a modulo b.
Poly poly_mod(Poly a, const Poly& b) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  for (int k = static_cast<int>(a.size()) - 1; k >= db; --k) {
    const Rational c = a[static_cast<std::size_t>(k)] / b.back();
    if (is_zero(c)) continue;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(k - db + j)] -= c * b[static_cast<std::size_t>(j)];
  }
  if (static_cast<int>(a.size()) > db) a.resize(static_cast<std::size_t>(db));
  trim(a);
  return a;
}

Poly cyclotomic_polynomial(int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d
  Poly p(static_cast<std::size_t>(n + 1), Rational(0));
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_divide(p, cyclotomic_polynomial(d));
  return p;
}

}  // namespace

const CyclotomicField& CyclotomicField::get(int l) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[l];
  if (!slot) slot.reset(new CyclotomicField(l));
  return *slot;
}

CyclotomicField::CyclotomicField(int l) : l_(l), modulus_(cyclotomic_polynomial(l)) {
  powers_.reserve(static_cast<std::size_t>(l));
  for (int k = 0; k < l; ++k) {
    Poly x(static_cast<std::size_t>(k + 1), Rational(0));
    x[static_cast<std::size_t>(k)] = 1;
    Poly r = poly_mod(std::move(x), modulus_);
    r.resize(static_cast<std::size_t>(degree()), Rational(0));
    powers_.push_back(std::move(r));
  }
}

std::vector<Rational> CyclotomicField::reduce(std::vector<Rational> poly) const {
  Poly r = poly_mod(std::move(poly), modulus_);
  r.resize(static_cast<std::size_t>(degree()), Rational(0));
  return r;
}

CycScalar CyclotomicField::zero() const { return from_rational(0); }
CycScalar CyclotomicField::one() const { return from_rational(1); }

CycScalar CyclotomicField::from_rational(const Rational& c) const {
  Poly v(static_cast<std::size_t>(degree()), Rational(0));
  v[0] = c;
  return CycScalar(this, std::move(v));
}

CycScalar CyclotomicField::zeta_power(long k) const {
  const long m = ((k % l_) + l_) % l_;
  return CycScalar(this, powers_[static_cast<std::size_t>(m)]);
}

CycScalar CyclotomicField::qpow(long k) const { return zeta_power(k); }

CycScalar::CycScalar(const CyclotomicField* field, std::vector<Rational> coeffs) : field_(field), c_(std::move(coeffs)) {
  if (field_ && static_cast<int>(c_.size()) != field_->degree()) c_ = field_->reduce(std::move(c_));
  if (c_.empty()) c_.push_back(Rational(0));
}

void CycScalar::adopt(const CyclotomicField* f) {
  if (field_ || !f) return;
  field_ = f;
  c_.resize(static_cast<std::size_t>(f->degree()), Rational(0));
}

std::vector<Rational> CycScalar::coefficients() const { return c_; }

bool CycScalar::is_zero() const {
  for (const auto& x : c_)
    if (!alcove::is_zero(x)) return false;
  return true;
}

bool CycScalar::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!alcove::is_zero(c_[i])) return false;
  return true;
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
  adopt(o.field_);
  if (o.field_ == nullptr) {
    c_[0] += o.c_[0];
    return *this;
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
  adopt(o.field_);
  if (o.field_ == nullptr) {
    c_[0] -= o.c_[0];
    return *this;
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycScalar operator-(const CycScalar& a) {
  CycScalar out = a;
  for (auto& x : out.c_) x = -x;
  return out;
}

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
  if (!a.field_ || !b.field_) {
    const CycScalar& s = a.field_ ? b : a;  // the bare rational
    const CycScalar& v = a.field_ ? a : b;
    CycScalar out = v;
    if (sgn(s.c_[0]) == 0) return CycScalar(v.field_, {});
    for (auto& x : out.c_) x *= s.c_[0];
    return out;
  }
  return CycScalar(a.field_, poly_mul(a.c_, b.c_));
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw NonExactDivision("inverse of zero in the cyclotomic field");
  if (!field_) return CycScalar(Rational(1) / c_[0]);
  // Extended Euclid: find s with s * a = 1 mod Phi_l.
  Poly r0 = field_->modulus(), r1 = c_;
  trim(r1);
  Poly s0{}, s1{Rational(1)};
  while (!(r1.size() == 1)) {
    Poly q = poly_divide(r0, r1);
    Poly r2 = poly_mod(r0, r1);
    Poly qs = poly_mul(q, s1);
    Poly s2 = s0;
    if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
    for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  const Rational inv = Rational(1) / r1[0];
  for (auto& x : s1) x *= inv;
  return CycScalar(field_, std::move(s1));
}

bool operator==(const CycScalar& a, const CycScalar& b) {
  if (a.field_ && b.field_ && a.field_ != b.field_) return false;
  return (a - b).is_zero();
}

std::string CycScalar::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (alcove::is_zero(c_[i])) continue;
    std::string cs = c_[i].get_str();
    if (!out.empty()) {
      if (cs[0] == '-') {
        out += " - ";
        cs.erase(0, 1);
      } else {
        out += " + ";
      }
    }
    if (i == 0) {
      out += cs;
      continue;
    }
    if (cs == "-1") out += "-";
    else if (cs != "1") out += cs + "*";
    out += "z" + (i == 1 ? std::string() : "^" + std::to_string(i));
  }
  return out.empty() ? "0" : out;
}

}  // namespace alcove
