#pragma once

#include <map>
#include <string>

#include "alcove/errors.hpp"
#include "alcove/rational.hpp"

namespace alcove {

// Sparse Laurent polynomial in q_e with rational coefficients. No zero
// coefficient is ever stored.
class QLaurent {
 public:
  using Terms = std::map<int, Rational>;

  QLaurent() = default;
  QLaurent(long c) { if (c != 0) t_[0] = c; }
  QLaurent(const Rational& c) { if (!alcove::is_zero(c)) t_[0] = c; }
  static QLaurent monomial(int k, const Rational& c = 1) {
    QLaurent x;
    if (!alcove::is_zero(c)) x.t_[k] = c;
    return x;
  }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int min_degree() const { return t_.begin()->first; }
  int max_degree() const { return t_.rbegin()->first; }
  Rational coefficient(int k) const {
    auto it = t_.find(k);
    return it == t_.end() ? Rational(0) : it->second;
  }
  // Value at q_e = 1.
  Rational at_one() const {
    Rational s = 0;
    for (const auto& [k, c] : t_) s += c;
    return s;
  }
  // x(q_e) -> x(q_e^{-1})
  QLaurent bar() const {
    QLaurent out;
    for (const auto& [k, c] : t_) out.t_[-k] = c;
    return out;
  }
  QLaurent shifted(int k) const {
    QLaurent out;
    for (const auto& [e, c] : t_) out.t_.emplace_hint(out.t_.end(), e + k, c);
    return out;
  }

  QLaurent& operator+=(const QLaurent& o) {
    for (const auto& [k, c] : o.t_) add_term(k, c);
    return *this;
  }
  QLaurent& operator-=(const QLaurent& o) {
    for (const auto& [k, c] : o.t_) add_term(k, -c);
    return *this;
  }
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator-(const QLaurent& a) { return QLaurent() - a; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    QLaurent out;
    for (const auto& [i, x] : a.t_)
      for (const auto& [j, y] : b.t_) out.add_term(i + j, x * y);
    return out;
  }
  QLaurent& operator*=(const QLaurent& o) { return *this = *this * o; }
  friend bool operator==(const QLaurent& a, const QLaurent& b) { return a.t_ == b.t_; }

  // Exact quotient; throws NonExactDivision when divisor does not divide.
  QLaurent exact_div(const QLaurent& d) const {
    if (d.is_zero()) throw NonExactDivision("division by the zero Laurent polynomial");
    QLaurent rem = *this, quo;
    const int dtop = d.max_degree(), dlow = d.min_degree();
    const Rational& lead = d.t_.rbegin()->second;
    const int floor = is_zero() ? 0 : min_degree() - dlow;
    while (!rem.is_zero()) {
      const int k = rem.max_degree() - dtop;
      if (k < floor) throw NonExactDivision("Laurent remainder is nonzero");
      const Rational c = rem.t_.rbegin()->second / lead;
      quo.add_term(k, c);
      for (const auto& [j, y] : d.t_) rem.add_term(j + k, -c * y);
    }
    return quo;
  }

  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      const auto& [k, c] = *it;
      std::string cs = c.get_str();
      if (!out.empty()) {
        if (cs[0] == '-') {
          out += " - ";
          cs.erase(0, 1);
        } else {
          out += " + ";
        }
      }
      if (k == 0) {
        out += cs;
        continue;
      }
      if (cs == "-1") out += "-";
      else if (cs != "1") out += cs + "*";
      out += "q" + (k == 1 ? std::string() : "^" + std::to_string(k));
    }
    return out;
  }

 private:
  void add_term(int k, const Rational& c) {
    if (alcove::is_zero(c)) return;
    auto [it, fresh] = t_.emplace(k, c);
    if (fresh) return;
    it->second += c;
    if (alcove::is_zero(it->second)) t_.erase(it);
  }

  Terms t_;
};

inline bool is_zero(const QLaurent& x) { return x.is_zero(); }
inline QLaurent divide_exact(const QLaurent& a, const QLaurent& b) { return a.exact_div(b); }
inline Rational divide_exact(const Rational& a, const Rational& b) {
  if (is_zero(b)) throw NonExactDivision("division by zero");
  return a / b;
}

}  // namespace alcove
