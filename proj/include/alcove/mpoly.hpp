#pragma once

#include <map>
#include <string>
#include <vector>

#include "alcove/coords.hpp"
#include "alcove/errors.hpp"
#include "alcove/rational.hpp"

namespace alcove {

// Polynomial over Q in a fixed number of variables. In the GKM code the first
// rank variables are the simple roots and the last one is hbar.
class MPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  MPoly() = default;
  explicit MPoly(int nvars) : nvars_(nvars) {}
  static MPoly constant(int nvars, const Rational& c) {
    MPoly p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
  }
  static MPoly variable(int nvars, int j) {
    Monomial m(nvars);
    m[j] = 1;
    MPoly p(nvars);
    p.add_term(m, 1);
    return p;
  }
  static MPoly monomial(const Monomial& m, const Rational& c = 1) {
    MPoly p(m.size());
    p.add_term(m, c);
    return p;
  }

  int num_variables() const { return nvars_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int total_degree() const {
    int d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, m.sum());
    return d;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.emplace(m, c);
    if (fresh) return;
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }

  MPoly& operator+=(const MPoly& o) {
    if (nvars_ == 0) nvars_ = o.nvars_;
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    if (nvars_ == 0) nvars_ = o.nvars_;
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(const MPoly& a) { return Rational(-1) * a; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly out(std::max(a.nvars_, b.nvars_));
    for (const auto& [x, c] : a.t_)
      for (const auto& [y, d] : b.t_) out.add_term(x + y, c * d);
    return out;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  friend MPoly operator*(const Rational& s, const MPoly& a) {
    MPoly out(a.nvars_);
    if (s == 0) return out;
    for (const auto& [x, c] : a.t_) out.t_.emplace(x, s * c);
    return out;
  }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.t_ == b.t_; }

  MPoly pow(int k) const {
    MPoly out = constant(nvars_, 1);
    for (int i = 0; i < k; ++i) out *= *this;
    return out;
  }

  // Leading monomial in graded-lex order.
  const Monomial& leading_monomial() const {
    auto best = t_.begin();
    for (auto it = t_.begin(); it != t_.end(); ++it)
      if (grlex_less(best->first, it->first)) best = it;
    return best->first;
  }

  // q with q * g == *this; throws NonExactDivision otherwise.
  MPoly exact_div(const MPoly& g) const {
    if (g.is_zero()) throw NonExactDivision("division by the zero polynomial");
    const Monomial lead = g.leading_monomial();
    const Rational lead_c = g.t_.at(lead);
    MPoly rem = *this, quo(nvars_);
    while (!rem.is_zero()) {
      const Monomial top = rem.leading_monomial();
      Monomial k = top;
      for (int i = 0; i < k.size(); ++i) {
        k[i] -= lead[i];
        if (k[i] < 0) throw NonExactDivision("polynomial remainder is nonzero");
      }
      const Rational c = rem.t_.at(top) / lead_c;
      quo.add_term(k, c);
      rem -= monomial(k, c) * g;
    }
    return quo;
  }

  // Replaces variable j by images[j].
  MPoly substitute(const std::vector<MPoly>& images) const {
    MPoly out(images.empty() ? nvars_ : images.front().nvars_);
    std::vector<std::vector<MPoly>> powers(images.size());
    for (const auto& [m, c] : t_) {
      MPoly term = constant(out.nvars_, c);
      for (int j = 0; j < m.size(); ++j) {
        if (m[j] == 0) continue;
        auto& p = powers[static_cast<std::size_t>(j)];
        if (p.empty()) p.push_back(constant(out.nvars_, 1));
        while (static_cast<int>(p.size()) <= m[j]) p.push_back(p.back() * images[static_cast<std::size_t>(j)]);
        term *= p[static_cast<std::size_t>(m[j])];
      }
      out += term;
    }
    return out;
  }

  // Variables print as a1..ar and the last one as h.
  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      const auto& [m, c] = *it;
      if (!out.empty()) out += " + ";
      std::string mono;
      for (int j = 0; j < m.size(); ++j) {
        if (m[j] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += (j + 1 == nvars_) ? std::string("h") : "a" + std::to_string(j + 1);
        if (m[j] > 1) mono += "^" + std::to_string(m[j]);
      }
      if (mono.empty()) out += c.get_str();
      else if (c == 1) out += mono;
      else out += c.get_str() + "*" + mono;
    }
    return out;
  }

 private:
  int nvars_ = 0;
  Terms t_;
};

// num / den with den nonzero; equality by cross-multiplication.
struct RationalFunction {
  MPoly num, den;

  static RationalFunction polynomial(const MPoly& p) { return {p, MPoly::constant(p.num_variables(), 1)}; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) { return a.num * b.den == b.num * a.den; }
  // The numerator divided out, when the quotient is a polynomial.
  bool is_polynomial() const {
    try {
      (void)num.exact_div(den);
      return true;
    } catch (const NonExactDivision&) {
      return false;
    }
  }
};

}  // namespace alcove
