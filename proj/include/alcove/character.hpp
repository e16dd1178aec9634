#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <type_traits>

#include "alcove/coords.hpp"
#include "alcove/cyclotomic.hpp"
#include "alcove/laurent.hpp"
#include "alcove/weyl.hpp"

namespace alcove {

// Finitely supported sum  sum_lambda c_lambda K_lambda  over the weight lattice.
// Coeff is Rational, QLaurent (generic q_e) or CycScalar (q_e = zeta_l).
template <typename Coeff>
class Character {
 public:
  using Terms = std::map<Weight, Coeff>;

  Character() = default;
  static Character monomial(const Weight& lambda, const Coeff& c = Coeff(1)) {
    Character x;
    x.add_term(lambda, c);
    return x;
  }
  static Character constant(int rank, const Coeff& c) { return monomial(Weight(rank), c); }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  Coeff coefficient(const Weight& lambda) const {
    auto it = t_.find(lambda);
    return it == t_.end() ? Coeff(0) : it->second;
  }

  void add_term(const Weight& lambda, const Coeff& c) {
    if (alcove::is_zero(c)) return;
    auto [it, fresh] = t_.emplace(lambda, c);
    if (fresh) return;
    it->second += c;
    if (alcove::is_zero(it->second)) t_.erase(it);
  }

  Character& operator+=(const Character& o) {
    for (const auto& [k, c] : o.t_) add_term(k, c);
    return *this;
  }
  Character& operator-=(const Character& o) {
    for (const auto& [k, c] : o.t_) add_term(k, -c);
    return *this;
  }
  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a -= b; }
  friend Character operator-(const Character& a) { return Character() - a; }
  friend Character operator*(const Character& a, const Character& b) {
    Character out;
    for (const auto& [x, c] : a.t_)
      for (const auto& [y, d] : b.t_) out.add_term(x + y, c * d);
    return out;
  }
  Character& operator*=(const Character& o) { return *this = *this * o; }
  friend Character operator*(const Coeff& s, const Character& a) {
    Character out;
    for (const auto& [x, c] : a.t_) out.add_term(x, s * c);
    return out;
  }
  friend bool operator==(const Character& a, const Character& b) { return a.t_ == b.t_; }

  // K_lambda -> K_{w lambda}
  Character act(const WeylGroup& W, int w) const {
    Character out;
    for (const auto& [x, c] : t_) out.add_term(W.act(w, x), c);
    return out;
  }
  bool is_invariant(const WeylGroup& W) const {
    for (int i = 0; i < W.rank(); ++i)
      if (!(act(W, W.simple_reflection(i)) == *this)) return false;
    return true;
  }

  template <typename Other, typename F>
  Character<Other> map_coefficients(F&& f) const {
    Character<Other> out;
    for (const auto& [x, c] : t_) out.add_term(x, f(c));
    return out;
  }

  // Leading and trailing weights in the graded-lexicographic order.
  const Weight& leading_weight() const { return std::max_element(t_.begin(), t_.end(), by_grlex)->first; }
  const Weight& trailing_weight() const { return std::min_element(t_.begin(), t_.end(), by_grlex)->first; }

  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [x, c] : t_) {
      if (!out.empty()) out += " + ";
      out += "(" + coeff_string(c) + ")K" + x.to_string();
    }
    return out;
  }

 private:
  static bool by_grlex(const typename Terms::value_type& a, const typename Terms::value_type& b) {
    return grlex_less(a.first, b.first);
  }
  static std::string coeff_string(const Coeff& c) {
    if constexpr (std::is_same_v<Coeff, Rational>) return c.get_str();
    else return c.to_string();
  }

  Terms t_;
};

// Polynomial in the fundamental characters e_i = ch V(varpi_i).
template <typename Coeff>
class InvariantPoly {
 public:
  using Terms = std::map<Monomial, Coeff>;

  InvariantPoly() = default;
  explicit InvariantPoly(int nvars) : nvars_(nvars) {}

  int num_variables() const { return nvars_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add_term(const Monomial& m, const Coeff& c) {
    if (alcove::is_zero(c)) return;
    auto [it, fresh] = t_.emplace(m, c);
    if (fresh) return;
    it->second += c;
    if (alcove::is_zero(it->second)) t_.erase(it);
  }
  int total_degree() const {
    int d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, m.sum());
    return d;
  }
  friend bool operator==(const InvariantPoly& a, const InvariantPoly& b) { return a.t_ == b.t_; }

 private:
  int nvars_ = 0;
  Terms t_;
};

using IntChar = Character<Rational>;
using LaurentChar = Character<QLaurent>;
using CycChar = Character<CycScalar>;

// Coefficient rings that know how to realize q_e^k.
struct GenericRing {
  using Coeff = QLaurent;
  QLaurent qpow(long k) const { return QLaurent::monomial(static_cast<int>(k)); }
  QLaurent one() const { return QLaurent(1); }
};

struct RationalRing {
  using Coeff = Rational;
  // Only valid for q_e = 1: the classical specialization.
  Rational qpow(long) const { return 1; }
  Rational one() const { return 1; }
};

}  // namespace alcove
