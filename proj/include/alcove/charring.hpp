#pragma once

#include <utility>
#include <vector>

#include "alcove/character.hpp"
#include "alcove/linkage.hpp"

namespace alcove {

// ---- integral characters (computed once, lifted to any coefficient ring) ----

// Weyl character of V(lambda): alternating sum over W divided by the denominator.
IntChar weyl_character(const WeylGroup& W, const Weight& lambda);
// ch V(varpi_i).
IntChar fundamental_character(const WeylGroup& W, int i);
// Weights of V(lambda) with multiplicities, sorted by weight.
std::vector<std::pair<Weight, long>> weight_multiplicities(const WeylGroup& W, const Weight& lambda);
// Weights of V(lambda), each repeated by its multiplicity.
std::vector<Weight> weight_multiset(const WeylGroup& W, const Weight& lambda);
// Classical dimension from the Weyl dimension formula.
Integer classical_dimension(const RootDatum& d, const Weight& lambda);

template <typename Coeff>
Character<Coeff> lift(const IntChar& f) {
  return f.map_coefficients<Coeff>([](const Rational& c) { return Coeff(c); });
}

// ---- Weyl denominator ----

// K_rho prod_{alpha > 0} (1 - K_{-alpha}).
template <typename Coeff>
Character<Coeff> weyl_denominator(const RootDatum& d) {
  Character<Coeff> out = Character<Coeff>::monomial(d.rho());
  for (const auto& a : d.positive_roots())
    out *= Character<Coeff>::monomial(d.zero()) - Character<Coeff>::monomial(-a.weight);
  return out;
}

// sum_w (-1)^{l(w)} K_{w rho}.
template <typename Coeff>
Character<Coeff> alternating_rho_sum(const WeylGroup& W) {
  Character<Coeff> out;
  for (int w = 0; w < W.order(); ++w) out.add_term(W.act(w, W.datum().rho()), Coeff(W.sign(w)));
  return out;
}

// The denominator split by the stabilizer of a block: the first factor keeps
// K_rho and the roots whose reflections lie in the stabilizer, the second the rest.
template <typename Coeff>
std::pair<Character<Coeff>, Character<Coeff>> factorize_denominator(const WeylGroup& W, const BlockLabel& block) {
  const RootDatum& d = W.datum();
  Character<Coeff> inside = Character<Coeff>::monomial(d.rho());
  Character<Coeff> outside = Character<Coeff>::monomial(d.zero());
  const Character<Coeff> one = Character<Coeff>::monomial(d.zero());
  for (const auto& a : d.positive_roots()) {
    const Character<Coeff> factor = one - Character<Coeff>::monomial(-a.weight);
    if (block.stabilizes(W.reflection(a))) inside *= factor;
    else outside *= factor;
  }
  return {inside, outside};
}

// ---- twists and evaluation ----

// tau^power_nu : K_lambda -> q_e^{power * e (nu, lambda)} K_lambda.
template <typename Ring>
Character<typename Ring::Coeff> tau_twist(const RootDatum& d, const Weight& nu, const Character<typename Ring::Coeff>& f,
                                          int power, const Ring& ring) {
  Character<typename Ring::Coeff> out;
  for (const auto& [lam, c] : f.terms()) out.add_term(lam, c * ring.qpow(static_cast<long>(power) * d.scaled_pairing(nu, lam)));
  return out;
}

// K_lambda -> q_e^{shift * e (lambda, mu + rho)}; shift = 2 gives f(q^{2(mu+rho)}).
template <typename Ring>
typename Ring::Coeff evaluate_at(const RootDatum& d, const Character<typename Ring::Coeff>& f, const Weight& mu, int shift,
                                 const Ring& ring) {
  const Weight point = mu + d.rho();
  typename Ring::Coeff out(0);
  for (const auto& [lam, c] : f.terms()) out += c * ring.qpow(static_cast<long>(shift) * d.scaled_pairing(lam, point));
  return out;
}

// Same evaluation for an integral character.
template <typename Ring>
typename Ring::Coeff evaluate_at(const RootDatum& d, const IntChar& f, const Weight& mu, int shift, const Ring& ring) {
  const Weight point = mu + d.rho();
  typename Ring::Coeff out(0);
  for (const auto& [lam, c] : f.terms()) out += typename Ring::Coeff(c) * ring.qpow(static_cast<long>(shift) * d.scaled_pairing(lam, point));
  return out;
}

// L(q^{2(lambda+rho)}) / L(q^{2 rho}) via the product formula. Zero when
// lambda + rho is singular; lambda need not be dominant.
template <typename Ring>
typename Ring::Coeff quantum_dimension(const RootDatum& d, const Weight& lambda, const Ring& ring) {
  using C = typename Ring::Coeff;
  const Weight shifted = lambda + d.rho();
  C num = ring.one(), den = ring.one();
  for (const auto& a : d.positive_roots()) {
    const long top = d.scaled_pairing(a.weight, shifted), bottom = d.scaled_pairing(a.weight, d.rho());
    num *= ring.qpow(top) - ring.qpow(-top);
    den *= ring.qpow(bottom) - ring.qpow(-bottom);
  }
  return divide_exact(num, den);
}

// ---- exact division ----

// h with h * g = f, by leading-term elimination in the graded-lex order.
// Throws NonExactDivision if g does not divide f.
template <typename Coeff>
Character<Coeff> exact_divide(const Character<Coeff>& f, const Character<Coeff>& g) {
  if (g.is_zero()) throw NonExactDivision("division by the zero character");
  if (f.is_zero()) return {};
  struct Grlex {
    bool operator()(const Weight& a, const Weight& b) const { return grlex_less(a, b); }
  };
  std::map<Weight, Coeff, Grlex> rem(f.terms().begin(), f.terms().end());
  const Weight lead = g.leading_weight();
  const Coeff lead_coeff = g.coefficient(lead);
  const Weight floor = f.trailing_weight() - g.trailing_weight();
  Character<Coeff> quo;
  while (!rem.empty()) {
    const auto top = std::prev(rem.end());
    const Weight k = top->first - lead;
    if (grlex_less(k, floor)) throw NonExactDivision("remainder is nonzero");
    const Coeff c = divide_exact(top->second, lead_coeff);
    quo.add_term(k, c);
    for (const auto& [y, dy] : g.terms()) {
      const Weight at = y + k;
      const Coeff delta = -(c * dy);
      auto [it, fresh] = rem.emplace(at, delta);
      if (fresh) continue;
      it->second += delta;
      if (is_zero(it->second)) rem.erase(it);
    }
  }
  return quo;
}

// ---- fundamental-character coordinates ----

// Caches the powers of the fundamental characters in one coefficient ring.
template <typename Coeff>
class FundamentalPowers {
 public:
  explicit FundamentalPowers(const WeylGroup& W) : W_(W) {
    for (int i = 0; i < W.rank(); ++i) powers_.push_back({Character<Coeff>::monomial(W.datum().zero()), lift<Coeff>(fundamental_character(W, i))});
  }
  const Character<Coeff>& power(int i, int k) {
    auto& p = powers_[static_cast<std::size_t>(i)];
    while (static_cast<int>(p.size()) <= k) p.push_back(p.back() * p[1]);
    return p[static_cast<std::size_t>(k)];
  }
  Character<Coeff> monomial(const Monomial& m) {
    Character<Coeff> out = power(0, m[0]);
    for (int i = 1; i < W_.rank(); ++i)
      if (m[i] != 0) out = out * power(i, m[i]);
    return out;
  }

 private:
  const WeylGroup& W_;
  std::vector<std::vector<Character<Coeff>>> powers_;
};

template <typename Coeff>
Character<Coeff> expand(const WeylGroup& W, const InvariantPoly<Coeff>& p) {
  FundamentalPowers<Coeff> cache(W);
  Character<Coeff> out;
  for (const auto& [m, c] : p.terms()) out += c * cache.monomial(m);
  return out;
}

// Writes a W-invariant character as a polynomial in the fundamental
// characters by peeling off the highest dominant weight. Throws NotInvariant.
template <typename Coeff>
InvariantPoly<Coeff> to_fundamental_basis(const WeylGroup& W, const Character<Coeff>& f) {
  if (!f.is_invariant(W)) throw NotInvariant("character is not W-invariant");
  const RootDatum& d = W.datum();
  FundamentalPowers<Coeff> cache(W);
  InvariantPoly<Coeff> out(W.rank());
  Character<Coeff> rem = f;
  while (!rem.is_zero()) {
    const Weight* top = nullptr;
    for (const auto& [lam, c] : rem.terms()) {
      if (!d.is_dominant(lam)) continue;
      if (!top || d.scaled_height(lam) > d.scaled_height(*top) ||
          (d.scaled_height(lam) == d.scaled_height(*top) && *top < lam))
        top = &lam;
    }
    if (!top) throw NotInvariant("no dominant weight left in an invariant remainder");
    Monomial m(W.rank());
    for (int i = 0; i < W.rank(); ++i) m[i] = (*top)[i];
    const Coeff c = rem.coefficient(*top);
    out.add_term(m, c);
    rem -= c * cache.monomial(m);
  }
  return out;
}

// Order of f in the maximal ideal of the point with fundamental coordinates
// `point`: the lowest total degree after substituting e_i = y_i + point_i,
// capped at cap (terms above cap are never formed).
template <typename Coeff>
int vanishing_order(const InvariantPoly<Coeff>& f, const std::vector<Coeff>& point, int cap) {
  const int r = static_cast<int>(point.size());
  std::vector<std::vector<Coeff>> vpow(static_cast<std::size_t>(r), {Coeff(1)});
  auto vp = [&](int i, int k) -> const Coeff& {
    auto& row = vpow[static_cast<std::size_t>(i)];
    while (static_cast<int>(row.size()) <= k) row.push_back(row.back() * point[static_cast<std::size_t>(i)]);
    return row[static_cast<std::size_t>(k)];
  };
  auto binom = [](int n, int k) {
    Rational b = 1;
    for (int j = 1; j <= k; ++j) b = b * Rational(n - k + j) / Rational(j);
    return b;
  };
  std::map<Monomial, Coeff> translated;
  for (const auto& [m, c] : f.terms()) {
    std::map<Monomial, Coeff> acc{{Monomial(r), c}};
    for (int i = 0; i < r; ++i) {
      if (m[i] == 0) continue;
      std::map<Monomial, Coeff> next;
      for (const auto& [y, a] : acc)
        for (int k = 0; k <= m[i] && y.sum() + k <= cap; ++k) {
          Monomial z = y;
          z[i] += k;
          auto [it, fresh] = next.emplace(z, Coeff(0));
          it->second += a * Coeff(binom(m[i], k)) * vp(i, m[i] - k);
        }
      acc = std::move(next);
    }
    for (const auto& [y, a] : acc) {
      auto [it, fresh] = translated.emplace(y, Coeff(0));
      it->second += a;
    }
  }
  int order = cap;
  for (const auto& [y, a] : translated)
    if (!is_zero(a)) order = std::min(order, y.sum());
  return order;
}

// ---- specialization ----

// q_e -> zeta_l coefficientwise.
CycScalar specialize(const QLaurent& c, const CyclotomicField& field);
CycChar specialize(const LaurentChar& f, const CyclotomicField& field);

}  // namespace alcove
