#include "alcove/charring.hpp"

#include <algorithm>

namespace alcove {

IntChar weyl_character(const WeylGroup& W, const Weight& lambda) {
  const RootDatum& d = W.datum();
  if (!d.is_dominant(lambda)) throw NotDominant("weight " + lambda.to_string() + " is not dominant");
  IntChar numerator;
  const Weight shifted = lambda + d.rho();
  for (int w = 0; w < W.order(); ++w) numerator.add_term(W.act(w, shifted), Rational(W.sign(w)));
  return exact_divide(numerator, alternating_rho_sum<Rational>(W));
}

IntChar fundamental_character(const WeylGroup& W, int i) {
  return weyl_character(W, W.datum().fundamental_weight(i));
}

std::vector<std::pair<Weight, long>> weight_multiplicities(const WeylGroup& W, const Weight& lambda) {
  std::vector<std::pair<Weight, long>> out;
  const IntChar ch = weyl_character(W, lambda);
  for (const auto& [mu, c] : ch.terms()) out.emplace_back(mu, c.get_num().get_si());
  return out;
}

std::vector<Weight> weight_multiset(const WeylGroup& W, const Weight& lambda) {
  std::vector<Weight> out;
  for (const auto& [mu, m] : weight_multiplicities(W, lambda))
    for (long k = 0; k < m; ++k) out.push_back(mu);
  return out;
}

Integer classical_dimension(const RootDatum& d, const Weight& lambda) {
  Rational dim = 1;
  const Weight shifted = lambda + d.rho();
  for (const auto& a : d.positive_roots())
    dim *= Rational(d.scaled_pairing(a.weight, shifted)) / Rational(d.scaled_pairing(a.weight, d.rho()));
  return dim.get_num();
}

CycScalar specialize(const QLaurent& c, const CyclotomicField& field) {
  CycScalar out = field.zero();
  for (const auto& [k, x] : c.terms()) out += CycScalar(x) * field.zeta_power(k);
  return out;
}

CycChar specialize(const LaurentChar& f, const CyclotomicField& field) {
  return f.map_coefficients<CycScalar>([&field](const QLaurent& c) { return specialize(c, field); });
}

}  // namespace alcove
