#include "alcove/gkm.hpp"

#include <algorithm>

namespace alcove {

CartanRing::CartanRing(const WeylGroup& W) : W_(W) {
  const RootDatum& d = W.datum();
  finite_images_.resize(static_cast<std::size_t>(W.order()));
  for (int w = 0; w < W.order(); ++w)
    for (int j = 0; j < W.rank(); ++j) finite_images_[static_cast<std::size_t>(w)].push_back(linear_form(W.act(w, d.simple_root(j))));
}

MPoly CartanRing::linear_form(const Weight& alpha) const {
  const auto coords = W_.datum().root_coordinates(alpha);
  MPoly out(num_variables());
  for (int j = 0; j < W_.rank(); ++j) out += coords[static_cast<std::size_t>(j)] * simple_root(j);
  return out;
}

MPoly CartanRing::act(int w, const MPoly& f) const {
  std::vector<MPoly> images = finite_images_[static_cast<std::size_t>(w)];
  images.push_back(hbar());
  return f.substitute(images);
}

MPoly CartanRing::act(const AffineElement& y, const MPoly& f) const {
  const RootDatum& d = W_.datum();
  std::vector<MPoly> images = finite_images_[static_cast<std::size_t>(y.w)];
  for (int j = 0; j < W_.rank(); ++j)
    images[static_cast<std::size_t>(j)] -= Rational(d.scaled_pairing(d.simple_root(j), y.translation)) * hbar();
  images.push_back(hbar());
  return f.substitute(images);
}

MPoly lambda_omega(const WeylGroup& W, const BlockLabel& omega) {
  const CartanRing R(W);
  MPoly out = R.one();
  for (const auto& a : W.datum().positive_roots())
    if (omega.stabilizes(W.reflection(a))) out *= R.linear_form(a.weight);
  return out;
}

MPoly pi_star_poly(const WeylGroup& W, const BlockLabel& omega, const MPoly& f) {
  const CartanRing R(W);
  MPoly sum(R.num_variables());
  for (int x : omega.stabilizer) sum += Rational(W.sign(x)) * R.act(x, f);
  return sum.exact_div(lambda_omega(W, omega));
}

ParabolicType stabilizer_type(const BlockLabel& omega) { return ParabolicType{omega.parahoric_type}; }

FixedPointFamily restrict_invariant(const WeylGroup& W, const BlockLabel& omega, const MPoly& g, const MPoly& f,
                                    const std::vector<AffineElement>& points, int truncation) {
  const CartanRing R(W);
  for (int x : omega.stabilizer)
    if (!(R.act(x, f) == f)) throw NotInvariant("restricted function is not invariant under the stabilizer");
  FixedPointFamily out;
  out.truncation = truncation;
  for (const AffineElement& y : points) out.values.emplace(y, RationalFunction::polynomial(g * R.act(y, f)));
  return out;
}

namespace {

RationalFunction add(const RationalFunction& a, const RationalFunction& b, int sign) {
  const MPoly bn = Rational(sign) * b.num;
  if (a.den == b.den) return {a.num + bn, a.den};
  return {a.num * b.den + bn * a.den, a.den * b.den};
}

}  // namespace

FixedPointFamily pi_star_fixed(const WeylGroup& W, const BlockLabel& omega, const FixedPointFamily& family,
                               int truncation, Exec exec) {
  const CartanRing R(W);
  const MPoly euler = lambda_omega(W, omega);
  const std::vector<AffineElement> reps = min_coset_reps(W, stabilizer_type(omega), truncation);
  const int nv = R.num_variables();

  auto value_at = [&](int i) {
    const AffineElement& y = reps[static_cast<std::size_t>(i)];
    RationalFunction sum{MPoly(nv), R.one()};
    for (int x : omega.stabilizer) {
      const AffineElement yx = W.compose(y, W.finite(x));
      const auto it = family.values.find(yx);
      if (it == family.values.end())
        throw InsufficientTruncation("family has no value at a point of length " + std::to_string(W.length(yx)));
      sum = add(sum, it->second, W.sign(x));
    }
    sum.den *= R.act(y, euler);
    return sum;
  };
  // exceptions cannot cross an OpenMP region, so probe the largest element first
  if (!reps.empty() && !omega.stabilizer.empty()) {
    for (int x : omega.stabilizer)
      if (!family.values.count(W.compose(reps.back(), W.finite(x))))
        throw InsufficientTruncation("family truncation " + std::to_string(family.truncation) +
                                     " is too small for output truncation " + std::to_string(truncation));
  }
  const auto values = map_indices<RationalFunction>(static_cast<int>(reps.size()), value_at, exec);
  FixedPointFamily out;
  out.truncation = truncation;
  for (std::size_t i = 0; i < reps.size(); ++i) out.values.emplace(reps[i], values[i]);
  return out;
}

B5Report check_lemma_b5(const WeylGroup& W, int l, const BlockLabel& omega, int degree_bound, int truncation, Exec exec) {
  if (std::find(omega.parahoric_type.begin(), omega.parahoric_type.end(), 0) != omega.parahoric_type.end())
    throw InadmissibleLevel("omega " + omega.omega.to_string() + " lies on the affine wall at level " + std::to_string(l));
  const CartanRing R(W);
  B5Report report;
  report.omega = omega.omega;
  report.degree_bound = degree_bound;
  report.truncation = truncation;

  int longest = 0;
  for (int x : omega.stabilizer) longest = std::max(longest, W.length(x));
  const std::vector<AffineElement> reps = min_coset_reps(W, stabilizer_type(omega), truncation);
  const std::vector<AffineElement> all = affine_elements_up_to(W, truncation + longest);
  report.points = static_cast<int>(reps.size());

  const int nv = R.num_variables();
  std::vector<Monomial> monomials;
  Monomial m(nv);
  while (true) {
    if (m.sum() <= degree_bound) monomials.push_back(m);
    int i = 0;
    while (i < nv && m[i] == degree_bound) m[i++] = 0;
    if (i == nv) break;
    ++m[i];
  }
  std::sort(monomials.begin(), monomials.end(), [](const Monomial& a, const Monomial& b) { return grlex_less(a, b); });

  for (const Monomial& mono : monomials) {
    const MPoly f = MPoly::monomial(mono);
    const FixedPointFamily lhs = restrict_invariant(W, omega, R.one(), pi_star_poly(W, omega, f), reps, truncation);
    FixedPointFamily full;
    full.truncation = truncation + longest;
    for (const AffineElement& y : all) full.values.emplace(y, RationalFunction::polynomial(R.act(y, f)));
    const FixedPointFamily rhs = pi_star_fixed(W, omega, full, truncation, exec);
    bool ok = lhs.values.size() == rhs.values.size();
    for (const auto& [y, v] : lhs.values) {
      const auto it = rhs.values.find(y);
      ok = ok && it != rhs.values.end() && it->second == v;
    }
    report.cases.push_back({f.to_string(), ok});
  }
  return report;
}

std::vector<long long> poincare_gr_exponents(const RootDatum& d, int truncation) {
  std::vector<long long> c(static_cast<std::size_t>(2 * truncation + 1), 0);
  c[0] = 1;
  for (int m : d.exponents())
    for (std::size_t k = static_cast<std::size_t>(2 * m); k < c.size(); ++k) c[k] += c[k - static_cast<std::size_t>(2 * m)];
  return c;
}

bool nc_membership(const NormalConeElement& elt, int degree_cap) {
  for (const auto& [k, g] : elt.parts) {
    if (k <= 0 || g.is_zero()) continue;
    if (g.total_degree() > degree_cap)
      throw IdealTooComplex("component of degree " + std::to_string(g.total_degree()) + " exceeds the cap " +
                            std::to_string(degree_cap));
    if (vanishing_order(g, elt.point, k) < k) return false;
  }
  return true;
}

}  // namespace alcove
