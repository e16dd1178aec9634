#include <random>

#include "alcove/gkm.hpp"
#include "doctest.h"

using namespace alcove;

namespace {

MPoly random_poly(const CartanRing& R, std::mt19937& rng, int degree) {
  std::uniform_int_distribution<int> c(-4, 4), e(0, degree);
  MPoly out(R.num_variables());
  for (int k = 0; k < 4; ++k) {
    Monomial m(R.num_variables());
    for (int j = 0; j < m.size(); ++j) m[j] = e(rng) / m.size();
    out.add_term(m, c(rng));
  }
  return out;
}

MPoly stabilizer_sum(const CartanRing& R, const BlockLabel& b, const MPoly& h) {
  MPoly out(R.num_variables());
  for (int x : b.stabilizer) out += R.act(x, h);
  return out;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const MPoly x = MPoly::variable(3, 0), y = MPoly::variable(3, 1), h = MPoly::variable(3, 2);
  const MPoly p = (x + y) * (x - y + h);
  CHECK(p.exact_div(x + y) == x - y + h);
  CHECK_THROWS_AS(p.exact_div(x + MPoly::constant(3, 1)), NonExactDivision);
  CHECK((x + y).pow(3).total_degree() == 3);
  CHECK(p.substitute({y, x, h}) == (x + y) * (y - x + h));
  CHECK((x * x + Rational(2) * h).to_string() == "a1^2 + 2*h");
}

TEST_CASE("Weyl action on the Cartan") {
  for (const char* type : {"A1", "A2", "B2", "G2"}) {
    const WeylGroup W(RootDatum::parse(type));
    const CartanRing R(W);
    std::mt19937 rng(2);
    const MPoly f = random_poly(R, rng, 4);
    for (int a = 0; a < W.order(); ++a)
      for (int b = 0; b < W.order(); b += 3) CHECK(R.act(a, R.act(b, f)) == R.act(W.multiply(a, b), f));
    // affine action is an action
    const auto elts = affine_elements_up_to(W, 3);
    for (std::size_t i = 0; i < elts.size(); i += 2)
      for (std::size_t j = 0; j < elts.size(); j += 3)
        CHECK(R.act(elts[i], R.act(elts[j], f)) == R.act(W.compose(elts[i], elts[j]), f));
    for (int i = 0; i < W.rank(); ++i)
      CHECK(R.act(W.simple_reflection(i), R.simple_root(i)) == -R.simple_root(i));
  }
}

TEST_CASE("Euler class of the stabilizer") {
  const WeylGroup A1(RootDatum::parse("A1"));
  const CartanRing R1(A1);
  CHECK(lambda_omega(A1, make_block_label(A1, Weight{0}, 3)) == R1.one());
  CHECK(lambda_omega(A1, make_block_label(A1, Weight{-1}, 3)) == R1.simple_root(0));

  const WeylGroup A2(RootDatum::parse("A2"));
  const CartanRing R2(A2);
  const MPoly a1 = R2.simple_root(0), a2 = R2.simple_root(1);
  CHECK(lambda_omega(A2, make_block_label(A2, Weight{-1, -1}, 5)) == a1 * a2 * (a1 + a2));
  CHECK(lambda_omega(A2, make_block_label(A2, Weight{-1, 0}, 5)) == a1);
  CHECK(lambda_omega(A2, make_block_label(A2, Weight{1, -1}, 5)) == a2);

  for (const auto& b : enumerate_restricted_blocks(A2, 5)) {
    const MPoly L = lambda_omega(A2, b);
    for (int x : b.stabilizer) CHECK(R2.act(x, L) == Rational(A2.sign(x)) * L);
  }
}

TEST_CASE("pushforward along the parabolic fiber") {
  const WeylGroup A1(RootDatum::parse("A1"));
  const CartanRing R1(A1);
  const BlockLabel full = make_block_label(A1, Weight{-1}, 3), trivial = make_block_label(A1, Weight{0}, 3);
  CHECK(pi_star_poly(A1, full, R1.one()).is_zero());
  CHECK(pi_star_poly(A1, full, R1.simple_root(0)) == MPoly::constant(2, 2));
  std::mt19937 rng(4);
  const MPoly f = random_poly(R1, rng, 5);
  CHECK(pi_star_poly(A1, trivial, f) == f);
}

TEST_CASE("pushforward identities on random input") {
  for (const auto& [type, l] : std::vector<std::pair<std::string, int>>{{"A1", 3}, {"A2", 5}, {"B2", 5}}) {
    const WeylGroup W(RootDatum::parse(type));
    const CartanRing R(W);
    std::mt19937 rng(9);
    // a W-invariant
    MPoly g_inv(R.num_variables());
    const MPoly seed = R.simple_root(0) * R.simple_root(0) + R.hbar();
    for (int w = 0; w < W.order(); ++w) g_inv += R.act(w, seed);
    for (const BlockLabel& b : enumerate_restricted_blocks(W, l)) {
      INFO(type, " ", b.omega.to_string());
      const MPoly L = lambda_omega(W, b);
      int reflections = 0;
      for (const auto& a : W.datum().positive_roots()) reflections += b.stabilizes(W.reflection(a));
      for (int trial = 0; trial < 3; ++trial) {
        const MPoly f = random_poly(R, rng, 5);
        const MPoly pf = pi_star_poly(W, b, f);
        for (int x : b.stabilizer) CHECK(R.act(x, pf) == pf);
        if (!pf.is_zero()) CHECK(pf.total_degree() <= f.total_degree() - reflections);
        CHECK(pi_star_poly(W, b, g_inv * f) == g_inv * pf);
        const MPoly g = stabilizer_sum(R, b, random_poly(R, rng, 3));
        CHECK(pi_star_poly(W, b, L * g) == Rational(b.stabilizer_order()) * g);
      }
      // degree drop is exact on the Euler class itself
      CHECK(pi_star_poly(W, b, L).total_degree() == 0);
    }
  }
}

TEST_CASE("restriction to fixed points") {
  const WeylGroup A1(RootDatum::parse("A1"));
  const CartanRing R(A1);
  const BlockLabel full = make_block_label(A1, Weight{-1}, 3);
  const auto pts = min_coset_reps(A1, stabilizer_type(full), 3);
  const MPoly x = R.simple_root(0);
  const auto ones = restrict_invariant(A1, full, R.one(), R.one(), pts, 3);
  for (const auto& [y, v] : ones.values) CHECK(v == RationalFunction::polynomial(R.one()));
  const auto squares = restrict_invariant(A1, full, R.one(), x * x, {A1.affine_identity(), A1.finite(A1.simple_reflection(0))}, 0);
  for (const auto& [y, v] : squares.values) CHECK(v == RationalFunction::polynomial(x * x));
  const auto linear = restrict_invariant(A1, make_block_label(A1, Weight{0}, 3), x, R.one(), pts, 3);
  for (const auto& [y, v] : linear.values) CHECK(v == RationalFunction::polynomial(x));
  CHECK_THROWS_AS(restrict_invariant(A1, full, R.one(), x, pts, 3), NotInvariant);
}

TEST_CASE("fixed-point pushforward examples") {
  const WeylGroup A1(RootDatum::parse("A1"));
  const CartanRing R(A1);
  const BlockLabel full = make_block_label(A1, Weight{-1}, 3), trivial = make_block_label(A1, Weight{0}, 3);
  FixedPointFamily ones, coords;
  ones.truncation = coords.truncation = 5;
  for (const AffineElement& y : affine_elements_up_to(A1, 5)) {
    ones.values.emplace(y, RationalFunction::polynomial(R.one()));
    coords.values.emplace(y, RationalFunction::polynomial(R.act(y, R.simple_root(0))));
  }
  for (const auto& [y, v] : pi_star_fixed(A1, full, ones, 4).values) CHECK(v.num.is_zero());
  for (const auto& [y, v] : pi_star_fixed(A1, full, coords, 4).values)
    CHECK(v == RationalFunction::polynomial(MPoly::constant(2, 2)));
  const auto same = pi_star_fixed(A1, trivial, coords, 4, Exec::Serial);
  for (const auto& [y, v] : same.values) CHECK(v == coords.values.at(y));
  CHECK_THROWS_AS(pi_star_fixed(A1, full, coords, 5), InsufficientTruncation);
}

TEST_CASE("serial and threaded fixed-point pushforward agree") {
  const WeylGroup A2(RootDatum::parse("A2"));
  const CartanRing R(A2);
  const BlockLabel b = make_block_label(A2, Weight{-1, -1}, 5);
  FixedPointFamily fam;
  fam.truncation = 6;
  const MPoly f = R.simple_root(0) * R.simple_root(0) * R.simple_root(1) + R.hbar() * R.simple_root(1);
  for (const AffineElement& y : affine_elements_up_to(A2, 6)) fam.values.emplace(y, RationalFunction::polynomial(R.act(y, f)));
  const auto a = pi_star_fixed(A2, b, fam, 3, Exec::Serial), c = pi_star_fixed(A2, b, fam, 3, Exec::Parallel);
  CHECK(a.values.size() == c.values.size());
  for (const auto& [y, v] : a.values) CHECK(c.values.at(y) == v);
}

TEST_CASE("GKM edge condition on restricted families") {
  for (const char* type : {"A1", "A2", "B2"}) {
    const WeylGroup W(RootDatum::parse(type));
    const CartanRing R(W);
    const RootDatum& d = W.datum();
    std::mt19937 rng(6);
    const MPoly f = random_poly(R, rng, 4);
    const BlockLabel trivial = make_block_label(W, d.zero(), 7);
    const auto pts = affine_elements_up_to(W, 3);
    const auto fam = restrict_invariant(W, trivial, R.one(), f, pts, 3);
    for (int node = 0; node <= W.rank(); ++node) {
      const AffineElement s = W.affine_simple_reflection(node);
      const MPoly beta = node == 0 ? R.linear_form(d.highest_short_root().weight) : R.simple_root(node - 1);
      const MPoly form = Rational(1, 2) * (beta - R.act(s, beta));
      CHECK(R.act(s, form) == -form);
      for (const AffineElement& y : pts) {
        const MPoly diff = R.act(W.compose(y, s), f) - fam.values.at(y).num;
        CHECK_NOTHROW((void)diff.exact_div(R.act(y, form)));
      }
    }
  }
}

TEST_CASE("commutativity of the pushforward square") {
  const WeylGroup A1(RootDatum::parse("A1"));
  const auto r0 = check_lemma_b5(A1, 3, make_block_label(A1, Weight{-1}, 3), 0, 4);
  CHECK(r0.pass());
  CHECK(r0.cases.size() == 1);
  const auto r = check_lemma_b5(A1, 3, make_block_label(A1, Weight{-1}, 3), 4, 4);
  CHECK(r.pass());
  CHECK(r.cases.size() == 15);
  CHECK(r.points == 5);
  CHECK_THROWS_AS(check_lemma_b5(A1, 3, make_block_label(A1, Weight{2}, 3), 2, 2), InadmissibleLevel);

  const WeylGroup A2(RootDatum::parse("A2"));
  for (const Weight& w : {Weight{-1, 0}, Weight{0, -1}, Weight{1, -1}, Weight{-1, 3}}) {
    const BlockLabel b = make_block_label(A2, w, 5);
    REQUIRE(b.stabilizer_order() == 2);
    INFO(w.to_string());
    CHECK(check_lemma_b5(A2, 5, b, 3, 3).pass());
  }
}

TEST_CASE("Grassmannian Poincare series from exponents") {
  const WeylGroup A1(RootDatum::parse("A1"));
  CHECK(poincare_gr_exponents(A1.datum(), 0) == std::vector<long long>{1});
  const auto a1 = poincare_gr_exponents(A1.datum(), 5);
  for (std::size_t k = 0; k < a1.size(); ++k) CHECK(a1[k] == (k % 2 == 0 ? 1 : 0));
  CHECK(poincare_gr_exponents(RootDatum::parse("A2"), 3) == std::vector<long long>{1, 0, 1, 0, 2, 0, 2});
  for (const char* type : {"A1", "A2", "B2", "G2"}) {
    const WeylGroup W(RootDatum::parse(type));
    CHECK(poincare_gr_exponents(W.datum(), 6) == poincare_series(W, ParabolicType::finite_nodes(W.rank()), 6));
  }
}

TEST_CASE("normal cone membership") {
  const std::vector<Rational> pt{Rational(1), Rational(-2)};
  auto e = [&](int i, const Rational& c) {
    InvariantPoly<Rational> p(2);
    Monomial m(2);
    m[i] = 1;
    p.add_term(m, 1);
    p.add_term(Monomial(2), -c);
    return p;
  };
  NormalConeElement only_constant{{{0, e(0, 5)}}, pt};
  CHECK(nc_membership(only_constant));
  NormalConeElement generator{{{1, e(0, pt[0])}}, pt};
  CHECK(nc_membership(generator));
  NormalConeElement too_deep{{{2, e(1, pt[1])}}, pt};
  CHECK_FALSE(nc_membership(too_deep));
  InvariantPoly<Rational> sq(2);
  const auto u = e(0, pt[0]), v = e(1, pt[1]);
  for (const auto& [m1, c1] : u.terms())
    for (const auto& [m2, c2] : v.terms()) sq.add_term(m1 + m2, c1 * c2);
  NormalConeElement product{{{1, e(1, pt[1])}, {2, sq}}, pt};
  CHECK(nc_membership(product));
  CHECK_THROWS_AS(nc_membership(product, 1), IdealTooComplex);
}
