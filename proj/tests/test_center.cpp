#include <random>

#include "alcove/center.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace alcove;

namespace {

QLaurent q(int k, long c = 1) { return QLaurent::monomial(k, c); }

// Random W-invariant with Laurent coefficients: orbit sums of small weights.
LaurentChar random_invariant(const WeylGroup& W, std::mt19937& rng) {
  std::uniform_int_distribution<int> coord(0, 2), c(-3, 3), e(-2, 2);
  LaurentChar f;
  for (int k = 0; k < 3; ++k) {
    Weight lam(W.rank());
    for (int& x : lam) x = coord(rng);
    const QLaurent coeff = q(e(rng), c(rng)) + QLaurent(c(rng));
    for (const Weight& mu : W.orbit(lam)) f.add_term(mu, coeff);
  }
  return f;
}

CycChar random_cyc_invariant(const WeylGroup& W, int l, std::mt19937& rng) {
  return specialize(random_invariant(W, rng), CyclotomicField::get(l));
}

std::vector<Weight> dominant_box(int rank, int box) {
  std::vector<Weight> out;
  for (const Weight& v : oracle::box_weights(rank, box))
    if (std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; })) out.push_back(v);
  return out;
}

InvariantPoly<CycScalar> translated_fundamental(int rank, int i, const CycScalar& value, int power) {
  InvariantPoly<CycScalar> lin(rank);
  Monomial m(rank);
  m[i] = 1;
  lin.add_term(m, CycScalar(1));
  lin.add_term(Monomial(rank), -value);
  InvariantPoly<CycScalar> out(rank);
  out.add_term(Monomial(rank), CycScalar(1));
  for (int k = 0; k < power; ++k) {
    InvariantPoly<CycScalar> next(rank);
    for (const auto& [x, a] : out.terms())
      for (const auto& [y, b] : lin.terms()) next.add_term(x + y, a * b);
    out = next;
  }
  return out;
}

}  // namespace

TEST_CASE("central character examples") {
  const WeylGroup W(RootDatum::parse("A1"));
  const auto& F = CyclotomicField::get(3);
  const CycChar one = CycChar::constant(1, CycScalar(1));
  for (int k = -3; k <= 3; ++k) CHECK(central_character(W.datum(), one, Weight{k}, F) == CycScalar(1));
  const CycChar e1 = lift<CycScalar>(fundamental_character(W, 0));
  CHECK(central_character(W.datum(), e1, Weight{0}, F) == F.zeta_power(1) + F.zeta_power(-1));
}

TEST_CASE("central character is constant on linkage classes") {
  for (const auto& [type, l] : std::vector<std::pair<std::string, int>>{{"A1", 3}, {"A2", 5}, {"B2", 5}}) {
    const WeylGroup W(RootDatum::parse(type));
    const auto& F = CyclotomicField::get(l);
    std::mt19937 rng(7);
    const CycChar f = random_cyc_invariant(W, l, rng);
    for (const Weight& lam : oracle::box_weights(W.rank(), 3)) {
      const auto [block, x] = block_of(W, lam, l);
      CHECK(central_character(W.datum(), f, lam, F) == central_character(W.datum(), f, block.omega, F));
    }
  }
}

TEST_CASE("bernstein trace examples") {
  const WeylGroup W(RootDatum::parse("A1"));
  const GenericRing R;
  std::mt19937 rng(1);
  const LaurentChar f = random_invariant(W, rng);
  CHECK(bernstein_trace(W, Weight{0}, f, R) == f);
  const LaurentChar one = LaurentChar::constant(1, QLaurent(1));
  // q = q_e^2 for A1
  CHECK(evaluate_at(W.datum(), bernstein_trace(W, Weight{1}, one, R), Weight{0}, 2, R) == q(2) + q(-2));
  CHECK(quantum_trace_oracle(W, Weight{0}, Weight{1}, one, R) == q(2) + q(-2));
  CHECK(quantum_trace_oracle(W, Weight{3}, Weight{0}, one, R) == QLaurent(1) * oracle::quantum_dim(W, Weight{3}));
  CHECK_THROWS_AS(bernstein_trace(W, Weight{1}, LaurentChar::monomial(Weight{1}), R), NotInvariant);
}

TEST_CASE("trace of 1 at a point is a ratio of denominators") {
  const WeylGroup W(RootDatum::parse("A2"));
  const GenericRing R;
  const RootDatum& d = W.datum();
  const LaurentChar one = LaurentChar::constant(2, QLaurent(1));
  const LaurentChar L = weyl_denominator<QLaurent>(d);
  for (const Weight& V : {Weight{1, 0}, Weight{1, 1}})
    for (const Weight& mu : dominant_box(2, 2)) {
      QLaurent numerator;
      for (const Weight& nu : weight_multiset(W, V)) numerator += evaluate_at(d, L, mu + nu, 2, R);
      CHECK(evaluate_at(d, bernstein_trace(W, V, one, R), mu, 2, R) == numerator.exact_div(evaluate_at(d, L, mu, 2, R)));
    }
}

TEST_CASE("trace output is invariant and linear") {
  const GenericRing R;
  for (const char* type : {"A1", "A2", "B2"}) {
    const WeylGroup W(RootDatum::parse(type));
    std::mt19937 rng(3);
    const LaurentChar f = random_invariant(W, rng), g = random_invariant(W, rng);
    const Weight V = W.datum().fundamental_weight(0);
    const LaurentChar tf = bernstein_trace(W, V, f, R), tg = bernstein_trace(W, V, g, R);
    CHECK(tf.is_invariant(W));
    CHECK(bernstein_trace(W, V, f + q(1, 3) * g, R) == tf + q(1, 3) * tg);
  }
}

TEST_CASE("trace at a point matches the module-by-module sum") {
  const GenericRing R;
  for (const char* type : {"A1", "A2"}) {
    const WeylGroup W(RootDatum::parse(type));
    const RootDatum& d = W.datum();
    std::vector<Weight> modules{d.rho()};
    for (int i = 0; i < W.rank(); ++i) modules.push_back(d.fundamental_weight(i));
    std::mt19937 rng(11);
    for (int trial = 0; trial < 3; ++trial) {
      const LaurentChar f = random_invariant(W, rng);
      for (const Weight& V : modules) {
        const LaurentChar t = bernstein_trace(W, V, f, R);
        for (const Weight& mu : dominant_box(W.rank(), 2)) {
          INFO(type, " ", V.to_string(), " ", mu.to_string());
          QLaurent oracle_value;
          for (const auto& [nu, m] : oracle::freudenthal(d, V))
            oracle_value += static_cast<long>(m) * oracle::quantum_dim(W, mu + nu) * evaluate_at(d, f, mu + nu, 2, R);
          CHECK(oracle::quantum_dim(W, mu) * evaluate_at(d, t, mu, 2, R) == oracle_value);
          CHECK(quantum_trace_oracle(W, mu, V, f, R) == oracle_value);
        }
      }
    }
  }
}

TEST_CASE("trace depends only on the weight multiset") {
  const GenericRing R;
  const WeylGroup W(RootDatum::parse("A2"));
  std::mt19937 rng(5);
  const Weight a{1, 0}, b{0, 1};
  // composition factors of V(a) (x) V(b) from the product character
  IntChar rest = weyl_character(W, a) * weyl_character(W, b);
  std::vector<std::pair<Weight, Rational>> factors;
  while (!rest.is_zero()) {
    const Weight top = rest.leading_weight();
    const Rational m = rest.coefficient(top);
    factors.emplace_back(top, m);
    rest -= m * weyl_character(W, top);
  }
  CHECK(factors.size() == 2);
  std::vector<Weight> tensor;
  for (const Weight& x : weight_multiset(W, a))
    for (const Weight& y : weight_multiset(W, b)) tensor.push_back(x + y);
  for (int trial = 0; trial < 10; ++trial) {
    const LaurentChar f = random_invariant(W, rng);
    LaurentChar by_factors;
    for (const auto& [top, m] : factors) by_factors += QLaurent(m) * bernstein_trace(W, top, f, R);
    const LaurentChar by_tensor = bernstein_trace_multiset(W, tensor, f, R);
    CHECK(by_tensor == by_factors);
    // composing traces is the trace over the sum of multisets
    CHECK(bernstein_trace(W, a, bernstein_trace(W, b, f, R), R) == by_tensor);
  }
}

TEST_CASE("block idempotent: plain interpolation and trivial cases") {
  const WeylGroup W(RootDatum::parse("A1"));
  const auto& F = CyclotomicField::get(5);
  const BlockIdempotent single = build_block_idempotent(W, 5, {Weight{0}, {}, 4});
  CHECK(single.invariant_poly().total_degree() == 0);
  CHECK(single.value_at(point_coordinates(W, F, Weight{1})) == CycScalar(1));

  const BlockIdempotent two = build_block_idempotent(W, 5, {Weight{0}, {Weight{1}}, 1});
  CHECK(two.value_at(point_coordinates(W, F, Weight{0})) == CycScalar(1));
  CHECK(two.value_at(point_coordinates(W, F, Weight{1})).is_zero());
  const CycChar ch = two.character(W);
  CHECK(ch.is_invariant(W));
  CHECK(evaluate_at(W.datum(), ch, Weight{0}, 2, F) == CycScalar(1));
  CHECK(evaluate_at(W.datum(), ch, Weight{1}, 2, F).is_zero());
}

TEST_CASE("block idempotent rejects coincident points") {
  const WeylGroup W(RootDatum::parse("A1"));
  // at l = 3 the weights 0 and varpi give the same point of T/W
  CHECK_THROWS_AS(build_block_idempotent(W, 3, {Weight{0}, {Weight{1}, Weight{2}, Weight{-1}}, 3}), PointsNotSeparated);
  CHECK_NOTHROW(build_block_idempotent(W, 3, {Weight{0}, {Weight{2}, Weight{-1}}, 3}));
}

TEST_CASE("block idempotent certification") {
  struct Case {
    const char* type;
    int l;
    Weight target;
    std::vector<Weight> others;
    int n;
  };
  const std::vector<Case> cases{
      {"A1", 3, Weight{0}, {Weight{2}, Weight{-1}}, 3},
      {"A1", 5, Weight{0}, {Weight{1}, Weight{2}, Weight{-1}}, 3},
      {"A2", 5, Weight{0, 0}, {Weight{1, 0}, Weight{0, 1}, Weight{-1, -1}, Weight{2, 1}}, 3},
      {"B2", 7, Weight{0, 0}, {Weight{1, 0}, Weight{0, 1}, Weight{-1, 0}}, 2},
  };
  for (const auto& c : cases) {
    INFO(std::string(c.type), " ", c.l);
    const WeylGroup W(RootDatum::parse(c.type));
    const BlockIdempotent p = build_block_idempotent(W, c.l, {c.target, c.others, c.n});
    CHECK(p.points().size() >= 2);
    InvariantPoly<CycScalar> p_minus_one = p.invariant_poly();
    p_minus_one.add_term(Monomial(W.rank()), CycScalar(-1));
    CHECK(membership_order(W, c.l, p_minus_one, c.target, c.n + 2) >= c.n);
    for (const Weight& o : c.others) CHECK(membership_order(W, c.l, p.invariant_poly(), o, c.n + 2) >= c.n);
  }
}

TEST_CASE("membership order examples") {
  const WeylGroup W(RootDatum::parse("A2"));
  const auto& F = CyclotomicField::get(5);
  const Weight pt{1, 0};
  const auto v = point_coordinates(W, F, pt);
  CHECK(membership_order(W, 5, translated_fundamental(2, 0, v[0], 1), pt, 5) == 1);
  CHECK(membership_order(W, 5, translated_fundamental(2, 0, v[0], 2), pt, 5) == 2);
  CHECK(membership_order(W, 5, translated_fundamental(2, 0, v[0] + CycScalar(1), 1), pt, 5) == 0);
  CHECK(membership_order(W, 5, translated_fundamental(2, 0, v[0], 7), pt, 5) == 5);
}

TEST_CASE("central function of an idempotent is a block indicator") {
  for (const auto& [type, l] : std::vector<std::pair<std::string, int>>{{"A1", 5}, {"A2", 5}}) {
    const WeylGroup W(RootDatum::parse(type));
    const auto& F = CyclotomicField::get(l);
    const auto box = oracle::box_weights(W.rank(), 2);
    const Weight target = W.datum().zero();
    const auto target_pt = point_coordinates(W, F, target);
    std::vector<Weight> others;
    for (const Weight& w : box)
      if (!(point_coordinates(W, F, w) == target_pt)) others.push_back(w);
    const BlockIdempotent p = build_block_idempotent(W, l, {target, others, 1});
    const CentralFunction cf = central_function_from_invariant(W, l, p.character(W), box);
    for (const Weight& w : box) {
      INFO(type, " ", w.to_string());
      const bool same = oracle::extended_block_equal(W, w, target, l, 2 * l);
      CHECK(cf.values.at(w) == CycScalar(same ? 1 : 0));
    }
    const CentralFunction ones = central_function_from_invariant(W, l, CycChar::constant(W.rank(), CycScalar(1)), box);
    for (const auto& [w, v] : ones.values) CHECK(v == CycScalar(1));
  }
}

TEST_CASE("jet division") {
  const auto& F = CyclotomicField::get(5);
  Jet num(4), den(4);
  // num = eps^2 (1 + eps), den = eps (2 + eps)
  num[2] = num[3] = F.one();
  den[1] = CycScalar(2);
  den[2] = F.one();
  const LaurentJet q = divide(num, den);
  CHECK(q.valuation == 1);
  CHECK_FALSE(q.has_pole());
  CHECK(q.coefficient(1) == CycScalar(Rational(1, 2)));
  CHECK(q.coefficient(2) == CycScalar(Rational(1, 4)));
  const LaurentJet inv = divide(den, num);
  CHECK(inv.has_pole());
  CHECK_THROWS_AS(divide(num, Jet(4)), NonExactDivision);
}

TEST_CASE("translation trace scalar examples") {
  const WeylGroup W(RootDatum::parse("A1"));
  for (const auto& [omega, expected] : std::vector<std::pair<int, long>>{{0, 1}, {-1, 2}, {2, 2}, {1, 1}}) {
    const BlockLabel b = make_block_label(W, Weight{omega}, 3);
    const TraceScalarReport r = translation_trace_scalar(W, 3, b);
    CAPTURE(omega);
    CHECK(r.stable);
    CHECK(r.expected == expected);
    CHECK(r.value == CycScalar(expected));
  }
}

TEST_CASE("translation trace scalar: jets agree with exact characters") {
  for (int l : {3, 5}) {
    const WeylGroup W(RootDatum::parse("A1"));
    for (const BlockLabel& b : enumerate_blocks(W, l))
      for (int n : {1, 2, 3}) {
        INFO(l, " ", b.omega.to_string(), " ", n);
        CHECK(translation_trace_value(W, l, b, n, Exec::Serial) == translation_trace_value_exact(W, l, b, n));
      }
  }
  const WeylGroup A2(RootDatum::parse("A2"));
  const BlockLabel b = make_block_label(A2, Weight{0, 1}, 5);
  CHECK(translation_trace_value(A2, 5, b, 1, Exec::Serial) == translation_trace_value_exact(A2, 5, b, 1));
}

TEST_CASE("translation trace scalar equals the stabilizer order") {
  for (const auto& [type, l] : std::vector<std::pair<std::string, int>>{{"A1", 3}, {"A1", 5}, {"A2", 5}}) {
    const WeylGroup W(RootDatum::parse(type));
    for (const BlockLabel& b : enumerate_blocks(W, l)) {
      INFO(type, " ", l, " ", b.omega.to_string());
      const TraceScalarReport r = translation_trace_scalar(W, l, b);
      CHECK(r.matches());
      CHECK(r.expected == static_cast<long>(affine_stabilizer(W, b, l).size()));
    }
  }
}

TEST_CASE("serial and threaded trace kernels agree") {
  const WeylGroup W(RootDatum::parse("A2"));
  for (const Weight& w : {Weight{-1, -1}, Weight{1, 2}}) {
    const BlockLabel b = make_block_label(W, w, 5);
    CHECK(translation_trace_value(W, 5, b, 3, Exec::Serial) == translation_trace_value(W, 5, b, 3, Exec::Parallel));
  }
}

TEST_CASE("vanishing at non-conjugate blocks") {
  int checked = 0;
  for (const auto& [type, l] : std::vector<std::pair<std::string, int>>{{"A1", 3}, {"A1", 5}, {"A2", 5}}) {
    const WeylGroup W(RootDatum::parse(type));
    std::mt19937 rng(17);
    for (const BlockLabel& b : enumerate_blocks(W, l)) {
      const int threshold = stabilizer_denominator_order(W, l, b) + 1;
      const CycChar f =
          stabilizer_average(W, b, random_cyc_invariant(W, l, rng) + CycChar::monomial(W.datum().fundamental_weight(0)));
      for (const Weight& nu : translation_module_weights(W, b)) {
        if (jantzen_block_criterion(W, l, b, nu)) continue;
        std::vector<int> sep(static_cast<std::size_t>(W.rank()));
        for (std::size_t i = 0; i < sep.size(); ++i) sep[i] = static_cast<int>(i) + 1;
        INFO(type, " ", l, " ", b.omega.to_string(), " ", nu.to_string());
        const VanishingReport r = claim_vanishing(W, l, b, nu, threshold, sep, f);
        CHECK(r.vanishes());
        CHECK(claim_vanishing(W, l, b, nu, threshold + 1, sep, f).vanishes());
        if (W.rank() == 1) CHECK(claim_vanishing_exact(W, l, b, nu, threshold, sep, f).is_zero());
        ++checked;
      }
    }
  }
  CHECK(checked >= 5);
}

TEST_CASE("vanishing needs the multiplicity") {
  // with n = 0 the quotient is generally nonzero: the claim is not vacuous
  const WeylGroup W(RootDatum::parse("A1"));
  const BlockLabel b = make_block_label(W, Weight{-1}, 3);
  const CycChar f = CycChar::constant(1, CycScalar(1));
  const VanishingReport r = claim_vanishing(W, 3, b, Weight{1}, 0, {1}, f);
  CHECK_FALSE(r.vanishes());
  CHECK(claim_vanishing_exact(W, 3, b, Weight{1}, 0, {1}, f) == r.value);
}
