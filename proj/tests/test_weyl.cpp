#include <map>
#include <random>
#include <set>

#include "alcove/errors.hpp"
#include "alcove/weyl.hpp"
#include "doctest.h"

using namespace alcove;

namespace {

AffineElement random_affine(const WeylGroup& W, std::mt19937& rng, int height) {
  std::uniform_int_distribution<int> pick_w(0, W.order() - 1), coeff(-height, height);
  Weight mu = W.datum().zero();
  for (int i = 0; i < W.rank(); ++i) mu += coeff(rng) * W.datum().simple_root(i);
  return {pick_w(rng), mu, Lattice::Q, 1};
}

Weight random_weight(int rank, std::mt19937& rng, int box) {
  std::uniform_int_distribution<int> c(-box, box);
  Weight v(rank);
  for (int& x : v) x = c(rng);
  return v;
}

// Word length by breadth-first search on the Cayley graph; does not use the
// closed length formula.
std::map<AffineElement, int> cayley_distances(const WeylGroup& W, int depth) {
  std::map<AffineElement, int> dist{{W.affine_identity(), 0}};
  std::vector<AffineElement> layer{W.affine_identity()};
  for (int k = 1; k <= depth; ++k) {
    std::vector<AffineElement> next;
    for (const auto& x : layer)
      for (int node = 0; node <= W.rank(); ++node) {
        AffineElement y = W.compose(x, W.affine_simple_reflection(node));
        if (dist.emplace(y, k).second) next.push_back(y);
      }
    layer = std::move(next);
  }
  return dist;
}

}  // namespace

TEST_CASE("finite Weyl group orders") {
  CHECK(WeylGroup(RootDatum::parse("A1")).order() == 2);
  CHECK(WeylGroup(RootDatum::parse("A2")).order() == 6);
  CHECK(WeylGroup(RootDatum::parse("B2")).order() == 8);
  CHECK(WeylGroup(RootDatum::parse("G2")).order() == 12);
  CHECK(WeylGroup(RootDatum::parse("B3")).order() == 48);
  CHECK(WeylGroup(RootDatum::parse("F4")).order() == 1152);
  CHECK_THROWS_AS(WeylGroup(RootDatum::parse("E7")), RankTooLarge);
  for (const char* t : {"A1", "A2", "A3", "B2", "C3", "G2", "D4"}) {
    WeylGroup W(RootDatum::parse(t));
    CAPTURE(t);
    CHECK(W.order() == W.datum().weyl_order());
    CHECK(W.length(W.identity()) == 0);
    CHECK(W.length(W.longest()) == W.datum().num_positive_roots());
    // w0 sends rho to -rho
    CHECK(W.act(W.longest(), W.datum().rho()) == -W.datum().rho());
    for (int a = 0; a < W.order(); ++a) {
      CHECK(W.multiply(a, W.inverse(a)) == W.identity());
      CHECK(static_cast<int>(W.element(a).word.size()) == W.length(a));
    }
  }
}

TEST_CASE("finite actions") {
  WeylGroup A1(RootDatum::parse("A1"));
  CHECK(A1.act(A1.simple_reflection(0), Weight{1}) == Weight{-1});
  CHECK(A1.act(A1.identity(), Weight{5}) == Weight{5});
  CHECK(A1.dot(A1.simple_reflection(0), Weight{0}) == Weight{-2});
  CHECK(A1.dot(A1.simple_reflection(0), Weight{-1}) == Weight{-1});

  WeylGroup A2(RootDatum::parse("A2"));
  // apply s_1, then s_2
  const int s1 = A2.simple_reflection(0), s2 = A2.simple_reflection(1);
  CHECK(A2.act(A2.multiply(s2, s1), Weight{1, 0}) == Weight{0, -1});
  for (int w = 0; w < A2.order(); ++w) CHECK(A2.dot(w, -A2.datum().rho()) == -A2.datum().rho());
}

TEST_CASE("affine elements: group laws and dot compatibility") {
  std::mt19937 rng(7);
  for (const char* t : {"A1", "A2", "B2"}) {
    WeylGroup W(RootDatum::parse(t));
    CAPTURE(t);
    for (int trial = 0; trial < 200; ++trial) {
      const auto x = random_affine(W, rng, 3), y = random_affine(W, rng, 3), z = random_affine(W, rng, 3);
      CHECK(W.compose(W.compose(x, y), z) == W.compose(x, W.compose(y, z)));
      CHECK(W.compose(x, W.inverse(x)) == W.affine_identity());
      const Weight lam = random_weight(W.rank(), rng, 6);
      CHECK(W.dot(x, W.dot(y, lam)) == W.dot(W.compose(x, y), lam));
      CHECK(W.act(x, W.act(y, lam)) == W.act(W.compose(x, y), lam));
      CHECK(W.length(W.compose(x, y)) <= W.length(x) + W.length(y));
      CHECK(W.length(W.inverse(x)) == W.length(x));
      for (int node = 0; node <= W.rank(); ++node) {
        const int d = W.length(W.compose(W.affine_simple_reflection(node), x)) - W.length(x);
        CHECK((d == 1 || d == -1));
      }
    }
  }
}

TEST_CASE("affine length examples and Cayley-graph distance") {
  WeylGroup A1(RootDatum::parse("A1"));
  CHECK(A1.length(A1.affine_identity()) == 0);
  CHECK(A1.length(A1.affine_simple_reflection(1)) == 1);
  CHECK(A1.length(A1.affine_simple_reflection(0)) == 1);
  CHECK(A1.length(A1.translation(Weight{2})) == 2);
  // l-scaled elements measure length in W_af
  CHECK(A1.length(A1.translation(Weight{6}, Lattice::lQ, 3)) == 2);
  CHECK(A1.dot(A1.translation(Weight{6}, Lattice::lQ, 3), Weight{0}) == Weight{6});

  for (const char* t : {"A1", "A2", "B2", "G2"}) {
    WeylGroup W(RootDatum::parse(t));
    CAPTURE(t);
    for (const auto& [x, dist] : cayley_distances(W, 5)) CHECK(W.length(x) == dist);
  }
}

TEST_CASE("parabolic subgroups and coset representatives") {
  WeylGroup A1(RootDatum::parse("A1"));
  CHECK_THROWS_AS(parabolic_subgroup(A1, ParabolicType{{0, 1}}), InfiniteParabolic);
  CHECK_THROWS_AS(min_coset_reps(A1, ParabolicType{{0, 1}}, 2), InfiniteParabolic);
  WeylGroup A2(RootDatum::parse("A2"));
  CHECK(parabolic_subgroup(A2, ParabolicType{{1, 2}}).size() == 6);
  CHECK(parabolic_subgroup(A2, ParabolicType{{0, 2}}).size() == 6);
  CHECK(parabolic_subgroup(A2, ParabolicType{{0}}).size() == 2);

  auto gr = min_coset_reps(A1, ParabolicType{{1}}, 2);
  REQUIRE(gr.size() == 3);
  CHECK(A1.length(gr[0]) == 0);
  CHECK(A1.length(gr[1]) == 1);
  CHECK(A1.length(gr[2]) == 2);

  auto all = min_coset_reps(A1, ParabolicType::empty(), 1);
  std::set<AffineElement> got(all.begin(), all.end());
  std::set<AffineElement> want{A1.affine_identity(), A1.affine_simple_reflection(0), A1.affine_simple_reflection(1)};
  CHECK(got == want);

  auto finite_only = min_coset_reps(A2, ParabolicType::finite_nodes(2), 0);
  CHECK(finite_only.size() == 1);

  // every element factors uniquely as (min rep) * (element of W_J)
  for (const char* t : {"A1", "A2", "B2"}) {
    WeylGroup W(RootDatum::parse(t));
    CAPTURE(t);
    const int bound = 4;
    for (const ParabolicType& J : {ParabolicType::finite_nodes(W.rank()), ParabolicType{{0}}, ParabolicType{{1}}}) {
      auto reps = min_coset_reps(W, J, bound);
      auto sub = parabolic_subgroup(W, J);
      std::set<AffineElement> products;
      for (const auto& x : reps)
        for (const auto& y : sub) {
          const auto xy = W.compose(x, y);
          CHECK(W.length(xy) == W.length(x) + W.length(y));
          products.insert(xy);
        }
      CHECK(products.size() == reps.size() * sub.size());
      for (const auto& z : affine_elements_up_to(W, bound)) CHECK(products.count(z) == 1);
    }
  }
}

TEST_CASE("Poincare series") {
  WeylGroup A1(RootDatum::parse("A1"));
  CHECK(poincare_series(A1, ParabolicType::empty(), 2) == std::vector<long long>{1, 0, 2, 0, 2});
  CHECK(poincare_series(A1, ParabolicType{{1}}, 2) == std::vector<long long>{1, 0, 1, 0, 1});
  CHECK(poincare_series(A1, ParabolicType::empty(), 0) == std::vector<long long>{1});

  for (const char* t : {"A1", "A2", "B2"}) {
    WeylGroup W(RootDatum::parse(t));
    CAPTURE(t);
    const int N = 8;
    auto fl = poincare_series(W, ParabolicType::empty(), N);
    auto gr = poincare_series(W, ParabolicType::finite_nodes(W.rank()), N);
    auto fin = finite_poincare_series(W);
    for (int k = 0; k <= 2 * N; ++k) {
      long long c = 0;
      for (int j = 0; j <= k && j < static_cast<int>(fin.size()); ++j) c += fin[j] * gr[k - j];
      CHECK(fl[k] == c);
    }
  }
}
