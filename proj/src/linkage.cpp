#include "alcove/linkage.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <tuple>

#include "alcove/errors.hpp"

namespace alcove {

namespace {

void require_admissible(const WeylGroup& W, int l) {
  if (!W.datum().validate_l(l))
    throw InadmissibleLevel("l = " + std::to_string(l) + " is not admissible for " + W.datum().name());
}

bool divisible(const Weight& v, int l) {
  return std::all_of(v.begin(), v.end(), [l](int c) { return c % l == 0; });
}

// Deterministic order on affine elements: length first.
auto by_length(const WeylGroup& W) {
  return [&W](const AffineElement& a, const AffineElement& b) {
    const int la = W.length(a), lb = W.length(b);
    if (la != lb) return la < lb;
    return a < b;
  };
}

}  // namespace

bool BlockLabel::stabilizes(int w) const {
  return std::find(stabilizer.begin(), stabilizer.end(), w) != stabilizer.end();
}

BlockLabel make_block_label(const WeylGroup& W, const Weight& omega, int l) {
  const RootDatum& d = W.datum();
  const Weight nu = omega + d.rho();
  BlockLabel b;
  b.omega = omega;
  for (int w = 0; w < W.order(); ++w)
    if (divisible(W.act(w, nu) - nu, l)) b.stabilizer.push_back(w);
  if (d.coroot_pairing(d.highest_short_root(), nu) == l) b.parahoric_type.push_back(0);
  for (int i = 0; i < d.rank(); ++i)
    if (nu[i] == 0) b.parahoric_type.push_back(i + 1);
  return b;
}

std::vector<BlockLabel> enumerate_blocks(const WeylGroup& W, int l) {
  require_admissible(W, l);
  const RootDatum& d = W.datum();
  const int r = d.rank();
  std::vector<BlockLabel> out;
  Weight nu(r);
  // odometer over [0, l]^r
  while (true) {
    if (d.coroot_pairing(d.highest_short_root(), nu) <= l) out.push_back(make_block_label(W, nu - d.rho(), l));
    int k = 0;
    while (k < r && nu[k] == l) nu[k++] = 0;
    if (k == r) break;
    ++nu[k];
  }
  std::sort(out.begin(), out.end(), [](const BlockLabel& a, const BlockLabel& b) { return a.omega < b.omega; });
  return out;
}

std::vector<BlockLabel> enumerate_restricted_blocks(const WeylGroup& W, int l) {
  std::vector<BlockLabel> out;
  const RootDatum& d = W.datum();
  for (BlockLabel& b : enumerate_blocks(W, l))
    if (d.coroot_pairing(d.highest_short_root(), b.omega + d.rho()) < l) out.push_back(std::move(b));
  return out;
}

std::vector<AffineElement> affine_stabilizer(const WeylGroup& W, const BlockLabel& block, int l) {
  const Weight nu = block.omega + W.datum().rho();
  std::vector<AffineElement> out;
  for (int w : block.stabilizer) out.push_back({w, W.act(W.inverse(w), nu) - nu, Lattice::lQ, l});
  std::sort(out.begin(), out.end(), by_length(W));
  return out;
}

std::pair<BlockLabel, AffineElement> block_of(const WeylGroup& W, const Weight& lambda, int l) {
  require_admissible(W, l);
  const RootDatum& d = W.datum();
  Weight nu = lambda + d.rho();
  AffineElement y = W.affine_identity(Lattice::lQ, l);  // y . lambda = nu - rho
  // Alcove walk: reflect across any violated wall; the distance to the
  // fundamental alcove strictly decreases.
  while (true) {
    int node = -1;
    for (int i = 0; i < d.rank() && node < 0; ++i)
      if (nu[i] < 0) node = i + 1;
    if (node < 0 && d.coroot_pairing(d.highest_short_root(), nu) > l) node = 0;
    if (node < 0) break;
    const AffineElement s = W.affine_simple_reflection(node, Lattice::lQ, l);
    nu = W.act(s, nu);
    y = W.compose(s, y);
  }
  BlockLabel block = make_block_label(W, nu - d.rho(), l);
  const AffineElement x0 = W.inverse(y);
  AffineElement best = x0;
  bool first = true;
  const auto less = by_length(W);
  for (const AffineElement& s : affine_stabilizer(W, block, l)) {
    AffineElement cand = W.compose(x0, s);
    if (first || less(cand, best)) best = cand;
    first = false;
  }
  return {std::move(block), best};
}

bool same_block(const WeylGroup& W, const Weight& lambda, const Weight& mu, int l) {
  return block_of(W, lambda, l).first.omega == block_of(W, mu, l).first.omega;
}

Weight extended_class(const WeylGroup& W, const Weight& lambda, int l) {
  const Weight nu = lambda + W.datum().rho();
  Weight best;
  for (int w = 0; w < W.order(); ++w) {
    Weight v = W.act(w, nu);
    for (int& c : v) c = ((c % l) + l) % l;
    if (w == 0 || v < best) best = v;
  }
  return best;
}

std::vector<Weight> linkage_raises(const WeylGroup& W, const Weight& mu, int l, int box) {
  const RootDatum& d = W.datum();
  int maxabs = 0;
  for (int c : mu) maxabs = std::max(maxabs, std::abs(c));
  const Weight nu = mu + d.rho();
  std::set<Weight> out;
  for (const PositiveRoot& alpha : d.positive_roots()) {
    const int m = d.coroot_pairing(alpha, nu);
    // s_{alpha, lk} . mu = mu + (lk - m) alpha; raising needs lk - m > 0.
    int c = ((-m) % l + l) % l;
    if (c == 0) c = l;
    for (; c <= box + maxabs; c += l) {
      const Weight v = mu + c * alpha.weight;
      if (std::all_of(v.begin(), v.end(), [box](int x) { return std::abs(x) <= box; })) out.insert(v);
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Weight> translation_verma_factors(const WeylGroup& W, int l, const BlockLabel& omega1,
                                              const BlockLabel& omega2, const AffineElement& x) {
  const std::vector<AffineElement> stab1 = affine_stabilizer(W, omega1, l);
  std::vector<AffineElement> both;
  for (const AffineElement& s : stab1)
    if (W.dot(s, omega2.omega) == omega2.omega) both.push_back(s);
  // stab1 is sorted by length, so the first element of each coset met is minimal.
  std::set<AffineElement> covered;
  std::vector<Weight> out;
  for (const AffineElement& y : stab1) {
    if (covered.count(y)) continue;
    for (const AffineElement& h : both) covered.insert(W.compose(y, h));
    out.push_back(W.dot(W.compose(x, y), omega2.omega));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Weight translation_module_weight(const WeylGroup& W, const Weight& omega1, const Weight& omega2) {
  return W.to_dominant(omega2 - omega1).first;
}

bool jantzen_block_criterion(const WeylGroup& W, int /*l*/, const BlockLabel& omega, const Weight& nu) {
  const Weight target = -omega.omega;
  for (int w : omega.stabilizer)
    if (W.act(w, target) == nu) return true;
  return false;
}

}  // namespace alcove
