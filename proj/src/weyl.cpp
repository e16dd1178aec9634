#include "alcove/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "alcove/errors.hpp"

namespace alcove {

std::string to_string(Lattice t) {
  switch (t) {
    case Lattice::Q: return "Q";
    case Lattice::Lambda: return "Lambda";
    case Lattice::lQ: return "lQ";
    case Lattice::lLambda: return "lLambda";
  }
  return "?";
}

ParabolicType ParabolicType::finite_nodes(int rank) {
  ParabolicType J;
  for (int i = 1; i <= rank; ++i) J.nodes.push_back(i);
  return J;
}

bool ParabolicType::contains(int node) const {
  return std::find(nodes.begin(), nodes.end(), node) != nodes.end();
}

namespace {

IntMatrix simple_reflection_matrix(const RootDatum& d, int i) {
  // s_i(lambda) = lambda - lambda_i alpha_i
  IntMatrix m = IntMatrix::identity(d.rank());
  const Weight& a = d.simple_root(i);
  for (int k = 0; k < d.rank(); ++k) m(k, i) -= a[k];
  return m;
}

int inversion_count(const RootDatum& d, const IntMatrix& m) {
  int count = 0;
  for (const PositiveRoot& g : d.positive_roots())
    if (d.scaled_height(m.apply(g.weight)) < 0) ++count;
  return count;
}

}  // namespace

std::vector<FiniteWeylElement> generate_finite_weyl(const RootDatum& d) {
  if (d.rank() > WeylGroup::kMaxRank)
    throw RankTooLarge(d.name() + " exceeds the enumeration cap of rank " + std::to_string(WeylGroup::kMaxRank));
  std::vector<IntMatrix> gens;
  for (int i = 0; i < d.rank(); ++i) gens.push_back(simple_reflection_matrix(d, i));

  std::vector<FiniteWeylElement> out;
  std::set<Weight> seen;
  out.push_back({IntMatrix::identity(d.rank()), 0, {}});
  seen.insert(d.rho());
  std::size_t begin = 0;
  while (begin < out.size()) {
    const std::size_t end = out.size();
    for (std::size_t k = begin; k < end; ++k) {
      for (int i = 0; i < d.rank(); ++i) {
        IntMatrix m = gens[static_cast<std::size_t>(i)] * out[k].matrix;
        Weight key = m.apply(d.rho());
        if (!seen.insert(key).second) continue;
        FiniteWeylElement e;
        e.matrix = m;
        e.length = out[k].length + 1;
        e.word.push_back(i);
        e.word.insert(e.word.end(), out[k].word.begin(), out[k].word.end());
        out.push_back(std::move(e));
      }
    }
    begin = end;
  }
  for (auto& e : out) e.length = inversion_count(d, e.matrix);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.length < b.length; });
  return out;
}

WeylGroup::WeylGroup(RootDatum datum) : datum_(std::move(datum)) {
  elements_ = generate_finite_weyl(datum_);
  for (int i = 0; i < order(); ++i) by_rho_image_[act(i, datum_.rho())] = i;
  for (int i = 0; i < datum_.rank(); ++i) {
    Weight img = simple_reflection_matrix(datum_, i).apply(datum_.rho());
    simple_.push_back(find_by_rho_image(img));
  }
  // The inverse of s_{i1}...s_{ik} is s_{ik}...s_{i1}.
  inverse_.assign(static_cast<std::size_t>(order()), -1);
  for (int a = 0; a < order(); ++a) {
    Weight img = datum_.rho();
    for (int i : element(a).word) img = act(simple_[static_cast<std::size_t>(i)], img);
    inverse_[static_cast<std::size_t>(a)] = find_by_rho_image(img);
  }
}

int WeylGroup::find_by_rho_image(const Weight& image) const {
  auto it = by_rho_image_.find(image);
  return it == by_rho_image_.end() ? -1 : it->second;
}

int WeylGroup::multiply(int a, int b) const {
  return find_by_rho_image(element(a).matrix.apply(act(b, datum_.rho())));
}

int WeylGroup::reflection(const PositiveRoot& gamma) const {
  // s_gamma(rho) = rho - <rho, gamma^vee> gamma
  const int c = datum_.coroot_pairing(gamma, datum_.rho());
  return find_by_rho_image(datum_.rho() - c * gamma.weight);
}

Weight WeylGroup::dot(int w, const Weight& lambda) const {
  return act(w, lambda + datum_.rho()) - datum_.rho();
}

std::pair<Weight, int> WeylGroup::to_dominant(const Weight& lambda) const {
  // Elements are sorted by length, so the first hit is of minimal length.
  for (int w = 0; w < order(); ++w) {
    Weight img = act(w, lambda);
    if (datum_.is_dominant(img)) return {img, w};
  }
  return {lambda, 0};  // unreachable: every orbit meets the dominant chamber
}

std::vector<Weight> WeylGroup::orbit(const Weight& lambda) const {
  std::set<Weight> pts;
  for (int w = 0; w < order(); ++w) pts.insert(act(w, lambda));
  return {pts.begin(), pts.end()};
}

AffineElement WeylGroup::affine_identity(Lattice lattice, int level) const {
  return {0, datum_.zero(), lattice, level};
}

AffineElement WeylGroup::finite(int w, Lattice lattice, int level) const {
  return {w, datum_.zero(), lattice, level};
}

AffineElement WeylGroup::translation(const Weight& mu, Lattice lattice, int level) const {
  return {0, mu, lattice, level};
}

AffineElement WeylGroup::affine_simple_reflection(int node, Lattice lattice, int level) const {
  if (node > 0) return finite(simple_reflection(node - 1), lattice, level);
  // s_{theta, level}: nu -> s_theta(nu) + level*theta = s_theta(nu - level*theta)
  const PositiveRoot& theta = datum_.highest_short_root();
  return {reflection(theta), -level * theta.weight, lattice, level};
}

AffineElement WeylGroup::compose(const AffineElement& x, const AffineElement& y) const {
  AffineElement z;
  z.w = multiply(x.w, y.w);
  z.translation = act(inverse(y.w), x.translation) + y.translation;
  z.lattice = x.lattice;
  z.level = x.level;
  return z;
}

AffineElement WeylGroup::inverse(const AffineElement& x) const {
  // x(lambda) = w(lambda + mu), so x^{-1}(lambda) = w^{-1}(lambda) - mu = w^{-1}(lambda - w mu)
  return {inverse(x.w), -act(x.w, x.translation), x.lattice, x.level};
}

Weight WeylGroup::act(const AffineElement& x, const Weight& lambda) const {
  return act(x.w, lambda + x.translation);
}

Weight WeylGroup::dot(const AffineElement& x, const Weight& lambda) const {
  return act(x.w, lambda + datum_.rho() + x.translation) - datum_.rho();
}

int WeylGroup::length(const AffineElement& x) const {
  // l(w tau_mu) = sum_{g>0, wg>0} |<mu, g^vee>| + sum_{g>0, wg<0} |<mu, g^vee> + 1|
  int total = 0;
  const IntMatrix& m = element(x.w).matrix;
  for (const PositiveRoot& g : datum_.positive_roots()) {
    int c = datum_.coroot_pairing(g, x.translation);
    if (x.level != 1) c /= x.level;
    const bool flips = datum_.scaled_height(m.apply(g.weight)) < 0;
    total += flips ? std::abs(c + 1) : std::abs(c);
  }
  return total;
}

std::vector<AffineElement> parabolic_subgroup(const WeylGroup& W, const ParabolicType& J) {
  std::set<int> nodes(J.nodes.begin(), J.nodes.end());
  if (static_cast<int>(nodes.size()) == W.rank() + 1)
    throw InfiniteParabolic("J contains every affine node");
  std::vector<AffineElement> out{W.affine_identity()};
  std::set<AffineElement> seen{W.affine_identity()};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int j : nodes) {
      AffineElement y = W.compose(out[k], W.affine_simple_reflection(j));
      if (seen.insert(y).second) out.push_back(y);
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [&](const auto& a, const auto& b) { return W.length(a) < W.length(b); });
  return out;
}

std::vector<AffineElement> affine_elements_up_to(const WeylGroup& W, int bound) {
  std::vector<AffineElement> out{W.affine_identity()};
  std::set<AffineElement> seen{W.affine_identity()};
  std::vector<AffineElement> layer = out;
  for (int len = 0; len < bound; ++len) {
    std::vector<AffineElement> next;
    for (const AffineElement& x : layer) {
      for (int node = 0; node <= W.rank(); ++node) {
        AffineElement y = W.compose(W.affine_simple_reflection(node), x);
        if (W.length(y) != len + 1) continue;
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::vector<AffineElement> min_coset_reps(const WeylGroup& W, const ParabolicType& J, int length_bound) {
  std::set<int> nodes(J.nodes.begin(), J.nodes.end());
  if (static_cast<int>(nodes.size()) == W.rank() + 1)
    throw InfiniteParabolic("J contains every affine node");
  std::vector<AffineElement> out;
  for (const AffineElement& x : affine_elements_up_to(W, length_bound)) {
    const int lx = W.length(x);
    bool minimal = true;
    for (int j : nodes) {
      if (W.length(W.compose(x, W.affine_simple_reflection(j))) < lx) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(x);
  }
  return out;
}

std::vector<long long> poincare_series(const WeylGroup& W, const ParabolicType& J, int truncation) {
  std::vector<long long> coeffs(static_cast<std::size_t>(2 * truncation + 1), 0);
  for (const AffineElement& x : min_coset_reps(W, J, truncation)) ++coeffs[static_cast<std::size_t>(2 * W.length(x))];
  return coeffs;
}

std::vector<long long> finite_poincare_series(const WeylGroup& W) {
  std::vector<long long> coeffs(static_cast<std::size_t>(2 * W.length(W.longest()) + 1), 0);
  for (const auto& e : W.elements()) ++coeffs[static_cast<std::size_t>(2 * e.length)];
  return coeffs;
}

}  // namespace alcove
