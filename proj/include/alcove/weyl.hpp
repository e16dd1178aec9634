#pragma once

#include <map>
#include <string>
#include <vector>

#include "alcove/coords.hpp"
#include "alcove/root_datum.hpp"

namespace alcove {

struct FiniteWeylElement {
  IntMatrix matrix;       // action on fundamental-weight coordinates
  int length = 0;
  std::vector<int> word;  // reduced word in simple reflections (0-based), leftmost first
};

// Which lattice the translation part lives in: W_af, W_ex, W_{l,af}, W_{l,ex}.
enum class Lattice { Q, Lambda, lQ, lLambda };

std::string to_string(Lattice t);

// The element w * tau_mu, acting by lambda -> w(lambda + mu). The finite part is
// an index into the owning WeylGroup. For l-scaled tags the translation is
// stored as the actual weight (an element of lQ or l Lambda) and level = l.
struct AffineElement {
  int w = 0;
  Weight translation;
  Lattice lattice = Lattice::Q;
  int level = 1;

  friend bool operator==(const AffineElement& a, const AffineElement& b) {
    return a.w == b.w && a.translation == b.translation;
  }
  friend std::strong_ordering operator<=>(const AffineElement& a, const AffineElement& b) {
    if (auto c = a.w <=> b.w; c != 0) return c;
    return a.translation <=> b.translation;
  }
};

// Affine Dynkin nodes: 0 is the affine node, i in 1..rank is the simple reflection s_i.
struct ParabolicType {
  std::vector<int> nodes;

  static ParabolicType empty() { return {}; }
  // J = the finite simple reflections, i.e. the affine Grassmannian type.
  static ParabolicType finite_nodes(int rank);
  bool contains(int node) const;
};

// Finite Weyl group of a root datum, fully enumerated (rank <= 6), together
// with the affine and extended groups built on top of it.
class WeylGroup {
 public:
  static constexpr int kMaxRank = 6;

  explicit WeylGroup(RootDatum datum);

  const RootDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank(); }
  int order() const { return static_cast<int>(elements_.size()); }
  const std::vector<FiniteWeylElement>& elements() const { return elements_; }
  const FiniteWeylElement& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
  int identity() const { return 0; }
  int longest() const { return order() - 1; }
  int simple_reflection(int i) const { return simple_[static_cast<std::size_t>(i)]; }
  int reflection(const PositiveRoot& gamma) const;
  int length(int w) const { return element(w).length; }
  int sign(int w) const { return length(w) % 2 == 0 ? 1 : -1; }

  int multiply(int a, int b) const;
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  // Index of the element whose action sends rho to the given weight, or -1.
  int find_by_rho_image(const Weight& image) const;

  Weight act(int w, const Weight& lambda) const { return element(w).matrix.apply(lambda); }
  // w . lambda = w(lambda + rho) - rho
  Weight dot(int w, const Weight& lambda) const;

  // Dominant element of W lambda and the minimal-length w with w(lambda) dominant.
  std::pair<Weight, int> to_dominant(const Weight& lambda) const;
  std::vector<Weight> orbit(const Weight& lambda) const;

  // ---- affine elements ----
  AffineElement affine_identity(Lattice lattice = Lattice::Q, int level = 1) const;
  AffineElement finite(int w, Lattice lattice = Lattice::Q, int level = 1) const;
  AffineElement translation(const Weight& mu, Lattice lattice = Lattice::Q, int level = 1) const;
  // Simple reflection for affine node i (0 = affine). For level l the affine
  // reflection is through the wall <nu, theta^vee> = l.
  AffineElement affine_simple_reflection(int node, Lattice lattice = Lattice::Q, int level = 1) const;

  // (w1, mu1)(w2, mu2) = (w1 w2, w2^{-1} mu1 + mu2)
  AffineElement compose(const AffineElement& x, const AffineElement& y) const;
  AffineElement inverse(const AffineElement& x) const;
  Weight act(const AffineElement& x, const Weight& lambda) const;
  Weight dot(const AffineElement& x, const Weight& lambda) const;
  // Length via the hyperplane-crossing count; translations are divided by the
  // level first, so l-scaled elements get their length in W_af.
  int length(const AffineElement& x) const;

 private:
  RootDatum datum_;
  std::vector<FiniteWeylElement> elements_;
  std::vector<int> simple_;
  std::vector<int> inverse_;
  std::map<Weight, int> by_rho_image_;
};

std::vector<FiniteWeylElement> generate_finite_weyl(const RootDatum& d);

// Elements of the parabolic subgroup W_J, sorted by length. InfiniteParabolic
// when J contains every affine node.
std::vector<AffineElement> parabolic_subgroup(const WeylGroup& W, const ParabolicType& J);

// All affine elements of length <= bound (tag Q), breadth first by length.
std::vector<AffineElement> affine_elements_up_to(const WeylGroup& W, int bound);

// Minimal representatives of W_af / W_J with length <= bound, sorted by
// (length, finite part, translation).
std::vector<AffineElement> min_coset_reps(const WeylGroup& W, const ParabolicType& J, int length_bound);

// Coefficient list of sum_{x in W^J_af, l(x) <= truncation} t^{2 l(x)}; entry k is
// the coefficient of t^k.
std::vector<long long> poincare_series(const WeylGroup& W, const ParabolicType& J, int truncation);

// sum_{w in W} t^{2 l(w)}: the finite flag variety.
std::vector<long long> finite_poincare_series(const WeylGroup& W);

}  // namespace alcove
