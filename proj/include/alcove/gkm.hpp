#pragma once

#include <map>
#include <string>
#include <vector>

#include "alcove/charring.hpp"
#include "alcove/kernels.hpp"
#include "alcove/linkage.hpp"
#include "alcove/mpoly.hpp"

namespace alcove {

// Polynomials on the Cartan with hbar: variables a_1..a_r are the simple roots,
// the last variable is hbar. W acts linearly, W_af through
// (w, mu)(alpha) = w(alpha) - e (alpha, mu) hbar.
class CartanRing {
 public:
  explicit CartanRing(const WeylGroup& W);

  const WeylGroup& group() const { return W_; }
  int num_variables() const { return W_.rank() + 1; }
  MPoly one() const { return MPoly::constant(num_variables(), 1); }
  MPoly simple_root(int j) const { return MPoly::variable(num_variables(), j); }
  MPoly hbar() const { return MPoly::variable(num_variables(), W_.rank()); }
  // Linear form of a root lattice element given in fundamental coordinates.
  MPoly linear_form(const Weight& alpha) const;

  MPoly act(int w, const MPoly& f) const;
  MPoly act(const AffineElement& y, const MPoly& f) const;

 private:
  const WeylGroup& W_;
  std::vector<std::vector<MPoly>> finite_images_;  // w -> images of a_j
};

// Product of the positive roots whose reflections lie in the stabilizer of omega.
MPoly lambda_omega(const WeylGroup& W, const BlockLabel& omega);

// sum_{x in stabilizer} (-1)^{l(x)} x(f) / Lambda_omega.
MPoly pi_star_poly(const WeylGroup& W, const BlockLabel& omega, const MPoly& f);

// A function on a finite set of T-fixed points (affine Weyl group elements),
// defined on every point of length <= truncation.
struct FixedPointFamily {
  std::map<AffineElement, RationalFunction> values;
  int truncation = 0;
};

// (g * y(f))_y over the given points; f must be invariant under the stabilizer.
FixedPointFamily restrict_invariant(const WeylGroup& W, const BlockLabel& omega, const MPoly& g, const MPoly& f,
                                    const std::vector<AffineElement>& points, int truncation);

// (f_y)_y  ->  (sum_x (-1)^{l(x)} f_{yx} / y(Lambda_omega))_y over minimal coset
// representatives y of length <= truncation. InsufficientTruncation if some yx
// is missing from the input.
FixedPointFamily pi_star_fixed(const WeylGroup& W, const BlockLabel& omega, const FixedPointFamily& family,
                               int truncation, Exec exec = Exec::Parallel);

// The affine parabolic type generated by the stabilizer walls of omega.
ParabolicType stabilizer_type(const BlockLabel& omega);

struct B5Case {
  std::string monomial;
  bool pass = false;
};

struct B5Report {
  Weight omega;
  int degree_bound = 0;
  int truncation = 0;
  int points = 0;  // coset representatives compared
  std::vector<B5Case> cases;
  bool pass() const {
    for (const auto& c : cases)
      if (!c.pass) return false;
    return true;
  }
};

// Compares restriction after pi_star_poly with pi_star_fixed after restriction
// for every monomial in the simple roots and hbar of degree <= degree_bound.
// Requires omega strictly inside the alcove along the affine wall (InadmissibleLevel otherwise).
B5Report check_lemma_b5(const WeylGroup& W, int l, const BlockLabel& omega, int degree_bound, int truncation,
                        Exec exec = Exec::Parallel);

// Coefficients (entry k for t^k, k <= 2 truncation) of prod_i 1/(1 - t^{2 m_i}).
std::vector<long long> poincare_gr_exponents(const RootDatum& d, int truncation);

// sum_k hbar^{-k} g_k with g_k polynomials in the fundamental characters, and
// the ideal of a point given by its fundamental coordinates.
struct NormalConeElement {
  std::map<int, InvariantPoly<Rational>> parts;
  std::vector<Rational> point;
};

// True iff every g_k lies in the k-th power of the point ideal. IdealTooComplex
// if some g_k has degree above degree_cap.
bool nc_membership(const NormalConeElement& elt, int degree_cap = 64);

}  // namespace alcove
