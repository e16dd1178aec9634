#pragma once

#include <utility>
#include <vector>

#include "alcove/weyl.hpp"

namespace alcove {

// A block of category O at the root of unity, labelled by its representative
// in the closed fundamental l-alcove (shifted by -rho).
struct BlockLabel {
  Weight omega;
  // Indices into W of W_{zeta^omega} = {x in W : x(omega+rho) = omega+rho mod l Lambda}.
  std::vector<int> stabilizer;
  // Affine nodes (0 = the wall <nu, theta^vee> = l) whose reflections fix omega.
  std::vector<int> parahoric_type;

  int stabilizer_order() const { return static_cast<int>(stabilizer.size()); }
  bool stabilizes(int w) const;
  friend bool operator==(const BlockLabel& a, const BlockLabel& b) { return a.omega == b.omega; }
};

// All l-alcove labels. Requires validate_l; throws InadmissibleLevel otherwise.
std::vector<BlockLabel> enumerate_blocks(const WeylGroup& W, int l);

// Labels with 0 <= <omega+rho, alpha^vee> < l for all positive alpha.
std::vector<BlockLabel> enumerate_restricted_blocks(const WeylGroup& W, int l);

// Builds the label (stabilizer and parahoric type) for omega in the closed alcove.
BlockLabel make_block_label(const WeylGroup& W, const Weight& omega, int l);

// The stabilizer of omega in (W_{l,af}, dot) as affine elements, one per
// element of the finite stabilizer, sorted by length.
std::vector<AffineElement> affine_stabilizer(const WeylGroup& W, const BlockLabel& block, int l);

// Returns omega and the minimal-length x in W_{l,af} with x . omega = lambda.
std::pair<BlockLabel, AffineElement> block_of(const WeylGroup& W, const Weight& lambda, int l);

bool same_block(const WeylGroup& W, const Weight& lambda, const Weight& mu, int l);

// Canonical representative of the class of lambda in Lambda / (W_{l,ex}, dot):
// the lexicographically smallest W-image of lambda+rho reduced mod l.
Weight extended_class(const WeylGroup& W, const Weight& lambda, int l);

// Single-reflection raisings s . mu > mu (dominance) over affine reflections
// s_{alpha, lk}, restricted to outputs with every coordinate in [-box, box].
std::vector<Weight> linkage_raises(const WeylGroup& W, const Weight& mu, int l, int box);

// Verma factors x y . omega2 of the translation of M(x . omega1), with y over
// minimal-length representatives of W_{l,omega1} / (W_{l,omega1} cap W_{l,omega2}).
std::vector<Weight> translation_verma_factors(const WeylGroup& W, int l, const BlockLabel& omega1,
                                              const BlockLabel& omega2, const AffineElement& x);

// The dominant weight in the W-orbit of omega2 - omega1: highest weight of the
// module used to translate from omega1 to omega2.
Weight translation_module_weight(const WeylGroup& W, const Weight& omega1, const Weight& omega2);

// [omega + nu] = [0]  iff  nu in W_{zeta^omega} . (-omega).
bool jantzen_block_criterion(const WeylGroup& W, int l, const BlockLabel& omega, const Weight& nu);

}  // namespace alcove
