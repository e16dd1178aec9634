#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "alcove/charring.hpp"
#include "alcove/jet.hpp"
#include "alcove/kernels.hpp"

namespace alcove {

// ---- Bernstein trace ----

// (sum_{nu in weights} tau^2_nu(f L)) / L for a weight multiset given with
// repetitions. Throws NotInvariant if f is not W-invariant.
template <typename Ring>
Character<typename Ring::Coeff> bernstein_trace_multiset(const WeylGroup& W, const std::vector<Weight>& weights,
                                                         const Character<typename Ring::Coeff>& f, const Ring& ring) {
  using C = typename Ring::Coeff;
  if (!f.is_invariant(W)) throw NotInvariant("the trace is only defined on W-invariant elements");
  const RootDatum& d = W.datum();
  const Character<C> L = weyl_denominator<C>(d);
  const Character<C> fL = f * L;
  std::map<Weight, long> counts;
  for (const Weight& nu : weights) ++counts[nu];
  Character<C> sum;
  for (const auto& [nu, m] : counts) sum += C(m) * tau_twist(d, nu, fL, 2, ring);
  return exact_divide(sum, L);
}

// tr_V for V = V(highest).
template <typename Ring>
Character<typename Ring::Coeff> bernstein_trace(const WeylGroup& W, const Weight& highest,
                                                const Character<typename Ring::Coeff>& f, const Ring& ring) {
  return bernstein_trace_multiset(W, weight_multiset(W, highest), f, ring);
}

// sum_{nu in P(V)} chi_{mu+nu}(q^{2 rho}) f(q^{2(mu+nu+rho)}): the value of the
// trace computed module by module through the tensor identity.
template <typename Ring>
typename Ring::Coeff quantum_trace_oracle(const WeylGroup& W, const Weight& mu, const Weight& highest,
                                          const Character<typename Ring::Coeff>& f, const Ring& ring) {
  using C = typename Ring::Coeff;
  const RootDatum& d = W.datum();
  C out(0);
  for (const auto& [nu, m] : weight_multiplicities(W, highest)) {
    const C dim = quantum_dimension(d, mu + nu, ring);
    if (is_zero(dim)) continue;
    out += C(m) * dim * evaluate_at(d, f, mu + nu, 2, ring);
  }
  return out;
}

// The scalar by which f acts on M(lambda): f(zeta^{2(lambda+rho)}).
template <typename Ring>
typename Ring::Coeff central_character(const RootDatum& d, const Character<typename Ring::Coeff>& f, const Weight& lambda,
                                       const Ring& ring) {
  return evaluate_at(d, f, lambda, 2, ring);
}

// ---- points of T/W and block idempotents ----

// Values of the fundamental characters at zeta^{2(lambda+rho)}.
std::vector<CycScalar> point_coordinates(const WeylGroup& W, const CyclotomicField& field, const Weight& lambda);

struct IdempotentSpec {
  Weight target;
  std::vector<Weight> others;
  int multiplicity = 1;
};

// p = P(h) with h = sum_i c_i e_i a separating linear form in the fundamental
// characters and P a univariate polynomial with P = 1 to order n at h(target)
// and P = 0 to order n at every other point.
class BlockIdempotent {
 public:
  const std::vector<int>& separator() const { return separator_; }
  const std::vector<CycScalar>& univariate() const { return poly_; }
  int multiplicity() const { return n_; }
  const Weight& target() const { return target_; }
  // One representative weight per distinct point, target first.
  const std::vector<Weight>& points() const { return points_; }

  CycScalar separator_value(const std::vector<CycScalar>& coords) const;
  CycScalar value_at(const std::vector<CycScalar>& coords) const;
  InvariantPoly<CycScalar> invariant_poly() const;
  CycChar character(const WeylGroup& W) const;

 private:
  friend BlockIdempotent build_block_idempotent(const WeylGroup&, int, const IdempotentSpec&);
  std::vector<int> separator_;
  std::vector<CycScalar> poly_;
  int n_ = 1;
  Weight target_;
  std::vector<Weight> points_;
};

// Throws PointsNotSeparated when an "other" weight lies over the target point
// or no small linear form separates the points.
BlockIdempotent build_block_idempotent(const WeylGroup& W, int l, const IdempotentSpec& spec);

// Largest n <= cap with f in m^n at the point zeta^{2(mu+rho)}, read off as the
// lowest total degree after translating the fundamental coordinates to the point.
int membership_order(const WeylGroup& W, int l, const InvariantPoly<CycScalar>& f, const Weight& mu, int cap);

// ---- jets along a curve through a torus point ----

// Evaluates characters along eps -> zeta^{2(base+shift)} exp(eps c), where
// K_lambda pairs with c through e * height(lambda). Results are cached by the
// shift modulo l Lambda, which leaves the point unchanged.
class JetEvaluator {
 public:
  JetEvaluator(const WeylGroup& W, int l, const Weight& base, int precision);

  int precision() const { return precision_; }
  const CyclotomicField& field() const { return field_; }
  Weight reduce(const Weight& shift) const;

  Jet monomial(const Weight& lambda, const Weight& shift) const;
  Jet character(const IntChar& f, const Weight& shift) const;
  Jet character(const CycChar& f, const Weight& shift) const;
  const Jet& fundamental(int i, const Weight& shift);
  // Safe to call concurrently.
  Jet idempotent(const BlockIdempotent& p, const Weight& shift);
  // (h - h(point))^n with h = sum c_i e_i.
  Jet power_of_translated_form(const std::vector<int>& c, const std::vector<CycScalar>& point_coords, int n,
                               const Weight& shift);

 private:
  const WeylGroup& W_;
  const CyclotomicField& field_;
  int l_;
  Weight base_;
  int precision_;
  std::vector<IntChar> fundamentals_;
  std::map<std::pair<int, Weight>, Jet> fundamental_cache_;
  std::mutex cache_mutex_;
};

// ---- the translation trace scalar ----

// tr_V(p_[0] tr_{V*}(p_[omega])) at zeta^{2(omega+rho)} with idempotents of
// multiplicity n, V the Weyl module whose weights contain -omega. Computed by
// jets; `exec` picks the serial or threaded shift-sum kernel.
CycScalar translation_trace_value(const WeylGroup& W, int l, const BlockLabel& omega, int n, Exec exec = Exec::Parallel);
// Same value computed with exact characters; slow, for cross-checking.
CycScalar translation_trace_value_exact(const WeylGroup& W, int l, const BlockLabel& omega, int n);

struct TraceScalarReport {
  Weight omega;
  CycScalar value;
  int multiplicity = 0;  // n at which the value was taken
  bool stable = false;   // value(n) == value(n+1)
  long expected = 0;     // stabilizer order
  std::vector<std::pair<int, CycScalar>> history;
  bool matches() const { return stable && value == CycScalar(expected); }
};

// Starts at multiplicity n and raises it until two consecutive values agree or cap is reached.
TraceScalarReport translation_trace_scalar(const WeylGroup& W, int l, const BlockLabel& omega, int n = 3, int cap = 6,
                                           Exec exec = Exec::Parallel);

// The weights of V (highest weight the dominant conjugate of -omega) and the
// representative weights of every point the idempotents must control.
std::vector<Weight> translation_module_weights(const WeylGroup& W, const BlockLabel& omega);

// ---- central functions ----

struct CentralFunction {
  std::map<Weight, CycScalar> values;
};

CentralFunction central_function_from_invariant(const WeylGroup& W, int l, const CycChar& f,
                                                const std::vector<Weight>& domain);

// ---- the vanishing claim ----

struct VanishingReport {
  Weight omega;
  Weight nu;
  int multiplicity = 0;
  CycScalar value;    // constant term of the quotient
  bool pole = false;  // negative powers of eps in the quotient
  bool vanishes() const { return !pole && value.is_zero(); }
};

// (sum_{x in stabilizer} tau^2_{x nu}(p f L_omega)) / L_omega at zeta^{2(omega+rho)}
// for p = (h - h(pt))^n, pt = [omega + nu], and f invariant under the stabilizer.
VanishingReport claim_vanishing(const WeylGroup& W, int l, const BlockLabel& omega, const Weight& nu, int n,
                                const std::vector<int>& separator, const CycChar& f);
// Exact character version (requires the quotient to be a character).
CycScalar claim_vanishing_exact(const WeylGroup& W, int l, const BlockLabel& omega, const Weight& nu, int n,
                                const std::vector<int>& separator, const CycChar& f);
// sum_{x in stabilizer} x(g): projects onto characters invariant under the stabilizer.
CycChar stabilizer_average(const WeylGroup& W, const BlockLabel& omega, const CycChar& g);
// Order of vanishing of L_omega at zeta^{2(omega+rho)}.
int stabilizer_denominator_order(const WeylGroup& W, int l, const BlockLabel& omega);

}  // namespace alcove
