#include "alcove/center.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace alcove {

namespace {

using UPoly = std::vector<CycScalar>;  // constant term first

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1, CycScalar(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Remainder modulo a monic polynomial.
UPoly upoly_mod(UPoly a, const UPoly& m) {
  const std::size_t dm = m.size() - 1;
  for (std::size_t k = a.size(); k-- > dm;) {
    const CycScalar c = a[k];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j <= dm; ++j) a[k - dm + j] -= c * m[j];
  }
  if (a.size() > dm) a.resize(dm);
  return a;
}

UPoly upoly_pow_mod(const UPoly& base, int n, const UPoly& m) {
  UPoly out{CycScalar(1)};
  for (int k = 0; k < n; ++k) out = upoly_mod(upoly_mul(out, base), m);
  return out;
}

CycScalar linear_form(const std::vector<int>& c, const std::vector<CycScalar>& coords) {
  CycScalar h(0);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) h += CycScalar(static_cast<long>(c[i])) * coords[i];
  return h;
}

// Candidate separating forms with entries in [-3, 3], smallest l1 norm first.
std::vector<std::vector<int>> separator_candidates(int rank) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(static_cast<std::size_t>(rank), -3);
  while (true) {
    if (std::any_of(c.begin(), c.end(), [](int v) { return v != 0; })) out.push_back(c);
    int i = 0;
    while (i < rank && c[static_cast<std::size_t>(i)] == 3) c[static_cast<std::size_t>(i++)] = -3;
    if (i == rank) break;
    ++c[static_cast<std::size_t>(i)];
  }
  auto norm = [](const std::vector<int>& v) {
    int s = 0;
    for (int x : v) s += std::abs(x);
    return s;
  };
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    if (norm(a) != norm(b)) return norm(a) < norm(b);
    // prefer positive coefficients among equal norms
    return a > b;
  });
  return out;
}

InvariantPoly<CycScalar> linear_poly(const std::vector<int>& c, const CycScalar& constant) {
  const int r = static_cast<int>(c.size());
  InvariantPoly<CycScalar> h(r);
  h.add_term(Monomial(r), constant);
  for (int i = 0; i < r; ++i) {
    Monomial m(r);
    m[i] = 1;
    h.add_term(m, CycScalar(static_cast<long>(c[static_cast<std::size_t>(i)])));
  }
  return h;
}

InvariantPoly<CycScalar> poly_mul(const InvariantPoly<CycScalar>& a, const InvariantPoly<CycScalar>& b) {
  InvariantPoly<CycScalar> out(a.num_variables());
  for (const auto& [x, c] : a.terms())
    for (const auto& [y, d] : b.terms()) out.add_term(x + y, c * d);
  return out;
}

InvariantPoly<CycScalar> univariate_of(const std::vector<CycScalar>& poly, const InvariantPoly<CycScalar>& h) {
  const int r = h.num_variables();
  InvariantPoly<CycScalar> out(r);
  InvariantPoly<CycScalar> power(r);
  power.add_term(Monomial(r), CycScalar(1));
  for (std::size_t k = 0; k < poly.size(); ++k) {
    if (k > 0) power = poly_mul(power, h);
    for (const auto& [m, c] : power.terms()) out.add_term(m, poly[k] * c);
  }
  return out;
}

Jet jet_one(int n) {
  Jet j(n);
  j[0] = CycScalar(1);
  return j;
}

}  // namespace

// ---- points and idempotents ----

std::vector<CycScalar> point_coordinates(const WeylGroup& W, const CyclotomicField& field, const Weight& lambda) {
  std::vector<CycScalar> out;
  for (int i = 0; i < W.rank(); ++i) out.push_back(evaluate_at(W.datum(), fundamental_character(W, i), lambda, 2, field));
  return out;
}

CycScalar BlockIdempotent::separator_value(const std::vector<CycScalar>& coords) const {
  return linear_form(separator_, coords);
}

CycScalar BlockIdempotent::value_at(const std::vector<CycScalar>& coords) const {
  const CycScalar h = separator_value(coords);
  CycScalar out(0);
  for (std::size_t k = poly_.size(); k-- > 0;) out = out * h + poly_[k];
  return out;
}

InvariantPoly<CycScalar> BlockIdempotent::invariant_poly() const {
  return univariate_of(poly_, linear_poly(separator_, CycScalar(0)));
}

CycChar BlockIdempotent::character(const WeylGroup& W) const { return expand(W, invariant_poly()); }

BlockIdempotent build_block_idempotent(const WeylGroup& W, int l, const IdempotentSpec& spec) {
  if (spec.multiplicity < 1) throw UsageError("idempotent multiplicity must be at least 1");
  const CyclotomicField& F = CyclotomicField::get(l);
  BlockIdempotent p;
  p.n_ = spec.multiplicity;
  p.target_ = spec.target;

  std::vector<std::vector<CycScalar>> coords{point_coordinates(W, F, spec.target)};
  p.points_.push_back(spec.target);
  for (const Weight& other : spec.others) {
    const auto c = point_coordinates(W, F, other);
    if (c == coords.front())
      throw PointsNotSeparated("weight " + other.to_string() + " lies over the same point as the target " +
                               spec.target.to_string());
    if (std::find(coords.begin(), coords.end(), c) != coords.end()) continue;
    coords.push_back(c);
    p.points_.push_back(other);
  }

  if (coords.size() == 1) {
    p.separator_.assign(static_cast<std::size_t>(W.rank()), 0);
    p.separator_[0] = 1;
    p.poly_ = {CycScalar(1)};
    return p;
  }

  std::vector<CycScalar> values;
  for (const auto& c : separator_candidates(W.rank())) {
    values.clear();
    for (const auto& pt : coords) values.push_back(linear_form(c, pt));
    bool distinct = true;
    for (std::size_t i = 0; i < values.size() && distinct; ++i)
      for (std::size_t j = i + 1; j < values.size() && distinct; ++j) distinct = !(values[i] == values[j]);
    if (distinct) {
      p.separator_ = c;
      break;
    }
  }
  if (p.separator_.empty()) throw PointsNotSeparated("no small linear form in the fundamental characters separates the points");

  const int n = spec.multiplicity;
  UPoly modulus{CycScalar(1)};
  for (const CycScalar& b : values)
    for (int k = 0; k < n; ++k) modulus = upoly_mul(modulus, UPoly{-b, CycScalar(1)});

  // p0 vanishes to order n at every other point and equals 1 at the target
  const CycScalar& bt = values.front();
  UPoly p0{CycScalar(1)};
  for (std::size_t j = 1; j < values.size(); ++j) {
    const CycScalar inv = (bt - values[j]).inverse();
    p0 = upoly_mod(upoly_mul(p0, upoly_pow_mod(UPoly{-(values[j] * inv), inv}, n, modulus)), modulus);
  }
  UPoly one_minus = p0;
  for (auto& c : one_minus) c = -c;
  one_minus[0] += CycScalar(1);
  UPoly poly = upoly_pow_mod(one_minus, n, modulus);
  for (auto& c : poly) c = -c;
  if (poly.empty()) poly.push_back(CycScalar(0));
  poly[0] += CycScalar(1);
  while (poly.size() > 1 && poly.back().is_zero()) poly.pop_back();
  p.poly_ = std::move(poly);
  return p;
}

int membership_order(const WeylGroup& W, int l, const InvariantPoly<CycScalar>& f, const Weight& mu, int cap) {
  return vanishing_order(f, point_coordinates(W, CyclotomicField::get(l), mu), cap);
}

// ---- jets ----

JetEvaluator::JetEvaluator(const WeylGroup& W, int l, const Weight& base, int precision)
    : W_(W), field_(CyclotomicField::get(l)), l_(l), base_(base), precision_(precision) {
  for (int i = 0; i < W.rank(); ++i) fundamentals_.push_back(fundamental_character(W, i));
}

Weight JetEvaluator::reduce(const Weight& shift) const {
  Weight out = shift;
  for (int& x : out) x = ((x % l_) + l_) % l_;
  return out;
}

Jet JetEvaluator::monomial(const Weight& lambda, const Weight& shift) const {
  const RootDatum& d = W_.datum();
  const CycScalar lead = field_.qpow(2L * d.scaled_pairing(lambda, base_ + shift));
  const Rational c = d.scaled_height(lambda);
  Jet out(precision_);
  Rational term = 1;
  for (int k = 0; k < precision_; ++k) {
    out[k] = lead * CycScalar(term);
    term = term * c / Rational(k + 1);
  }
  return out;
}

Jet JetEvaluator::character(const IntChar& f, const Weight& shift) const {
  Jet out(precision_);
  for (const auto& [lam, c] : f.terms()) out += CycScalar(c) * monomial(lam, shift);
  return out;
}

Jet JetEvaluator::character(const CycChar& f, const Weight& shift) const {
  Jet out(precision_);
  for (const auto& [lam, c] : f.terms()) out += c * monomial(lam, shift);
  return out;
}

const Jet& JetEvaluator::fundamental(int i, const Weight& shift) {
  const std::pair<int, Weight> key{i, reduce(shift)};
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (auto it = fundamental_cache_.find(key); it != fundamental_cache_.end()) return it->second;
  }
  Jet j = character(fundamentals_[static_cast<std::size_t>(i)], key.second);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  return fundamental_cache_.emplace(key, std::move(j)).first->second;
}

Jet JetEvaluator::idempotent(const BlockIdempotent& p, const Weight& shift) {
  Jet h(precision_);
  const auto& c = p.separator();
  for (int i = 0; i < W_.rank(); ++i)
    if (c[static_cast<std::size_t>(i)] != 0) h += CycScalar(static_cast<long>(c[static_cast<std::size_t>(i)])) * fundamental(i, shift);
  const auto& poly = p.univariate();
  Jet out(precision_);
  for (std::size_t k = poly.size(); k-- > 0;) {
    out = out * h;
    out[0] += poly[k];
  }
  return out;
}

Jet JetEvaluator::power_of_translated_form(const std::vector<int>& c, const std::vector<CycScalar>& point_coords, int n,
                                           const Weight& shift) {
  Jet h(precision_);
  for (int i = 0; i < W_.rank(); ++i)
    if (c[static_cast<std::size_t>(i)] != 0) h += CycScalar(static_cast<long>(c[static_cast<std::size_t>(i)])) * fundamental(i, shift);
  h[0] -= linear_form(c, point_coords);
  Jet out = jet_one(precision_);
  for (int k = 0; k < n; ++k) out = out * h;
  return out;
}

// ---- translation trace ----

std::vector<Weight> translation_module_weights(const WeylGroup& W, const BlockLabel& omega) {
  return weight_multiset(W, W.to_dominant(-omega.omega).first);
}

namespace {

struct TraceSetup {
  std::vector<std::pair<Weight, long>> weights;  // P(V) with multiplicities
  BlockIdempotent p_zero, p_omega;
};

TraceSetup trace_setup(const WeylGroup& W, int l, const BlockLabel& omega, int n) {
  const RootDatum& d = W.datum();
  TraceSetup s;
  s.weights = weight_multiplicities(W, W.to_dominant(-omega.omega).first);
  const CyclotomicField& F = CyclotomicField::get(l);

  // one representative per point of T/W reachable by the shifts
  std::vector<Weight> reps;
  std::vector<std::vector<CycScalar>> seen;
  auto add = [&](const Weight& w) {
    auto c = point_coordinates(W, F, w);
    if (std::find(seen.begin(), seen.end(), c) != seen.end()) return;
    seen.push_back(std::move(c));
    reps.push_back(w);
  };
  add(d.zero());
  add(omega.omega);
  for (const auto& [nu, m] : s.weights) {
    add(omega.omega + nu);
    for (const auto& [nu2, m2] : s.weights) add(omega.omega + nu - nu2);
  }
  const auto zero_pt = seen[0];
  const auto omega_pt = point_coordinates(W, F, omega.omega);

  IdempotentSpec spec0{d.zero(), {}, n}, spec_omega{omega.omega, {}, n};
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (!(seen[i] == zero_pt)) spec0.others.push_back(reps[i]);
    if (!(seen[i] == omega_pt)) spec_omega.others.push_back(reps[i]);
  }
  s.p_zero = build_block_idempotent(W, l, spec0);
  s.p_omega = build_block_idempotent(W, l, spec_omega);
  return s;
}

}  // namespace

CycScalar translation_trace_value(const WeylGroup& W, int l, const BlockLabel& omega, int n, Exec exec) {
  const RootDatum& d = W.datum();
  const TraceSetup s = trace_setup(W, l, omega, n);
  const int N = d.num_positive_roots() + 1;
  JetEvaluator E(W, l, omega.omega + d.rho(), N);
  const IntChar L = weyl_denominator<Rational>(d);

  // inner shifts nu + nu' with nu' in P(V*) = -P(V), deduplicated modulo l
  std::map<Weight, int> inner_slot;
  std::vector<Weight> inner_shifts;
  std::vector<ShiftRow> rows;
  for (std::size_t i = 0; i < s.weights.size(); ++i) {
    const auto& [nu, m] = s.weights[i];
    ShiftRow row;
    row.outer = static_cast<int>(i);
    for (const auto& [nu2, m2] : s.weights) {
      const Weight key = E.reduce(nu - nu2);
      auto [it, fresh] = inner_slot.emplace(key, static_cast<int>(inner_shifts.size()));
      if (fresh) inner_shifts.push_back(key);
      row.inner.emplace_back(it->second, m2);
    }
    rows.push_back(std::move(row));
  }

  const std::vector<Jet> outer = map_indices<Jet>(
      static_cast<int>(s.weights.size()),
      [&](int i) {
        const auto& [nu, m] = s.weights[static_cast<std::size_t>(i)];
        return CycScalar(m) * E.idempotent(s.p_zero, nu);
      },
      exec);
  const std::vector<Jet> inner = map_indices<Jet>(
      static_cast<int>(inner_shifts.size()),
      [&](int j) {
        const Weight& sh = inner_shifts[static_cast<std::size_t>(j)];
        return E.idempotent(s.p_omega, sh) * E.character(L, sh);
      },
      exec);

  const Jet total = shift_sum(outer, inner, rows, N, exec);
  const LaurentJet q = divide(total, E.character(L, d.zero()));
  if (q.has_pole()) throw NonExactDivision("trace quotient has a pole at the evaluation point");
  return q.coefficient(0);
}

CycScalar translation_trace_value_exact(const WeylGroup& W, int l, const BlockLabel& omega, int n) {
  const RootDatum& d = W.datum();
  const CyclotomicField& F = CyclotomicField::get(l);
  const TraceSetup s = trace_setup(W, l, omega, n);
  std::vector<Weight> pv, pv_dual;
  for (const auto& [nu, m] : s.weights)
    for (long k = 0; k < m; ++k) {
      pv.push_back(nu);
      pv_dual.push_back(-nu);
    }
  const CycChar inner = bernstein_trace_multiset(W, pv_dual, s.p_omega.character(W), F);
  const CycChar outer = bernstein_trace_multiset(W, pv, s.p_zero.character(W) * inner, F);
  return evaluate_at(d, outer, omega.omega, 2, F);
}

TraceScalarReport translation_trace_scalar(const WeylGroup& W, int l, const BlockLabel& omega, int n, int cap, Exec exec) {
  TraceScalarReport r;
  r.omega = omega.omega;
  r.expected = omega.stabilizer_order();
  CycScalar current = translation_trace_value(W, l, omega, n, exec);
  r.history.emplace_back(n, current);
  for (int k = n; k < cap; ++k) {
    const CycScalar next = translation_trace_value(W, l, omega, k + 1, exec);
    r.history.emplace_back(k + 1, next);
    if (next == current) {
      r.value = current;
      r.multiplicity = k;
      r.stable = true;
      return r;
    }
    current = next;
  }
  r.value = current;
  r.multiplicity = cap;
  return r;
}

// ---- central functions ----

CentralFunction central_function_from_invariant(const WeylGroup& W, int l, const CycChar& f,
                                                const std::vector<Weight>& domain) {
  const CyclotomicField& F = CyclotomicField::get(l);
  CentralFunction out;
  for (const Weight& lam : domain) out.values[lam] = central_character(W.datum(), f, lam, F);
  return out;
}

// ---- vanishing claim ----

CycChar stabilizer_average(const WeylGroup& W, const BlockLabel& omega, const CycChar& g) {
  CycChar out;
  for (int x : omega.stabilizer) out += g.act(W, x);
  return out;
}

int stabilizer_denominator_order(const WeylGroup& W, int l, const BlockLabel& omega) {
  const RootDatum& d = W.datum();
  JetEvaluator E(W, l, omega.omega + d.rho(), d.num_positive_roots() + 1);
  const IntChar inside = factorize_denominator<Rational>(W, omega).first;
  return E.character(inside, d.zero()).valuation();
}

VanishingReport claim_vanishing(const WeylGroup& W, int l, const BlockLabel& omega, const Weight& nu, int n,
                                const std::vector<int>& separator, const CycChar& f) {
  const RootDatum& d = W.datum();
  const CyclotomicField& F = CyclotomicField::get(l);
  const auto pt = point_coordinates(W, F, omega.omega + nu);
  const int N = std::max(d.num_positive_roots(), n) + 1;
  JetEvaluator E(W, l, omega.omega + d.rho(), N);
  const IntChar inside = factorize_denominator<Rational>(W, omega).first;

  Jet sum(N);
  for (int x : omega.stabilizer) {
    const Weight shift = W.act(x, nu);
    sum += E.power_of_translated_form(separator, pt, n, shift) * E.character(f, shift) * E.character(inside, shift);
  }
  const LaurentJet q = divide(sum, E.character(inside, d.zero()));
  VanishingReport r;
  r.omega = omega.omega;
  r.nu = nu;
  r.multiplicity = n;
  r.value = q.coefficient(0);
  r.pole = q.has_pole();
  return r;
}

CycScalar claim_vanishing_exact(const WeylGroup& W, int l, const BlockLabel& omega, const Weight& nu, int n,
                                const std::vector<int>& separator, const CycChar& f) {
  const RootDatum& d = W.datum();
  const CyclotomicField& F = CyclotomicField::get(l);
  const auto pt = point_coordinates(W, F, omega.omega + nu);
  InvariantPoly<CycScalar> p(W.rank());
  p.add_term(Monomial(W.rank()), CycScalar(1));
  const InvariantPoly<CycScalar> h = linear_poly(separator, -linear_form(separator, pt));
  for (int k = 0; k < n; ++k) p = poly_mul(p, h);
  const CycChar inside = factorize_denominator<CycScalar>(W, omega).first;
  const CycChar g = expand(W, p) * f * inside;
  CycChar sum;
  for (int x : omega.stabilizer) sum += tau_twist(d, W.act(x, nu), g, 2, F);
  return evaluate_at(d, exact_divide(sum, inside), omega.omega, 2, F);
}

}  // namespace alcove
