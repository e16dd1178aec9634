#include "alcove/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "alcove/errors.hpp"

namespace alcove {

long long IntMatrix::determinant() const {
  // Bareiss fraction-free elimination.
  const int n = n_;
  std::vector<long long> m(a_.begin(), a_.end());
  auto at = [&](int i, int j) -> long long& { return m[static_cast<std::size_t>(i * n + j)]; };
  long long sign = 1, prev = 1;
  for (int k = 0; k < n; ++k) {
    if (at(k, k) == 0) {
      int p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

namespace {

IntMatrix chain(int n) {
  IntMatrix a(n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = 2;
    if (i + 1 < n) a(i, i + 1) = a(i + 1, i) = -1;
  }
  return a;
}

void link(IntMatrix& a, int i, int j) { a(i, j) = a(j, i) = -1; }

struct CartanData {
  IntMatrix cartan;
  std::vector<int> sym;
  std::vector<int> exponents;
};

CartanData cartan_data(char series, int n) {
  CartanData d;
  switch (series) {
    case 'A':
      if (n < 1) break;
      d.cartan = chain(n);
      d.sym.assign(n, 1);
      for (int i = 1; i <= n; ++i) d.exponents.push_back(i);
      return d;
    case 'B':
      if (n < 2) break;
      d.cartan = chain(n);
      d.cartan(n - 1, n - 2) = -2;  // alpha_n short
      d.sym.assign(n, 2);
      d.sym[n - 1] = 1;
      for (int i = 1; i <= n; ++i) d.exponents.push_back(2 * i - 1);
      return d;
    case 'C':
      if (n < 2) break;
      d.cartan = chain(n);
      d.cartan(n - 2, n - 1) = -2;  // alpha_n long
      d.sym.assign(n, 1);
      d.sym[n - 1] = 2;
      for (int i = 1; i <= n; ++i) d.exponents.push_back(2 * i - 1);
      return d;
    case 'D':
      if (n < 4) break;
      d.cartan = chain(n);
      d.cartan(n - 2, n - 1) = d.cartan(n - 1, n - 2) = 0;
      link(d.cartan, n - 3, n - 1);
      d.sym.assign(n, 1);
      for (int i = 1; i < n; ++i) d.exponents.push_back(2 * i - 1);
      d.exponents.push_back(n - 1);
      std::sort(d.exponents.begin(), d.exponents.end());
      return d;
    case 'E': {
      if (n < 6 || n > 8) break;
      // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
      d.cartan = IntMatrix(n);
      for (int i = 0; i < n; ++i) d.cartan(i, i) = 2;
      link(d.cartan, 0, 2);
      link(d.cartan, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(d.cartan, i, i + 1);
      d.sym.assign(n, 1);
      if (n == 6) d.exponents = {1, 4, 5, 7, 8, 11};
      if (n == 7) d.exponents = {1, 5, 7, 9, 11, 13, 17};
      if (n == 8) d.exponents = {1, 7, 11, 13, 17, 19, 23, 29};
      return d;
    }
    case 'F':
      if (n != 4) break;
      d.cartan = chain(4);
      d.cartan(2, 1) = -2;  // alpha_2 long, alpha_3 short
      d.sym = {2, 2, 1, 1};
      d.exponents = {1, 5, 7, 11};
      return d;
    case 'G':
      if (n != 2) break;
      d.cartan = chain(2);
      d.cartan(0, 1) = -3;  // alpha_1 short, alpha_2 long
      d.sym = {1, 3};
      d.exponents = {1, 5};
      return d;
    default:
      break;
  }
  throw InvalidType(std::string(1, series) + std::to_string(n));
}

}  // namespace

RootDatum RootDatum::build(char series, int rank) {
  series = static_cast<char>(std::toupper(static_cast<unsigned char>(series)));
  CartanData data = cartan_data(series, rank);
  RootDatum d;
  d.series_ = series;
  d.rank_ = rank;
  d.cartan_ = std::move(data.cartan);
  d.sym_ = std::move(data.sym);
  d.exponents_ = std::move(data.exponents);
  d.finish();
  return d;
}

RootDatum RootDatum::parse(const std::string& type) {
  if (type.size() < 2 || !std::isalpha(static_cast<unsigned char>(type[0])))
    throw InvalidType("cannot parse type '" + type + "'");
  int rank = 0;
  for (std::size_t i = 1; i < type.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(type[i]))) throw InvalidType("cannot parse type '" + type + "'");
    rank = rank * 10 + (type[i] - '0');
    if (rank > 64) throw InvalidType("rank too large in '" + type + "'");
  }
  return build(type[0], rank);
}

void RootDatum::finish() {
  const int n = rank_;
  pi1_ = static_cast<int>(cartan_.determinant());

  // adjugate = det * inverse, computed with exact rationals.
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = cartan_(i, j);
    aug[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (is_zero(aug[p][c])) ++p;
    std::swap(aug[p], aug[c]);
    const Rational piv = aug[c][c];
    for (auto& v : aug[c]) v /= piv;
    for (int r = 0; r < n; ++r) {
      if (r == c || is_zero(aug[r][c])) continue;
      const Rational f = aug[r][c];
      for (int j = 0; j < 2 * n; ++j) aug[r][j] -= f * aug[c][j];
    }
  }
  adjugate_ = IntMatrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational v = aug[i][n + j] * pi1_;
      adjugate_(i, j) = static_cast<int>(v.get_num().get_si());
    }

  gram_ = IntMatrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram_(i, j) = sym_[i] * adjugate_(i, j);

  simple_roots_.clear();
  for (int j = 0; j < n; ++j) {
    Weight a(n);
    for (int i = 0; i < n; ++i) a[i] = cartan_(i, j);
    simple_roots_.push_back(a);
  }

  // Positive roots by closure under root strings, layer by layer in height.
  std::set<Weight> known;
  std::vector<Weight> layer;
  std::vector<Weight> all;
  for (int i = 0; i < n; ++i) {
    Weight c(n);
    c[i] = 1;
    layer.push_back(c);
    known.insert(c);
  }
  while (!layer.empty()) {
    all.insert(all.end(), layer.begin(), layer.end());
    std::vector<Weight> next;
    for (const Weight& beta : layer) {
      for (int i = 0; i < n; ++i) {
        Weight unit(n);
        unit[i] = 1;
        if (beta == unit) continue;
        int p = 0;
        Weight down = beta - unit;
        while (known.count(down)) {
          ++p;
          down -= unit;
        }
        int pairing = 0;  // <beta, coroot_i>
        for (int j = 0; j < n; ++j) pairing += beta[j] * cartan_(i, j);
        if (p - pairing > 0) {
          Weight up = beta + unit;
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
  }

  roots_.clear();
  for (const Weight& c : all) {
    PositiveRoot r;
    r.root_coeffs = c;
    r.weight = from_root_coordinates(c);
    r.height = c.sum();
    int norm2 = 0;  // (gamma, gamma) = sum c_i c_j d_i a_ij
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) norm2 += c[i] * c[j] * sym_[i] * cartan_(i, j);
    r.half_norm = norm2 / 2;
    r.coroot_coeffs = Weight(n);
    for (int i = 0; i < n; ++i) r.coroot_coeffs[i] = c[i] * sym_[i] / r.half_norm;
    roots_.push_back(r);
  }
  std::stable_sort(roots_.begin(), roots_.end(),
                   [](const PositiveRoot& a, const PositiveRoot& b) { return a.height < b.height; });

  const int min_norm = std::min_element(roots_.begin(), roots_.end(), [](const auto& a, const auto& b) {
                         return a.half_norm < b.half_norm;
                       })->half_norm;
  highest_short_ = 0;
  for (int k = 0; k < static_cast<int>(roots_.size()); ++k)
    if (roots_[k].half_norm == min_norm && roots_[k].height >= roots_[highest_short_].height) highest_short_ = k;

  rho_ = Weight(n);
  for (int i = 0; i < n; ++i) rho_[i] = 1;
  coxeter_ = 2 * static_cast<int>(roots_.size()) / n;
}

long long RootDatum::weyl_order() const {
  long long w = 1;
  for (int m : exponents_) w *= (m + 1);
  return w;
}

Weight RootDatum::fundamental_weight(int i) const {
  Weight w(rank_);
  w[i] = 1;
  return w;
}

int RootDatum::positive_root_index(const Weight& w) const {
  for (int k = 0; k < static_cast<int>(roots_.size()); ++k)
    if (roots_[k].weight == w) return k;
  return -1;
}

int RootDatum::scaled_pairing(const Weight& lambda, const Weight& mu) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (lambda[i] == 0) continue;
    int row = 0;
    for (int j = 0; j < rank_; ++j) row += gram_(i, j) * mu[j];
    s += lambda[i] * row;
  }
  return s;
}

Rational RootDatum::pairing(const Weight& lambda, const Weight& mu) const {
  Rational r(scaled_pairing(lambda, mu), pi1_);
  r.canonicalize();
  return r;
}

int RootDatum::coroot_pairing(int i, const Weight& lambda) const { return lambda[i]; }

int RootDatum::coroot_pairing(const PositiveRoot& gamma, const Weight& lambda) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i) s += gamma.coroot_coeffs[i] * lambda[i];
  return s;
}

int RootDatum::coroot_pairing(const Weight& gamma, const Weight& lambda) const {
  int k = positive_root_index(gamma);
  if (k >= 0) return coroot_pairing(roots_[k], lambda);
  k = positive_root_index(-gamma);
  if (k >= 0) return -coroot_pairing(roots_[k], lambda);
  throw NotACoroot(gamma.to_string() + " is not a root of " + name());
}

std::vector<Rational> RootDatum::root_coordinates(const Weight& lambda) const {
  std::vector<Rational> out(rank_);
  for (int i = 0; i < rank_; ++i) {
    long long s = 0;
    for (int j = 0; j < rank_; ++j) s += static_cast<long long>(adjugate_(i, j)) * lambda[j];
    out[i] = Rational(static_cast<long>(s), pi1_);
    out[i].canonicalize();
  }
  return out;
}

std::optional<Weight> RootDatum::root_lattice_coordinates(const Weight& lambda) const {
  Weight c(rank_);
  for (int i = 0; i < rank_; ++i) {
    long long s = 0;
    for (int j = 0; j < rank_; ++j) s += static_cast<long long>(adjugate_(i, j)) * lambda[j];
    if (s % pi1_ != 0) return std::nullopt;
    c[i] = static_cast<int>(s / pi1_);
  }
  return c;
}

Weight RootDatum::from_root_coordinates(const Weight& coeffs) const {
  Weight w(rank_);
  for (int i = 0; i < rank_; ++i) {
    int s = 0;
    for (int j = 0; j < rank_; ++j) s += cartan_(i, j) * coeffs[j];
    w[i] = s;
  }
  return w;
}

int RootDatum::scaled_height(const Weight& lambda) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += adjugate_(i, j) * lambda[j];
  return s;
}

bool RootDatum::dominance_leq(const Weight& lambda, const Weight& mu) const {
  auto c = root_lattice_coordinates(mu - lambda);
  if (!c) return false;
  return std::all_of(c->begin(), c->end(), [](int v) { return v >= 0; });
}

bool RootDatum::is_dominant(const Weight& lambda) const {
  return std::all_of(lambda.begin(), lambda.end(), [](int v) { return v >= 0; });
}

bool RootDatum::is_regular(const Weight& lambda) const {
  return std::all_of(roots_.begin(), roots_.end(),
                     [&](const PositiveRoot& g) { return coroot_pairing(g, lambda) != 0; });
}

std::pair<Weight, Weight> RootDatum::l_restricted_decompose(const Weight& lambda, int l) const {
  Weight r(rank_), q(rank_);
  for (int i = 0; i < rank_; ++i) {
    int quot = lambda[i] / l, rem = lambda[i] % l;
    if (rem < 0) {
      rem += l;
      --quot;
    }
    r[i] = rem;
    q[i] = quot;
  }
  return {r, q};
}

bool RootDatum::validate_l(int l) const {
  if (l <= 0 || l % 2 == 0) return false;
  if (l < coxeter_) return false;
  if (std::gcd(l, pi1_) != 1) return false;
  if (series_ == 'G' && l % 3 == 0) return false;
  return true;
}

}  // namespace alcove
