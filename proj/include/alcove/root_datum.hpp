#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alcove/coords.hpp"
#include "alcove/rational.hpp"

namespace alcove {

// Square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n * n), 0) {}
  static IntMatrix identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  int size() const { return n_; }
  int& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  int operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    IntMatrix z(x.n_);
    for (int i = 0; i < x.n_; ++i)
      for (int k = 0; k < x.n_; ++k) {
        const int v = x(i, k);
        if (v == 0) continue;
        for (int j = 0; j < x.n_; ++j) z(i, j) += v * y(k, j);
      }
    return z;
  }
  Weight apply(const Weight& v) const {
    Weight out(n_);
    for (int i = 0; i < n_; ++i) {
      int s = 0;
      for (int j = 0; j < n_; ++j) s += (*this)(i, j) * v[j];
      out[i] = s;
    }
    return out;
  }
  long long determinant() const;

 private:
  int n_ = 0;
  std::vector<int> a_;
};

// A positive root with its coordinates in the three bases we need.
struct PositiveRoot {
  Weight weight;        // fundamental-weight coordinates
  Weight root_coeffs;   // coefficients in the simple roots
  Weight coroot_coeffs; // coefficients of the coroot in the simple coroots
  int half_norm = 1;    // (alpha, alpha) / 2
  int height = 1;
};

// Simply-connected irreducible root datum. Immutable after construction.
//
// Conventions: cartan(i, j) = <coroot_i, root_j>; weights are stored in the
// fundamental-weight basis, so <coroot_i, lambda> is the i-th coordinate.
class RootDatum {
 public:
  static RootDatum build(char series, int rank);
  // Parses strings such as "A2" or "g2".
  static RootDatum parse(const std::string& type);

  char series() const { return series_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, series_) + std::to_string(rank_); }
  const IntMatrix& cartan() const { return cartan_; }
  const std::vector<int>& symmetrizers() const { return sym_; }
  const std::vector<PositiveRoot>& positive_roots() const { return roots_; }
  int num_positive_roots() const { return static_cast<int>(roots_.size()); }
  const Weight& rho() const { return rho_; }
  int coxeter_number() const { return coxeter_; }
  // e = |Lambda / Q| = det(cartan).
  int pi1_order() const { return pi1_; }
  const std::vector<int>& exponents() const { return exponents_; }
  // |W| = prod (m_i + 1).
  long long weyl_order() const;

  Weight zero() const { return Weight(rank_); }
  Weight fundamental_weight(int i) const;
  const Weight& simple_root(int i) const { return simple_roots_[static_cast<std::size_t>(i)]; }
  // Highest short root; its coroot is the highest coroot and cuts out the
  // upper wall of the fundamental alcove.
  const PositiveRoot& highest_short_root() const { return roots_[static_cast<std::size_t>(highest_short_)]; }
  // Index of a positive root given in fundamental coordinates, or -1.
  int positive_root_index(const Weight& w) const;

  // e * (lambda, mu); always an integer.
  int scaled_pairing(const Weight& lambda, const Weight& mu) const;
  Rational pairing(const Weight& lambda, const Weight& mu) const;
  // <coroot_i, lambda>.
  int coroot_pairing(int i, const Weight& lambda) const;
  // <gamma^vee, lambda> for an arbitrary root gamma (given in fundamental
  // coordinates). Throws NotACoroot if gamma is not a root.
  int coroot_pairing(const Weight& gamma, const Weight& lambda) const;
  int coroot_pairing(const PositiveRoot& gamma, const Weight& lambda) const;

  // Coordinates of lambda in the simple-root basis (rational in general).
  std::vector<Rational> root_coordinates(const Weight& lambda) const;
  // Integral simple-root coordinates if lambda lies in Q.
  std::optional<Weight> root_lattice_coordinates(const Weight& lambda) const;
  bool in_root_lattice(const Weight& lambda) const { return root_lattice_coordinates(lambda).has_value(); }
  // Converts simple-root coefficients to fundamental coordinates.
  Weight from_root_coordinates(const Weight& coeffs) const;
  // e * height(lambda), an integer linear functional positive on every positive root.
  int scaled_height(const Weight& lambda) const;

  // lambda <= mu iff mu - lambda is a non-negative integral combination of simple roots.
  bool dominance_leq(const Weight& lambda, const Weight& mu) const;
  bool is_dominant(const Weight& lambda) const;
  // True iff <lambda, gamma^vee> != 0 for every root gamma.
  bool is_regular(const Weight& lambda) const;

  // lambda = restricted + l * quotient with 0 <= <restricted, coroot_i> < l.
  std::pair<Weight, Weight> l_restricted_decompose(const Weight& lambda, int l) const;
  // l odd, l >= h, gcd(l, e) = 1, and gcd(l, 3) = 1 for G2.
  bool validate_l(int l) const;

 private:
  RootDatum() = default;
  void finish();

  char series_ = 'A';
  int rank_ = 0;
  IntMatrix cartan_;
  IntMatrix adjugate_;  // e * cartan^{-1}, integral
  std::vector<int> sym_;
  std::vector<Weight> simple_roots_;
  std::vector<PositiveRoot> roots_;
  Weight rho_;
  int coxeter_ = 0;
  int pi1_ = 1;
  std::vector<int> exponents_;
  int highest_short_ = 0;
  IntMatrix gram_;  // e * (varpi_i, varpi_j)
};

}  // namespace alcove
