#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace alcove {

// Fixed-capacity integer vector. Tag makes weights and monomial exponents
// distinct types even though they share storage.
template <typename Tag, int Capacity>
class CoordVec {
 public:
  static constexpr int kCapacity = Capacity;

  CoordVec() = default;
  explicit CoordVec(int size) : size_(size) { assert(size >= 0 && size <= Capacity); }
  CoordVec(std::initializer_list<int> values) : size_(static_cast<int>(values.size())) {
    assert(size_ <= Capacity);
    std::copy(values.begin(), values.end(), data_.begin());
  }
  explicit CoordVec(std::span<const int> values) : size_(static_cast<int>(values.size())) {
    assert(size_ <= Capacity);
    std::copy(values.begin(), values.end(), data_.begin());
  }

  int size() const { return size_; }
  int& operator[](int i) { return data_[static_cast<std::size_t>(i)]; }
  int operator[](int i) const { return data_[static_cast<std::size_t>(i)]; }

  const int* begin() const { return data_.data(); }
  const int* end() const { return data_.data() + size_; }
  int* begin() { return data_.data(); }
  int* end() { return data_.data() + size_; }

  bool is_zero() const {
    return std::all_of(begin(), end(), [](int v) { return v == 0; });
  }
  int sum() const {
    int s = 0;
    for (int v : *this) s += v;
    return s;
  }

  CoordVec& operator+=(const CoordVec& o) {
    assert(size_ == o.size_);
    for (int i = 0; i < size_; ++i) data_[i] += o.data_[i];
    return *this;
  }
  CoordVec& operator-=(const CoordVec& o) {
    assert(size_ == o.size_);
    for (int i = 0; i < size_; ++i) data_[i] -= o.data_[i];
    return *this;
  }
  CoordVec& operator*=(int k) {
    for (int i = 0; i < size_; ++i) data_[i] *= k;
    return *this;
  }
  friend CoordVec operator+(CoordVec a, const CoordVec& b) { return a += b; }
  friend CoordVec operator-(CoordVec a, const CoordVec& b) { return a -= b; }
  friend CoordVec operator*(int k, CoordVec a) { return a *= k; }
  friend CoordVec operator-(CoordVec a) { return a *= -1; }

  friend bool operator==(const CoordVec& a, const CoordVec& b) {
    return a.size_ == b.size_ && std::equal(a.begin(), a.end(), b.begin());
  }
  // Plain lexicographic order; used for map keys and deterministic output.
  friend std::strong_ordering operator<=>(const CoordVec& a, const CoordVec& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
  }

  std::vector<int> to_vector() const { return {begin(), end()}; }

  std::string to_string() const {
    std::string out = "(";
    for (int i = 0; i < size_; ++i) {
      if (i) out += ",";
      out += std::to_string(data_[i]);
    }
    return out + ")";
  }

 private:
  std::array<int, Capacity> data_{};
  int size_ = 0;
};

struct WeightTag {};
struct MonomialTag {};

// Element of the weight lattice in fundamental-weight coordinates.
using Weight = CoordVec<WeightTag, 8>;
// Exponent vector of a monomial (up to eight variables plus one extra parameter).
using Monomial = CoordVec<MonomialTag, 9>;

// Graded-lexicographic comparison: total coordinate sum first, then lex.
// Translation invariant, so leading terms multiply.
template <typename Tag, int N>
bool grlex_less(const CoordVec<Tag, N>& a, const CoordVec<Tag, N>& b) {
  const int sa = a.sum(), sb = b.sum();
  if (sa != sb) return sa < sb;
  return a < b;
}

}  // namespace alcove
