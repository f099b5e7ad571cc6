#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "gridspectra/error.hpp"
#include "gridspectra/graph.hpp"

namespace gridspectra {

/// 128-bit accumulator for exact matrix arithmetic.
using Wide = __int128;

inline Wide checked_add(Wide a, Wide b) {
  Wide r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("128-bit overflow in addition");
  return r;
}

inline Wide checked_sub(Wide a, Wide b) {
  Wide r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("128-bit overflow in subtraction");
  return r;
}

inline Wide checked_mul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("128-bit overflow in multiplication");
  return r;
}

inline std::string to_string(Wide v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  // Work on negative values so the minimum is representable.
  std::string digits;
  Wide x = neg ? v : -v;
  while (x != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(x % 10)));
    x /= 10;
  }
  if (neg) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

/// Dense square matrix of exact integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix adjacency(const Graph& g) {
    IntMatrix m(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v : g.neighbors(u)) m(u, v) = 1;
    return m;
  }

  std::size_t dim() const noexcept { return n_; }

  Wide& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  Wide operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  Wide trace() const {
    Wide acc = 0;
    for (std::size_t i = 0; i < n_; ++i) acc = checked_add(acc, (*this)(i, i));
    return acc;
  }

  /// this += c * other
  void add_scaled(const IntMatrix& other, Wide c) {
    for (std::size_t k = 0; k < data_.size(); ++k)
      data_[k] = checked_add(data_[k], checked_mul(c, other.data_[k]));
  }

  /// this += c * I
  void add_identity(Wide c) {
    for (std::size_t i = 0; i < n_; ++i) (*this)(i, i) = checked_add((*this)(i, i), c);
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Wide v) { return v == 0; });
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Wide> data_;
};

/// M * A(g), using the neighbor lists of g: (MA)_{ij} = sum over k ~ j of M_{ik}.
inline IntMatrix times_adjacency(const IntMatrix& m, const Graph& g) {
  const std::size_t n = g.order();
  if (m.dim() != n) throw InvalidParameter("matrix and graph dimensions differ");
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      Wide acc = 0;
      for (Vertex k : g.neighbors(j)) acc = checked_add(acc, m(i, k));
      out(i, j) = acc;
    }
  }
  return out;
}

/// A^r for r = 0..r_max; element r of the result is A^r.
inline std::vector<IntMatrix> adjacency_powers(const Graph& g, std::size_t r_max) {
  std::vector<IntMatrix> powers;
  powers.reserve(r_max + 1);
  powers.push_back(IntMatrix::identity(g.order()));
  for (std::size_t r = 1; r <= r_max; ++r) powers.push_back(times_adjacency(powers.back(), g));
  return powers;
}

}  // namespace gridspectra
