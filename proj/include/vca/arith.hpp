#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "vca/error.hpp"

namespace vca {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

template <typename T>
using Matrix = std::vector<std::vector<T>>;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("64-bit overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("64-bit overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit overflow in multiplication");
  return r;
}

inline Int to_int(const BigInt& v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
    throw OverflowError("value does not fit in 64 bits");
  return static_cast<Int>(v);
}

inline Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

namespace detail {

inline Int ring_mul(Int a, Int b) { return checked_mul(a, b); }
inline Int ring_sub(Int a, Int b) { return checked_sub(a, b); }
inline BigInt ring_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt ring_sub(const BigInt& a, const BigInt& b) { return a - b; }

// Fraction-free Gaussian elimination (Bareiss); every division is exact.
template <typename T>
T bareiss_determinant(Matrix<T> m) {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  T sign(1);
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return T(0);
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = ring_sub(ring_mul(m[i][j], m[k][k]), ring_mul(m[i][k], m[k][j])) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace detail

// Exact determinant. Runs in 64-bit arithmetic and restarts with
// arbitrary precision as soon as an intermediate overflows.
inline BigInt determinant(const Matrix<Int>& m) {
  try {
    return BigInt(detail::bareiss_determinant(m));
  } catch (const OverflowError&) {
    Matrix<BigInt> big(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) big[i].assign(m[i].begin(), m[i].end());
    return detail::bareiss_determinant(std::move(big));
  }
}

// Rank over the rationals.
inline std::size_t rank(Matrix<BigInt> m) {
  std::size_t rows = m.size();
  if (rows == 0) return 0;
  std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      BigInt f = m[i][c];
      BigInt g = m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] * g - m[r][j] * f;
    }
    ++r;
  }
  return r;
}

inline std::size_t rank(const Matrix<Int>& m) {
  Matrix<BigInt> big(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) big[i].assign(m[i].begin(), m[i].end());
  return rank(std::move(big));
}

// Divides by the gcd of the entries; the zero vector is returned unchanged.
inline void make_primitive(std::vector<BigInt>& v) {
  BigInt g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
}

inline void make_primitive(std::vector<Int>& v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
}

// Generalized cross product of d-1 vectors in dimension d: the vector c with
// c . v = det[rows; v] for every v.
inline std::vector<Int> cross_product(const Matrix<Int>& rows) {
  const std::size_t d = rows.size() + 1;
  std::vector<Int> c(d);
  Matrix<Int> minor(d - 1, std::vector<Int>(d - 1));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t r = 0; r + 1 < d; ++r) {
      for (std::size_t col = 0, t = 0; col < d; ++col) {
        if (col == i) continue;
        minor[r][t++] = rows[r][col];
      }
    }
    BigInt m = determinant(minor);
    // cofactor of entry (d-1, i) in the d x d matrix [rows; v]
    if ((d - 1 + i) % 2 == 1) m = -m;
    c[i] = to_int(m);
  }
  return c;
}

}  // namespace vca
