#pragma once

// Fraction-free (Bareiss) determinant and Sylvester matrix construction,
// shared by the univariate resultant and bivariate elimination.

#include <cstddef>
#include <utility>
#include <vector>

#include "polysurj/rational.hpp"
#include "polysurj/unipoly.hpp"

namespace polysurj::detail {

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const UniPoly& x) { return x.is_zero(); }

/// Every division performed is exact in the coefficient ring, so T only
/// needs exact division (Rational, or UniPoly over the rationals).
template <typename T>
T bareiss_determinant(std::vector<std::vector<T>> a, const T& one) {
  const std::size_t n = a.size();
  if (n == 0) return one;
  T prev = one;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a[k][k])) {
      std::size_t r = k + 1;
      while (r < n && is_zero(a[r][k])) ++r;
      if (r == n) return T();
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = t / prev;
      }
      a[i][k] = T();
    }
    prev = a[k][k];
  }
  T det = a[n - 1][n - 1];
  return negate ? T(-det) : det;
}

/// Sylvester matrix of two polynomials given by coefficient lists, highest
/// degree first (p has degree m = p.size() - 1, q degree n = q.size() - 1).
template <typename T>
std::vector<std::vector<T>> sylvester_matrix(const std::vector<T>& p_desc, const std::vector<T>& q_desc) {
  const std::size_t m = p_desc.size() - 1;
  const std::size_t n = q_desc.size() - 1;
  const std::size_t size = m + n;
  std::vector<std::vector<T>> s(size, std::vector<T>(size));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = p_desc[k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = q_desc[k];
  return s;
}

}  // namespace polysurj::detail
