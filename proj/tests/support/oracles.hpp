#pragma once

// Independent reference computations. None of these call into the library's
// root machinery; they only use UniPoly as a coefficient container.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "polysurj/unipoly.hpp"

namespace polysurj::testing {

namespace detail {

inline long double eval_ld(const std::vector<long double>& c, long double t) {
  long double acc = 0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * t + c[k];
  return acc;
}

inline std::vector<long double> derivative_ld(const std::vector<long double>& c) {
  std::vector<long double> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * static_cast<long double>(k));
  return d;
}

inline std::vector<long double> roots_ld(const std::vector<long double>& c, long double bound) {
  if (c.size() <= 1) return {};
  if (c.size() == 2) return {-c[0] / c[1]};
  // Between consecutive critical points the polynomial is monotone, so each
  // sign change on such a segment is exactly one root.
  std::vector<long double> knots{-bound};
  for (long double r : roots_ld(derivative_ld(c), bound))
    if (r > -bound && r < bound) knots.push_back(r);
  knots.push_back(bound);
  std::vector<long double> roots;
  for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
    long double a = knots[k], b = knots[k + 1];
    long double fa = eval_ld(c, a), fb = eval_ld(c, b);
    if (fa == 0) {
      if (roots.empty() || roots.back() != a) roots.push_back(a);
      continue;
    }
    if (fb == 0 || (fa < 0) == (fb < 0)) continue;
    for (int it = 0; it < 200 && b - a > 0; ++it) {
      const long double m = (a + b) / 2;
      if (m == a || m == b) break;
      const long double fm = eval_ld(c, m);
      if ((fm < 0) == (fa < 0)) {
        a = m;
        fa = fm;
      } else {
        b = m;
      }
    }
    roots.push_back((a + b) / 2);
  }
  if (eval_ld(c, bound) == 0) roots.push_back(bound);
  return roots;
}

}  // namespace detail

/// Real roots of p by recursive monotone-segment bisection in long double,
/// sorted increasingly. Meant for squarefree p with small integer
/// coefficients, where roots are well separated.
inline std::vector<double> float_real_roots(const UniPoly& p) {
  std::vector<long double> c;
  for (const auto& v : p.coeffs()) c.push_back(static_cast<long double>(v.get_d()));
  long double bound = 1;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) bound = std::max(bound, 1 + std::fabs(c[k] / c.back()));
  bound += 1;
  std::vector<double> out;
  for (long double r : detail::roots_ld(c, bound)) out.push_back(static_cast<double>(r));
  std::sort(out.begin(), out.end());
  return out;
}

/// Resultant by the Euclidean recurrence
///   res(A, B) = (-1)^(deg A deg B) lc(B)^(deg A - deg R) res(B, R),  R = A mod B,
/// with res(A, c) = c^(deg A) for a constant c. Exact.
inline Rational euclid_resultant(UniPoly a, UniPoly b) {
  Rational scale = 1;
  for (;;) {
    if (a.is_zero() || b.is_zero()) return 0;
    const std::size_t m = a.size() - 1, n = b.size() - 1;
    if (n == 0) {
      Rational r = scale;
      for (std::size_t k = 0; k < m; ++k) r *= b.leading();
      return r;
    }
    if (m == 0) {
      Rational r = scale;
      for (std::size_t k = 0; k < n; ++k) r *= a.leading();
      return r;
    }
    UniPoly rem = divrem(a, b).second;
    if (rem.is_zero()) return 0;
    const std::size_t dr = rem.size() - 1;
    if ((m * n) % 2 == 1) scale = -scale;
    for (std::size_t k = 0; k < m - dr; ++k) scale *= b.leading();
    a = std::move(b);
    b = std::move(rem);
  }
}

}  // namespace polysurj::testing
