#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "polysurj/multipoly.hpp"
#include "polysurj/rational.hpp"

namespace polysurj {

/// Dense univariate polynomial over the rationals, lowest degree first.
/// The leading stored coefficient is nonzero; zero has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  /// c * t^k
  static UniPoly monomial(const Rational& c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Degree degree() const;
  /// Number of stored coefficients (degree + 1, or 0).
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  /// Requires a nonzero polynomial.
  const Rational& leading() const;

  Rational evaluate(const Rational& t) const;
  int sign_at(const Rational& t) const { return sgn(evaluate(t)); }

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  /// Exact division; throws std::domain_error when the remainder is nonzero.
  friend UniPoly operator/(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);

UniPoly derivative(const UniPoly& p);
/// Leading coefficient 1 (zero stays zero).
UniPoly monic(const UniPoly& p);
/// Positive rational multiple with coprime integer coefficients.
UniPoly primitive_part(const UniPoly& p);
/// p / gcd(p, p'), made primitive. Zero stays zero.
UniPoly squarefree_part(const UniPoly& p);

/// p(t + shift)
UniPoly taylor_shift(const UniPoly& p, const Rational& shift);

std::string render(const UniPoly& p, std::string_view var = "t");

/// Univariate view of a one-variable MultiPoly.
UniPoly to_unipoly(const MultiPoly& p);

/// F(X, 1) for a polynomial in two variables.
UniPoly dehomogenize_binary(const MultiPoly& f);

/// Coefficients of p viewed as a polynomial in variable `var` (zero-based)
/// of a two-variable ring; entry k is the coefficient of var^k, a
/// univariate polynomial in the other variable.
std::vector<UniPoly> coefficients_in(const MultiPoly& p, std::size_t var);

/// Embeds a univariate polynomial as a polynomial in variable `var` of a
/// ring with `nvars` variables.
MultiPoly to_multipoly(const UniPoly& p, std::size_t nvars, std::size_t var);

}  // namespace polysurj
