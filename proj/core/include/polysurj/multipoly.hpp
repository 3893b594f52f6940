#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polysurj/rational.hpp"

namespace polysurj {

/// Exponent vector of a monomial; its length is the ring's variable count.
using Monomial = std::vector<std::uint32_t>;

std::uint64_t monomial_degree(const Monomial& m);

/// Graded-lexicographic order, largest first: higher total degree wins,
/// ties broken lexicographically with x1 > x2 > ...
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Total degree with the convention deg 0 = -infinity. The sentinel is a
/// distinct state, never a negative integer.
class Degree {
 public:
  constexpr Degree() = default;  // -infinity
  constexpr explicit Degree(std::int64_t value) : value_(value), finite_(true) {}

  static constexpr Degree neg_infinity() { return Degree(); }

  constexpr bool is_neg_infinity() const { return !finite_; }
  constexpr bool is_finite() const { return finite_; }
  /// Throws std::logic_error on -infinity.
  std::int64_t value() const;
  bool is_odd() const { return finite_ && (value_ % 2 != 0); }

  friend constexpr bool operator==(const Degree& a, const Degree& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const Degree& a,
                                                    const Degree& b) {
    if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
    return a.value_ <=> b.value_;
  }
  /// -infinity absorbs.
  friend Degree operator+(const Degree& a, const Degree& b);
  /// k * deg for a positive integer k.
  friend Degree operator*(std::int64_t k, const Degree& d);

  std::string to_string() const;

 private:
  std::int64_t value_ = 0;
  bool finite_ = false;
};

/// Sparse multivariate polynomial over the rationals. Terms are kept in
/// graded-lex order (largest first) and no stored coefficient is zero.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexGreater>;

  /// The zero polynomial in `nvars` variables.
  explicit MultiPoly(std::size_t nvars);

  static MultiPoly constant(std::size_t nvars, const Rational& c);
  /// X_{index+1}; index is zero-based.
  static MultiPoly variable(std::size_t nvars, std::size_t index);
  static MultiPoly term(Monomial exponents, const Rational& c);
  /// Sums the given terms; duplicate monomials are combined.
  static MultiPoly from_terms(std::size_t nvars,
                              std::span<const std::pair<Monomial, Rational>> terms);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the given monomial (zero when absent).
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  /// Largest term in graded-lex order. Requires a nonzero polynomial.
  const std::pair<const Monomial, Rational>& leading_term() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void add_term(const Monomial& m, const Rational& c);
  void check_same_ring(const MultiPoly& other) const;

  std::size_t nvars_;
  TermMap terms_;
};

// Free-function spellings of the ring operations.
MultiPoly add(const MultiPoly& p, const MultiPoly& q);
MultiPoly multiply(const MultiPoly& p, const MultiPoly& q);
/// Repeated squaring; power(p, 0) = 1.
MultiPoly power(const MultiPoly& p, unsigned k);

Degree total_degree(const MultiPoly& p);
/// Highest exponent of one variable (zero-based index); -infinity for 0.
Degree degree_in(const MultiPoly& p, std::size_t var);

/// Sum of the terms of maximal total degree; zero maps to zero.
MultiPoly leading_form(const MultiPoly& p);

/// True when every term has the same total degree (zero is homogeneous).
bool is_homogeneous(const MultiPoly& p);

/// d/dX_{var+1}. Throws std::out_of_range for a bad index.
MultiPoly partial_derivative(const MultiPoly& p, std::size_t var);

/// p(images[0], ..., images[n-1]). All images must share one ring.
MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> images);

/// Exact value at a rational point.
Rational evaluate(const MultiPoly& p, std::span<const Rational> point);

/// Embeds p into a ring with more variables (new variables appended).
MultiPoly extend_variables(const MultiPoly& p, std::size_t nvars);

/// Square polynomial map (p_1, ..., p_n) in n variables.
class PolyMap {
 public:
  /// Throws std::invalid_argument unless components.size() == nvars and
  /// every component lives in nvars variables.
  explicit PolyMap(std::vector<MultiPoly> components);

  std::size_t nvars() const { return components_.size(); }
  std::size_t size() const { return components_.size(); }
  const MultiPoly& operator[](std::size_t j) const { return components_[j]; }
  const std::vector<MultiPoly>& components() const { return components_; }

  friend bool operator==(const PolyMap&, const PolyMap&) = default;

 private:
  std::vector<MultiPoly> components_;
};

/// Row-major square matrix of polynomials.
using PolyMatrix = std::vector<std::vector<MultiPoly>>;

PolyMatrix identity_matrix(std::size_t n);

/// Entry (i, j) is dp_j/dX_i, the orientation used when the Jacobian
/// serves as a coefficient matrix for combined systems. The determinant
/// is the usual Jacobian determinant.
PolyMatrix jacobian_matrix(const PolyMap& f);

/// Exact determinant by cofactor expansion. Throws std::invalid_argument
/// for a non-square or empty matrix.
MultiPoly determinant(const PolyMatrix& m);

MultiPoly jacobian_determinant(const PolyMap& f);

}  // namespace polysurj
