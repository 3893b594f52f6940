#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polysurj/multipoly.hpp"
#include "polysurj/systems.hpp"
#include "polysurj/unipoly.hpp"

namespace polysurj {

// ---------------------------------------------------------------------------
// Univariate real roots

/// Sturm chain of a squarefree polynomial; each member is scaled by a
/// positive constant to keep coefficients integral and small.
class SturmChain {
 public:
  explicit SturmChain(const UniPoly& squarefree);

  /// Sign variations at a finite point (zeros skipped).
  std::size_t variations_at(const Rational& t) const;
  std::size_t variations_at_pos_infinity() const;
  std::size_t variations_at_neg_infinity() const;

  const std::vector<UniPoly>& chain() const { return chain_; }

 private:
  std::vector<UniPoly> chain_;
};

/// Number of distinct real roots in (lo, hi]; nullopt bounds mean -inf
/// and +inf. Throws std::invalid_argument for the zero polynomial. The
/// squarefree part is taken internally.
std::size_t sturm_count(const UniPoly& p, const std::optional<Rational>& lo,
                        const std::optional<Rational>& hi);

/// A closed interval containing exactly one real root of a polynomial.
struct Isolation {
  Rational lo;
  Rational hi;
  std::optional<Rational> exact_root;  // when present lo == hi == *exact_root

  bool is_exact() const { return exact_root.has_value(); }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& t) const { return lo <= t && t <= hi; }
};

/// Isolates every real root of the squarefree part of p, in increasing
/// order. Roots hit exactly by a split point are reported exactly.
std::vector<Isolation> isolate_real_roots(const UniPoly& p);

/// Halves (roughly) the interval; `squarefree` must be the squarefree
/// polynomial the isolation was computed for.
void refine(Isolation& iso, const UniPoly& squarefree);
void refine_to_width(Isolation& iso, const UniPoly& squarefree, const Rational& width);

/// The root itself when it is rational; refines `iso` as needed.
std::optional<Rational> exact_rational_root(const UniPoly& squarefree, Isolation& iso);

/// Monic gcd. Throws std::invalid_argument when both are zero.
UniPoly gcd_univariate(const UniPoly& p, const UniPoly& q);

/// Determinant of the Sylvester matrix (fraction-free elimination).
/// Throws std::invalid_argument when either input is zero.
Rational sylvester_resultant(const UniPoly& p, const UniPoly& q);

// ---------------------------------------------------------------------------
// Only-zero-solution decisions for homogeneous systems

/// Projective point (xi : 1) in two variables, xi a root of `defining`.
struct AlgebraicPoint {
  UniPoly defining;                     // squarefree
  std::optional<Isolation> isolation;   // present when xi is real
};

struct ZeroSolutionVerdict {
  enum class Status { OnlyZero, NonzeroWitness, Inconclusive };
  enum class Field { Real, Complex };

  Status status = Status::Inconclusive;
  Field field = Field::Real;
  /// Exact nonzero rational common zero (primitive integer vector whose
  /// first nonzero entry is positive). Empty when the witness is algebraic.
  std::vector<Rational> point;
  std::optional<AlgebraicPoint> algebraic;
  std::string reason;

  bool only_zero() const { return status == Status::OnlyZero; }
  bool has_witness() const { return status == Status::NonzeroWitness; }
  bool inconclusive() const { return status == Status::Inconclusive; }
};

std::string to_string(ZeroSolutionVerdict::Status s);
std::string to_string(ZeroSolutionVerdict::Field f);

/// Real projective zeros of a single binary form. Throws
/// std::invalid_argument when f is not homogeneous in two variables.
ZeroSolutionVerdict binary_form_real_projective_zero(const MultiPoly& f);

/// Does the homogeneous system have a nonzero real solution? Exact for one
/// or two variables; for three or more only a witness search is done and
/// the answer is NonzeroWitness or Inconclusive.
ZeroSolutionVerdict real_only_zero(const HomogSystem& sys);

/// Same question over the complex numbers; exact for one or two variables,
/// Inconclusive otherwise.
ZeroSolutionVerdict complex_only_zero(const HomogSystem& sys);

/// Options for the rational witness search used when nvars >= 3.
struct WitnessSearchOptions {
  long max_denominator = 8;
  std::size_t max_grid_points = 2'000'000;
  std::size_t descent_starts = 16;
  long reconstruction_denominator = 1000;
};

/// Searches for an exact rational nonzero common zero of homogeneous forms.
/// Grid points on the faces |x_k| = 1 are visited in a fixed order, then a
/// damped Gauss-Newton descent from the best grid points is tried; every
/// candidate is accepted only after exact re-evaluation.
std::optional<std::vector<Rational>> search_rational_witness(
    const std::vector<MultiPoly>& forms, std::size_t nvars, const WitnessSearchOptions& opts = {});

/// Scales a nonzero rational vector to a primitive integer vector with a
/// positive first nonzero entry.
std::vector<Rational> normalize_projective(std::vector<Rational> point);

}  // namespace polysurj
