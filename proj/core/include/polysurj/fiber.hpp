#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "polysurj/multipoly.hpp"
#include "polysurj/realalg.hpp"
#include "polysurj/unipoly.hpp"

namespace polysurj {

/// Resultant of p and q with respect to variable `var` (0 = x, 1 = y) of a
/// two-variable ring, as a polynomial in the other variable. Identically
/// zero exactly when p and q share a factor of positive degree in `var`.
/// Throws std::invalid_argument unless both are nonzero and bivariate.
UniPoly eliminate(const MultiPoly& p, const MultiPoly& q, std::size_t var);

/// Closed box containing exactly one real solution.
struct SolutionBox {
  Isolation x;
  Isolation y;
};

struct FiberReport {
  enum class Status { Finite, InfiniteOverC, Empty };
  enum class Parity { Odd, Even, NotApplicable };

  std::vector<Rational> target;
  Status status = Status::Empty;
  /// Sorted by lower-left corner; pairwise disjoint.
  std::vector<SolutionBox> points;
  Parity parity = Parity::Even;
  /// deg p * deg q; zero when a component is constant.
  Integer bezout = 0;

  std::size_t count() const { return points.size(); }
};

std::string to_string(FiberReport::Status s);
std::string to_string(FiberReport::Parity p);

struct FiberOptions {
  /// Bisections allowed per coordinate of a candidate box before giving up.
  unsigned max_bisections = 64;
};

/// Thrown when a candidate box can be neither confirmed nor excluded within
/// the refinement budget (for instance at a singular solution).
class FiberRefinementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All real solutions of f = target for a map of the plane. Throws
/// std::invalid_argument when f does not have two variables or the target
/// does not have two entries.
FiberReport solve_fiber(const PolyMap& f, const std::vector<Rational>& target, const FiberOptions& opts = {});

}  // namespace polysurj
