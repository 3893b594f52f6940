#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "polysurj/multipoly.hpp"
#include "polysurj/parser.hpp"

namespace polysurj {

/// Pinchuk's planar map and the intermediate polynomials it is built from.
struct PinchukMap {
  MultiPoly t{2}, s{2}, h{2}, f{2}, u{2}, A{2}, B{2};
  MultiPoly p{2}, q{2};

  PolyMap map() const { return PolyMap({p, q}); }
};

/// Builds the chain
///   t = xy - 1, s = 1 + x t, h = t s, f = s^2 (t^2 + y), p = h + f,
///   A = h + (13 + 15h)^3 / 45,
///   B = 4h^3 + 6h^2 + h^2/2 + (13 + 15h)^4 / 2700,
///   u = A f + B, q = -t^2 - 6 t h (h + 1) - u
/// and checks the degree table (5, 10, 10, 25) and leading terms before
/// returning. B keeps its two h^2 terms (6h^2 and h^2/2) as given. Throws
/// std::logic_error when a check fails.
PinchukMap build_pinchuk();

/// p_j = sum_i a[i][j] X_i^(2 b_j + 1): odd powers with a coefficient matrix.
/// Throws std::invalid_argument when a is not square or b has the wrong size.
PolyMap odd_power_map(const std::vector<std::vector<Rational>>& a, const std::vector<unsigned>& b);

/// (a X^(2k+1) + b Y^(2k+1), c X^(2j+1) + d Y^(2j+1)).
struct OddPairParams {
  Rational a, b, c, d;
  unsigned k = 0, j = 0;
};
PolyMap odd_pair_map(const OddPairParams& params);

/// Random nonzero rationals (numerators in [-9, 9], denominators in
/// [1, 5]) and k, j in [0, max_exponent]. With `opposite_signs` the result
/// satisfies sgn(ad) = -sgn(bc), otherwise sgn(ad) = sgn(bc).
OddPairParams random_odd_pair_params(std::mt19937_64& rng, bool opposite_signs, unsigned max_exponent = 2);

/// Adds every monomial of total degree below deg p_j to p_j with a random
/// integer coefficient in [-5, 5] (possibly zero).
PolyMap with_lower_order_noise(const PolyMap& f, std::mt19937_64& rng);

/// Named problems available to the command line.
std::vector<std::string> builtin_names();
/// Throws std::invalid_argument for an unknown name.
ProblemSpec builtin_problem(const std::string& name);

}  // namespace polysurj
