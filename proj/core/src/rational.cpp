#include "polysurj/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace polysurj {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::string s(text);
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  auto slash = s.find('/');
  auto digits_ok = [&](std::size_t b, std::size_t e) {
    if (b >= e) return false;
    for (std::size_t i = b; i < e; ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  std::size_t num_end = slash == std::string::npos ? s.size() : slash;
  if (!digits_ok(start, num_end) ||
      (slash != std::string::npos && !digits_ok(slash + 1, s.size())))
    throw std::invalid_argument("malformed rational literal: " + s);
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (slash == std::string::npos) {
    q = Rational(Integer(s));
  } else {
    Integer den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    q = Rational(Integer(s.substr(0, slash)), den);
  }
  q.canonicalize();
  return q;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return r;
}

namespace {

// Stern-Brocot descent for 0 <= lo <= hi.
Rational simplest_nonneg(const Rational& lo, const Rational& hi) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl) == lo) return lo;
  // lo is not an integer, so the smallest integer >= lo is fl + 1.
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  // Both ends share the integer part fl; recurse on the reciprocals of
  // the fractional parts.
  Rational lo_frac = lo - fl;
  Rational hi_frac = hi - fl;
  Rational inner = simplest_nonneg(1 / hi_frac, 1 / lo_frac);
  return Rational(fl) + 1 / inner;
}

}  // namespace

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw std::invalid_argument("simplest_between: lo > hi");
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (lo > 0) return simplest_nonneg(lo, hi);
  return -simplest_nonneg(-hi, -lo);
}

Rational approximate(double value, long max_den) {
  if (!std::isfinite(value)) throw std::invalid_argument("approximate: non-finite");
  bool neg = value < 0;
  double x = std::fabs(value);
  // Convergents h/k.
  Integer h_prev = 1, h = static_cast<long>(std::floor(x));
  Integer k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  for (int iter = 0; iter < 64 && frac > 1e-15; ++iter) {
    double inv = 1.0 / frac;
    long a = static_cast<long>(std::floor(inv));
    Integer h_next = a * h + h_prev;
    Integer k_next = a * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    frac = inv - std::floor(inv);
  }
  Rational r(h, k);
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

}  // namespace polysurj
