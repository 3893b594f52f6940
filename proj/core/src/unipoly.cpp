#include "polysurj/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace polysurj {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Degree UniPoly::degree() const {
  if (coeffs_.empty()) return Degree::neg_infinity();
  return Degree(static_cast<std::int64_t>(coeffs_.size() - 1));
}

const Rational& UniPoly::leading() const {
  if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational UniPoly::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::operator-() const {
  UniPoly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(r));
}

std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.size() < b.size()) return {UniPoly(), a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quot(a.size() - b.size() + 1);
  const auto& bc = b.coeffs();
  const Rational& lead = bc.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational& top = rem[k + bc.size() - 1];
    if (top == 0) continue;
    Rational q = top / lead;
    quot[k] = q;
    for (std::size_t i = 0; i < bc.size(); ++i) rem[k + i] -= q * bc[i];
  }
  rem.resize(bc.size() - 1);
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

UniPoly derivative(const UniPoly& p) {
  if (p.size() <= 1) return UniPoly();
  std::vector<Rational> d(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = p.coeffs()[k] * static_cast<unsigned long>(k);
  return UniPoly(std::move(d));
}

UniPoly monic(const UniPoly& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.leading());
}

UniPoly primitive_part(const UniPoly& p) {
  if (p.is_zero()) return p;
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& c : p.coeffs()) {
    if (c == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  return p * scale;
}

namespace {

UniPoly gcd_monic(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    auto r = divrem(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? r : monic(r);
  }
  return monic(a);
}

}  // namespace

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_constant()) return p.is_zero() ? p : UniPoly::constant(1);
  UniPoly g = gcd_monic(p, derivative(p));
  return primitive_part(p / g);
}

UniPoly taylor_shift(const UniPoly& p, const Rational& shift) {
  // Horner with the polynomial (t + shift).
  UniPoly lin(std::vector<Rational>{shift, Rational(1)});
  UniPoly acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * lin + UniPoly::constant(*it);
  return acc;
}

std::string render(const UniPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = p.size(); k-- > 0;) {
    const Rational& c = p.coeffs()[k];
    if (c == 0) continue;
    bool neg = c < 0;
    Rational mag = abs(c);
    out << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    if (k == 0) {
      out << to_string(mag);
      continue;
    }
    if (mag != 1) out << to_string(mag) << "*";
    out << var;
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

UniPoly to_unipoly(const MultiPoly& p) {
  if (p.nvars() != 1) throw std::invalid_argument("to_unipoly: polynomial has more than one variable");
  if (p.is_zero()) return UniPoly();
  std::vector<Rational> c(monomial_degree(p.leading_term().first) + 1);
  for (const auto& [m, coef] : p.terms()) c[m[0]] = coef;
  return UniPoly(std::move(c));
}

UniPoly dehomogenize_binary(const MultiPoly& f) {
  if (f.nvars() != 2) throw std::invalid_argument("dehomogenize_binary: expected two variables");
  if (f.is_zero()) return UniPoly();
  std::uint32_t top = 0;
  for (const auto& [m, c] : f.terms()) top = std::max(top, m[0]);
  std::vector<Rational> c(top + 1);
  for (const auto& [m, coef] : f.terms()) c[m[0]] += coef;
  return UniPoly(std::move(c));
}

std::vector<UniPoly> coefficients_in(const MultiPoly& p, std::size_t var) {
  if (p.nvars() != 2) throw std::invalid_argument("coefficients_in: expected two variables");
  if (var > 1) throw std::out_of_range("coefficients_in: variable index out of range");
  const std::size_t other = 1 - var;
  if (p.is_zero()) return {};
  std::uint32_t top = 0, other_top = 0;
  for (const auto& [m, c] : p.terms()) {
    top = std::max(top, m[var]);
    other_top = std::max(other_top, m[other]);
  }
  std::vector<std::vector<Rational>> dense(top + 1, std::vector<Rational>(other_top + 1));
  for (const auto& [m, c] : p.terms()) dense[m[var]][m[other]] = c;
  std::vector<UniPoly> out;
  out.reserve(dense.size());
  for (auto& d : dense) out.emplace_back(std::move(d));
  return out;
}

MultiPoly to_multipoly(const UniPoly& p, std::size_t nvars, std::size_t var) {
  if (var >= nvars) throw std::out_of_range("to_multipoly: variable index out of range");
  std::vector<std::pair<Monomial, Rational>> terms;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p.coeffs()[k] == 0) continue;
    Monomial m(nvars, 0);
    m[var] = static_cast<std::uint32_t>(k);
    terms.emplace_back(std::move(m), p.coeffs()[k]);
  }
  return MultiPoly::from_terms(nvars, terms);
}

}  // namespace polysurj
