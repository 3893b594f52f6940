#include "polysurj/multipoly.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace polysurj {

std::uint64_t monomial_degree(const Monomial& m) {
  std::uint64_t d = 0;
  for (auto e : m) d += e;
  return d;
}

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  auto da = monomial_degree(a);
  auto db = monomial_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::int64_t Degree::value() const {
  if (!finite_) throw std::logic_error("degree of the zero polynomial is -infinity");
  return value_;
}

Degree operator+(const Degree& a, const Degree& b) {
  if (!a.finite_ || !b.finite_) return Degree::neg_infinity();
  return Degree(a.value_ + b.value_);
}

Degree operator*(std::int64_t k, const Degree& d) {
  if (!d.finite_) return Degree::neg_infinity();
  return Degree(k * d.value_);
}

std::string Degree::to_string() const {
  return finite_ ? std::to_string(value_) : std::string("-inf");
}

MultiPoly::MultiPoly(std::size_t nvars) : nvars_(nvars) {
  if (nvars == 0) throw std::invalid_argument("polynomial ring needs at least one variable");
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  Monomial m(nvars, 0);
  m[index] = 1;
  return term(std::move(m), Rational(1));
}

MultiPoly MultiPoly::term(Monomial exponents, const Rational& c) {
  MultiPoly p(exponents.size());
  p.add_term(exponents, c);
  return p;
}

MultiPoly MultiPoly::from_terms(std::size_t nvars,
                                std::span<const std::pair<Monomial, Rational>> terms) {
  MultiPoly p(nvars);
  for (const auto& [m, c] : terms) {
    if (m.size() != nvars) throw std::invalid_argument("exponent vector length differs from nvars");
    p.add_term(m, c);
  }
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0);
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const { return coefficient(Monomial(nvars_, 0)); }

const std::pair<const Monomial, Rational>& MultiPoly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
  return *terms_.begin();
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_same_ring(const MultiPoly& other) const {
  if (nvars_ != other.nvars_)
    throw std::invalid_argument("variable-count mismatch: " + std::to_string(nvars_) +
                                " vs " + std::to_string(other.nvars_));
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_ring(b);
  MultiPoly r(a.nvars_);
  Monomial m(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = *this * other;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, coef] : terms_) coef *= c;
  }
  return *this;
}

MultiPoly add(const MultiPoly& p, const MultiPoly& q) { return p + q; }
MultiPoly multiply(const MultiPoly& p, const MultiPoly& q) { return p * q; }

MultiPoly power(const MultiPoly& p, unsigned k) {
  MultiPoly result = MultiPoly::constant(p.nvars(), Rational(1));
  MultiPoly base = p;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

Degree total_degree(const MultiPoly& p) {
  if (p.is_zero()) return Degree::neg_infinity();
  // Graded order puts a maximal-degree term first.
  return Degree(static_cast<std::int64_t>(monomial_degree(p.terms().begin()->first)));
}

Degree degree_in(const MultiPoly& p, std::size_t var) {
  if (var >= p.nvars()) throw std::out_of_range("variable index out of range");
  if (p.is_zero()) return Degree::neg_infinity();
  std::uint32_t d = 0;
  for (const auto& [m, c] : p.terms()) d = std::max(d, m[var]);
  return Degree(d);
}

MultiPoly leading_form(const MultiPoly& p) {
  MultiPoly r(p.nvars());
  if (p.is_zero()) return r;
  auto top = monomial_degree(p.terms().begin()->first);
  std::vector<std::pair<Monomial, Rational>> terms;
  for (const auto& [m, c] : p.terms()) {
    if (monomial_degree(m) != top) break;
    terms.emplace_back(m, c);
  }
  return MultiPoly::from_terms(p.nvars(), terms);
}

bool is_homogeneous(const MultiPoly& p) {
  if (p.is_zero()) return true;
  auto top = monomial_degree(p.terms().begin()->first);
  return monomial_degree(p.terms().rbegin()->first) == top;
}

MultiPoly partial_derivative(const MultiPoly& p, std::size_t var) {
  if (var >= p.nvars()) throw std::out_of_range("partial derivative: variable index out of range");
  std::vector<std::pair<Monomial, Rational>> terms;
  for (const auto& [m, c] : p.terms()) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    terms.emplace_back(std::move(d), c * m[var]);
  }
  return MultiPoly::from_terms(p.nvars(), terms);
}

MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> images) {
  if (images.size() != p.nvars())
    throw std::invalid_argument("substitute: expected " + std::to_string(p.nvars()) +
                                " images, got " + std::to_string(images.size()));
  if (images.empty()) throw std::invalid_argument("substitute: no images");
  std::size_t target_vars = images.front().nvars();
  for (const auto& img : images)
    if (img.nvars() != target_vars) throw std::invalid_argument("substitute: images differ in nvars");

  // powers[v][e] = images[v]^e, filled lazily.
  std::vector<std::vector<MultiPoly>> powers(p.nvars());
  auto image_power = [&](std::size_t v, std::uint32_t e) -> const MultiPoly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(MultiPoly::constant(target_vars, Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };

  MultiPoly result(target_vars);
  for (const auto& [m, c] : p.terms()) {
    MultiPoly t = MultiPoly::constant(target_vars, c);
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m[v] > 0) t *= image_power(v, m[v]);
    result += t;
  }
  return result;
}

Rational evaluate(const MultiPoly& p, std::span<const Rational> point) {
  if (point.size() != p.nvars())
    throw std::invalid_argument("evaluate: point has " + std::to_string(point.size()) +
                                " coordinates, polynomial has " + std::to_string(p.nvars()) +
                                " variables");
  std::vector<std::vector<Rational>> powers(point.size());
  auto coord_power = [&](std::size_t v, std::uint32_t e) -> const Rational& {
    auto& cache = powers[v];
    if (cache.empty()) cache.emplace_back(1);
    while (cache.size() <= e) cache.push_back(cache.back() * point[v]);
    return cache[e];
  };
  Rational sum = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m[v] > 0) t *= coord_power(v, m[v]);
    sum += t;
  }
  return sum;
}

MultiPoly extend_variables(const MultiPoly& p, std::size_t nvars) {
  if (nvars < p.nvars()) throw std::invalid_argument("extend_variables: cannot shrink ring");
  std::vector<std::pair<Monomial, Rational>> terms;
  terms.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    Monomial e = m;
    e.resize(nvars, 0);
    terms.emplace_back(std::move(e), c);
  }
  return MultiPoly::from_terms(nvars, terms);
}

PolyMap::PolyMap(std::vector<MultiPoly> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("polynomial map needs at least one component");
  for (const auto& p : components_)
    if (p.nvars() != components_.size())
      throw std::invalid_argument("polynomial map must be square: " +
                                  std::to_string(components_.size()) + " components but a component has " +
                                  std::to_string(p.nvars()) + " variables");
}

PolyMatrix identity_matrix(std::size_t n) {
  PolyMatrix m(n, std::vector<MultiPoly>(n, MultiPoly(n)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = MultiPoly::constant(n, Rational(1));
  return m;
}

PolyMatrix jacobian_matrix(const PolyMap& f) {
  const std::size_t n = f.nvars();
  PolyMatrix m(n, std::vector<MultiPoly>(n, MultiPoly(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = partial_derivative(f[j], i);
  return m;
}

MultiPoly determinant(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n > 20) throw std::invalid_argument("determinant: matrix too large for cofactor expansion");
  const std::size_t nvars = m[0][0].nvars();

  // minors[S] = determinant of rows 0..|S|-1 restricted to the column set S.
  // Laplace expansion along the last row of each minor.
  std::unordered_map<std::uint32_t, MultiPoly> minors;
  minors.emplace(0u, MultiPoly::constant(nvars, Rational(1)));
  std::vector<std::uint32_t> layer{0u};
  for (std::size_t row = 0; row < n; ++row) {
    std::unordered_map<std::uint32_t, MultiPoly> next;
    for (std::uint32_t set : layer) {
      const MultiPoly& base = minors.at(set);
      if (base.is_zero()) continue;
      for (std::size_t col = 0; col < n; ++col) {
        if (set & (1u << col)) continue;
        if (m[row][col].is_zero()) continue;
        // Sign: number of chosen columns to the right of col.
        int after = std::popcount(set >> (col + 1));
        MultiPoly t = base * m[row][col];
        if (after % 2) t = -t;
        std::uint32_t key = set | (1u << col);
        auto it = next.find(key);
        if (it == next.end())
          next.emplace(key, std::move(t));
        else
          it->second += t;
      }
    }
    minors = std::move(next);
    layer.clear();
    for (const auto& [k, v] : minors) layer.push_back(k);
    std::sort(layer.begin(), layer.end());
  }
  auto it = minors.find((1u << n) - 1);
  return it == minors.end() ? MultiPoly(nvars) : it->second;
}

MultiPoly jacobian_determinant(const PolyMap& f) { return determinant(jacobian_matrix(f)); }

}  // namespace polysurj
