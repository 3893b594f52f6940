#include "polysurj/corpus.hpp"

#include <stdexcept>

namespace polysurj {

namespace {

void check(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("build_pinchuk: " + what);
}

}  // namespace

PinchukMap build_pinchuk() {
  const MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  auto c = [](const Rational& v) { return MultiPoly::constant(2, v); };

  PinchukMap m;
  m.t = x * y - c(1);
  m.s = c(1) + x * m.t;
  m.h = m.t * m.s;
  m.f = power(m.s, 2) * (power(m.t, 2) + y);
  m.p = m.h + m.f;
  const MultiPoly base = c(13) + c(15) * m.h;
  m.A = m.h + power(base, 3) * Rational(1, 45);
  m.B = c(4) * power(m.h, 3) + c(6) * power(m.h, 2) + power(m.h, 2) * Rational(1, 2) +
        power(base, 4) * Rational(1, 2700);
  m.u = m.A * m.f + m.B;
  m.q = -power(m.t, 2) - c(6) * m.t * m.h * (m.h + c(1)) - m.u;

  check(total_degree(m.h) == Degree(5), "deg h != 5");
  check(total_degree(m.f) == Degree(10), "deg f != 10");
  check(total_degree(m.p) == Degree(10), "deg p != 10");
  check(total_degree(m.q) == Degree(25), "deg q != 25");
  check(leading_form(m.p) == MultiPoly::term({6, 4}, 1), "leading form of p is not x^6 y^4");
  check(m.p.coefficient({5, 3}) == -4, "coefficient of x^5 y^3 in p is not -4");
  const MultiPoly lq = leading_form(m.q);
  check(lq.size() == 1 && lq.leading_term().first == Monomial{15, 10} && abs(lq.leading_term().second) == 75,
        "leading form of q is not +-75 x^15 y^10");
  return m;
}

PolyMap odd_power_map(const std::vector<std::vector<Rational>>& a, const std::vector<unsigned>& b) {
  const std::size_t n = a.size();
  if (n == 0 || b.size() != n) throw std::invalid_argument("odd_power_map: size mismatch");
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("odd_power_map: coefficient matrix is not square");
  std::vector<MultiPoly> comps;
  for (std::size_t j = 0; j < n; ++j) {
    MultiPoly p(n);
    for (std::size_t i = 0; i < n; ++i) {
      Monomial m(n, 0);
      m[i] = 2 * b[j] + 1;
      p += MultiPoly::term(std::move(m), a[i][j]);
    }
    comps.push_back(std::move(p));
  }
  return PolyMap(std::move(comps));
}

PolyMap odd_pair_map(const OddPairParams& k) {
  const std::uint32_t e1 = 2 * k.k + 1, e2 = 2 * k.j + 1;
  MultiPoly p = MultiPoly::term({e1, 0}, k.a) + MultiPoly::term({0, e1}, k.b);
  MultiPoly q = MultiPoly::term({e2, 0}, k.c) + MultiPoly::term({0, e2}, k.d);
  return PolyMap({p, q});
}

OddPairParams random_odd_pair_params(std::mt19937_64& rng, bool opposite_signs, unsigned max_exponent) {
  std::uniform_int_distribution<int> num(1, 9), den(1, 5), coin(0, 1);
  std::uniform_int_distribution<unsigned> expo(0, max_exponent);
  auto draw = [&] {
    Rational r(num(rng) * (coin(rng) ? 1 : -1), den(rng));
    r.canonicalize();
    return r;
  };
  OddPairParams p;
  p.a = draw();
  p.b = draw();
  p.c = draw();
  p.d = draw();
  p.k = expo(rng);
  p.j = expo(rng);
  const bool opposite = sgn(p.a * p.d) == -sgn(p.b * p.c);
  if (opposite != opposite_signs) p.d = -p.d;
  return p;
}

namespace {

void monomials_below(std::size_t nvars, std::uint32_t below, Monomial& cur, std::size_t var, std::uint32_t used,
                     std::vector<Monomial>& out) {
  if (var == nvars) {
    out.push_back(cur);
    return;
  }
  for (std::uint32_t e = 0; used + e < below; ++e) {
    cur[var] = e;
    monomials_below(nvars, below, cur, var + 1, used + e, out);
  }
  cur[var] = 0;
}

}  // namespace

PolyMap with_lower_order_noise(const PolyMap& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-5, 5);
  const std::size_t n = f.nvars();
  std::vector<MultiPoly> comps;
  for (const auto& p : f.components()) {
    Degree d = total_degree(p);
    MultiPoly noisy = p;
    if (d.is_finite() && d.value() > 0) {
      std::vector<Monomial> ms;
      Monomial cur(n, 0);
      monomials_below(n, static_cast<std::uint32_t>(d.value()), cur, 0, 0, ms);
      for (auto& m : ms) {
        int c = coef(rng);
        if (c != 0) noisy += MultiPoly::term(std::move(m), Rational(c));
      }
    }
    comps.push_back(std::move(noisy));
  }
  return PolyMap(std::move(comps));
}

std::vector<std::string> builtin_names() {
  return {"pinchuk", "pinchuk-jacobian", "cubic-line", "cubic-shear", "odd-pair"};
}

ProblemSpec builtin_problem(const std::string& name) {
  if (name == "pinchuk") return make_problem(build_pinchuk().map());
  if (name == "pinchuk-jacobian") {
    ProblemSpec spec = make_problem(build_pinchuk().map());
    spec.gmatrix = jacobian_matrix(spec.map);
    spec.gmatrix_defaulted = false;
    return spec;
  }
  if (name == "cubic-line") return make_problem(PolyMap({parse_poly("x^3 - x", 2), parse_poly("y", 2)}));
  if (name == "cubic-shear") return make_problem(PolyMap({parse_poly("x + y^3", 2), parse_poly("y - x^3", 2)}));
  if (name == "odd-pair")
    return make_problem(PolyMap({parse_poly("x^3 + 2*y^3 + x", 2), parse_poly("3*x - y + 1", 2)}));
  std::string known;
  for (const auto& n : builtin_names()) known += (known.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown builtin '" + name + "' (known: " + known + ")");
}

}  // namespace polysurj
