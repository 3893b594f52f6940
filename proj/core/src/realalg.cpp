#include "polysurj/realalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "bareiss.hpp"

namespace polysurj {

// ---------------------------------------------------------------------------
// Sturm sequences

SturmChain::SturmChain(const UniPoly& squarefree) {
  if (squarefree.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
  chain_.push_back(primitive_part(squarefree));
  UniPoly d = derivative(chain_.back());
  if (d.is_zero()) return;
  chain_.push_back(primitive_part(d));
  while (true) {
    const auto& a = chain_[chain_.size() - 2];
    const auto& b = chain_.back();
    UniPoly r = divrem(a, b).second;
    if (r.is_zero()) break;
    chain_.push_back(primitive_part(-r));
  }
}

namespace {

std::size_t count_variations(const std::vector<int>& signs) {
  std::size_t v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

std::size_t SturmChain::variations_at(const Rational& t) const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& p : chain_) s.push_back(p.sign_at(t));
  return count_variations(s);
}

std::size_t SturmChain::variations_at_pos_infinity() const {
  std::vector<int> s;
  for (const auto& p : chain_) s.push_back(sgn(p.leading()));
  return count_variations(s);
}

std::size_t SturmChain::variations_at_neg_infinity() const {
  std::vector<int> s;
  for (const auto& p : chain_) {
    int sign = sgn(p.leading());
    if ((p.size() - 1) % 2 == 1) sign = -sign;
    s.push_back(sign);
  }
  return count_variations(s);
}

std::size_t sturm_count(const UniPoly& p, const std::optional<Rational>& lo,
                        const std::optional<Rational>& hi) {
  if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
  if (lo && hi && *lo >= *hi) return 0;
  UniPoly s = squarefree_part(p);
  if (s.is_constant()) return 0;
  SturmChain chain(s);
  std::size_t vlo = lo ? chain.variations_at(*lo) : chain.variations_at_neg_infinity();
  std::size_t vhi = hi ? chain.variations_at(*hi) : chain.variations_at_pos_infinity();
  return vlo - vhi;
}

// ---------------------------------------------------------------------------
// Isolation

namespace {

Rational middle_split(const Rational& lo, const Rational& hi) {
  Rational quarter = (hi - lo) / 4;
  return simplest_between(lo + quarter, hi - quarter);
}

Rational cauchy_bound(const UniPoly& p) {
  Rational max_ratio = 0;
  const Rational& lead = p.leading();
  for (std::size_t k = 0; k + 1 < p.size(); ++k) max_ratio = std::max(max_ratio, Rational(abs(p.coeff(k) / lead)));
  Rational b = 1 + max_ratio;
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
  return Rational(c);
}

}  // namespace

std::vector<Isolation> isolate_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  UniPoly s = squarefree_part(p);
  std::vector<Isolation> out;
  if (s.is_constant()) return out;
  SturmChain chain(s);
  auto V = [&](const Rational& t) { return chain.variations_at(t); };

  Rational bound = cauchy_bound(s);
  struct Work {
    Rational lo, hi;
    std::size_t count;
  };
  std::vector<Work> stack;
  std::size_t total = V(-bound) - V(bound);
  if (total > 0) stack.push_back({-bound, bound, total});
  while (!stack.empty()) {
    Work w = std::move(stack.back());
    stack.pop_back();
    if (w.count == 0) continue;
    if (w.count == 1) {
      out.push_back(Isolation{w.lo, w.hi, std::nullopt});
      continue;
    }
    Rational m = middle_split(w.lo, w.hi);
    if (s.sign_at(m) == 0) {
      out.push_back(Isolation{m, m, m});
      Rational delta = std::min(m - w.lo, w.hi - m) / 2;
      Rational l, r;
      while (true) {
        l = m - delta;
        r = m + delta;
        if (s.sign_at(l) != 0 && s.sign_at(r) != 0 && V(l) - V(r) == 1) break;
        delta /= 2;
      }
      stack.push_back({w.lo, l, V(w.lo) - V(l)});
      stack.push_back({r, w.hi, V(r) - V(w.hi)});
    } else {
      std::size_t left = V(w.lo) - V(m);
      stack.push_back({w.lo, m, left});
      stack.push_back({m, w.hi, w.count - left});
    }
  }
  std::sort(out.begin(), out.end(), [](const Isolation& a, const Isolation& b) { return a.lo < b.lo; });
  return out;
}

void refine(Isolation& iso, const UniPoly& squarefree) {
  if (iso.is_exact()) return;
  Rational m = middle_split(iso.lo, iso.hi);
  int sm = squarefree.sign_at(m);
  if (sm == 0) {
    iso = Isolation{m, m, m};
    return;
  }
  if (squarefree.sign_at(iso.lo) * sm < 0)
    iso.hi = m;
  else
    iso.lo = m;
}

void refine_to_width(Isolation& iso, const UniPoly& squarefree, const Rational& width) {
  while (!iso.is_exact() && iso.width() > width) refine(iso, squarefree);
}

std::optional<Rational> exact_rational_root(const UniPoly& squarefree, Isolation& iso) {
  if (iso.is_exact()) return iso.exact_root;
  UniPoly s = primitive_part(squarefree);
  Integer lead = abs(s.leading().get_num());
  Rational threshold(Integer(1), lead * lead);
  for (int step = 0; step < 100000; ++step) {
    Rational c = simplest_between(iso.lo, iso.hi);
    if (s.sign_at(c) == 0) {
      iso = Isolation{c, c, c};
      return c;
    }
    if (iso.width() < threshold) return std::nullopt;
    refine(iso, s);
    if (iso.is_exact()) return iso.exact_root;
  }
  return std::nullopt;
}

UniPoly gcd_univariate(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd_univariate: both inputs are zero");
  UniPoly a = p, b = q;
  while (!b.is_zero()) {
    UniPoly r = divrem(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? r : monic(r);
  }
  return monic(a);
}

Rational sylvester_resultant(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("sylvester_resultant: zero input");
  std::vector<Rational> pd(p.coeffs().rbegin(), p.coeffs().rend());
  std::vector<Rational> qd(q.coeffs().rbegin(), q.coeffs().rend());
  return detail::bareiss_determinant(detail::sylvester_matrix(pd, qd), Rational(1));
}

// ---------------------------------------------------------------------------
// Only-zero decisions

std::string to_string(ZeroSolutionVerdict::Status s) {
  switch (s) {
    case ZeroSolutionVerdict::Status::OnlyZero: return "OnlyZero";
    case ZeroSolutionVerdict::Status::NonzeroWitness: return "NonzeroWitness";
    case ZeroSolutionVerdict::Status::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string to_string(ZeroSolutionVerdict::Field f) {
  return f == ZeroSolutionVerdict::Field::Real ? "Real" : "Complex";
}

std::vector<Rational> normalize_projective(std::vector<Rational> point) {
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& c : point) {
    if (c == 0) continue;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  if (num_gcd == 0) throw std::invalid_argument("normalize_projective: zero vector");
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  auto first = std::find_if(point.begin(), point.end(), [](const Rational& c) { return c != 0; });
  if (*first < 0) scale = -scale;
  for (auto& c : point) c *= scale;
  return point;
}

namespace {

using Status = ZeroSolutionVerdict::Status;
using Field = ZeroSolutionVerdict::Field;

ZeroSolutionVerdict only_zero(Field field, std::string reason) {
  ZeroSolutionVerdict v;
  v.status = Status::OnlyZero;
  v.field = field;
  v.reason = std::move(reason);
  return v;
}

ZeroSolutionVerdict rational_witness(Field field, std::vector<Rational> point, std::string reason) {
  ZeroSolutionVerdict v;
  v.status = Status::NonzeroWitness;
  v.field = field;
  v.point = normalize_projective(std::move(point));
  v.reason = std::move(reason);
  return v;
}

void check_forms(const HomogSystem& sys) {
  if (sys.forms.empty()) throw std::invalid_argument("only-zero test on an empty system");
  for (const auto& f : sys.forms) {
    if (f.nvars() != sys.nvars) throw std::invalid_argument("only-zero test: form has the wrong variable count");
    if (!is_homogeneous(f)) throw std::invalid_argument("only-zero test: form is not homogeneous");
  }
}

// Common zero (xi : 1) of binary forms whose dehomogenizations have gcd g.
// Prefers the largest rational root, then the largest real root; complex
// roots are only reported when `allow_complex`.
std::optional<ZeroSolutionVerdict> witness_from_gcd(const UniPoly& g, Field field, bool allow_complex) {
  UniPoly s = squarefree_part(g);
  if (s.is_constant()) return std::nullopt;
  auto roots = isolate_real_roots(s);
  for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
    if (auto r = exact_rational_root(s, *it))
      return rational_witness(field, {*r, Rational(1)}, "common zero (" + to_string(*r) + " : 1)");
  }
  ZeroSolutionVerdict v;
  v.status = Status::NonzeroWitness;
  v.field = field;
  if (!roots.empty()) {
    v.algebraic = AlgebraicPoint{s, roots.back()};
    v.reason = "common real zero (xi : 1) with xi the root of " + render(s, "X") + " in [" +
               to_string(roots.back().lo) + ", " + to_string(roots.back().hi) + "]";
    return v;
  }
  if (!allow_complex) return std::nullopt;
  v.algebraic = AlgebraicPoint{s, std::nullopt};
  v.reason = "common non-real zero (xi : 1) with xi a root of " + render(s, "X");
  return v;
}

bool vanishes_at_infinity(const MultiPoly& f) {
  // f(1, 0) == 0, i.e. Y divides f.
  return evaluate(f, std::vector<Rational>{Rational(1), Rational(0)}) == 0;
}

ZeroSolutionVerdict one_variable(const HomogSystem& sys, Field field) {
  for (const auto& f : sys.forms)
    if (!f.is_zero()) return only_zero(field, "a nonzero form c*X^d vanishes only at X = 0");
  return rational_witness(field, {Rational(1)}, "every form is zero");
}

ZeroSolutionVerdict two_variables(const HomogSystem& sys, Field field) {
  std::vector<const MultiPoly*> nonzero;
  for (const auto& f : sys.forms)
    if (!f.is_zero()) nonzero.push_back(&f);
  if (nonzero.empty()) return rational_witness(field, {Rational(1), Rational(0)}, "every form is zero");
  if (std::all_of(nonzero.begin(), nonzero.end(), [](const MultiPoly* f) { return vanishes_at_infinity(*f); }))
    return rational_witness(field, {Rational(1), Rational(0)}, "Y divides every form: zero (1 : 0)");

  std::vector<UniPoly> dehom;
  for (const auto* f : nonzero) dehom.push_back(dehomogenize_binary(*f));

  if (field == Field::Complex && dehom.size() == 2) {
    Rational res = sylvester_resultant(dehom[0], dehom[1]);
    if (res != 0)
      return only_zero(field, "resultant " + to_string(res) + " != 0 and no common zero at infinity");
  }
  UniPoly g = dehom.front();
  for (std::size_t i = 1; i < dehom.size() && !g.is_constant(); ++i) g = gcd_univariate(g, dehom[i]);
  if (g.is_constant()) return only_zero(field, "dehomogenized forms are coprime and no common zero at infinity");
  if (auto w = witness_from_gcd(g, field, field == Field::Complex)) return *w;
  return only_zero(field, "common factor " + render(g, "X") + " has no real roots");
}

}  // namespace

ZeroSolutionVerdict binary_form_real_projective_zero(const MultiPoly& f) {
  if (f.nvars() != 2) throw std::invalid_argument("binary form expected (two variables)");
  if (!is_homogeneous(f)) throw std::invalid_argument("binary form is not homogeneous");
  HomogSystem sys;
  sys.nvars = 2;
  sys.forms = {f};
  sys.degrees = {total_degree(f)};
  return two_variables(sys, Field::Real);
}

ZeroSolutionVerdict real_only_zero(const HomogSystem& sys) {
  check_forms(sys);
  if (sys.nvars == 1) return one_variable(sys, Field::Real);
  if (sys.nvars == 2) return two_variables(sys, Field::Real);
  if (auto w = search_rational_witness(sys.forms, sys.nvars))
    return rational_witness(Field::Real, *w, "rational witness found by grid/descent search");
  ZeroSolutionVerdict v;
  v.status = Status::Inconclusive;
  v.field = Field::Real;
  v.reason = "no rational witness found; exact only-zero decisions are limited to two variables";
  return v;
}

ZeroSolutionVerdict complex_only_zero(const HomogSystem& sys) {
  check_forms(sys);
  if (sys.nvars == 1) return one_variable(sys, Field::Complex);
  if (sys.nvars == 2) return two_variables(sys, Field::Complex);
  if (auto w = search_rational_witness(sys.forms, sys.nvars))
    return rational_witness(Field::Complex, *w, "rational witness found by grid/descent search");
  ZeroSolutionVerdict v;
  v.status = Status::Inconclusive;
  v.field = Field::Complex;
  v.reason = "complex only-zero decisions are limited to two variables";
  return v;
}

}  // namespace polysurj
