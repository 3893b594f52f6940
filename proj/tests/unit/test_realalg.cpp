#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "generators.hpp"
#include "oracles.hpp"
#include "polysurj/parser.hpp"
#include "polysurj/realalg.hpp"

namespace polysurj {
namespace {

using testing::Rng;

UniPoly U(std::initializer_list<int> lowest_first) {
  std::vector<Rational> c;
  for (int v : lowest_first) c.emplace_back(v);
  return UniPoly(std::move(c));
}

MultiPoly P(const char* text, std::size_t nvars = 2) { return parse_poly(text, nvars); }

HomogSystem system_of(std::vector<MultiPoly> forms) {
  HomogSystem s;
  s.nvars = forms.front().nvars();
  for (const auto& f : forms) s.degrees.push_back(total_degree(f));
  s.forms = std::move(forms);
  return s;
}

bool verifies(const std::vector<MultiPoly>& forms, const std::vector<Rational>& point) {
  if (std::all_of(point.begin(), point.end(), [](const Rational& v) { return v == 0; })) return false;
  return std::all_of(forms.begin(), forms.end(), [&](const MultiPoly& f) { return evaluate(f, point) == 0; });
}

TEST(Sturm, Counts) {
  EXPECT_EQ(sturm_count(U({0, -1, 0, 1}), std::nullopt, std::nullopt), 3u);
  EXPECT_EQ(sturm_count(U({1, 0, 1}), std::nullopt, std::nullopt), 0u);
  EXPECT_EQ(sturm_count(U({-6, -1, 0, 1}), std::nullopt, std::nullopt), 1u);
  // Half-open (lo, hi]: the root 1 counts, the root -1 does not.
  EXPECT_EQ(sturm_count(U({0, -1, 0, 1}), Rational(-1), Rational(1)), 2u);
  EXPECT_EQ(sturm_count(U({0, -1, 0, 1}), Rational(1, 2), std::nullopt), 1u);
  // Squarefree part is taken internally.
  EXPECT_EQ(sturm_count(U({1, -2, 1}), std::nullopt, std::nullopt), 1u);
  EXPECT_THROW(sturm_count(UniPoly(), std::nullopt, std::nullopt), std::invalid_argument);
}

TEST(Isolation, Examples) {
  auto roots = isolate_real_roots(U({0, -1, 0, 1}));
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_TRUE(roots[0].contains(-1));
  EXPECT_TRUE(roots[1].contains(0));
  EXPECT_TRUE(roots[2].contains(1));
  EXPECT_LT(roots[0].hi, roots[1].lo);
  EXPECT_LT(roots[1].hi, roots[2].lo);

  auto square = isolate_real_roots(U({0, 0, 1}));
  ASSERT_EQ(square.size(), 1u);
  EXPECT_TRUE(square[0].contains(0));
  EXPECT_EQ(exact_rational_root(U({0, 1}), square[0]), Rational(0));

  const UniPoly p = U({-6, -1, 0, 1});
  auto single = isolate_real_roots(p);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_TRUE(single[0].contains(2));
  EXPECT_EQ(exact_rational_root(squarefree_part(p), single[0]), Rational(2));

  auto irrational = isolate_real_roots(U({-2, 0, 1}));
  ASSERT_EQ(irrational.size(), 2u);
  const UniPoly sf = squarefree_part(U({-2, 0, 1}));
  EXPECT_FALSE(exact_rational_root(sf, irrational[1]).has_value());
  refine_to_width(irrational[1], sf, Rational(1, 1000000));
  EXPECT_LE(irrational[1].width(), Rational(1, 1000000));
  EXPECT_LT(irrational[1].lo * irrational[1].lo, 2);
  EXPECT_GT(irrational[1].hi * irrational[1].hi, 2);
  EXPECT_THROW(isolate_real_roots(UniPoly()), std::invalid_argument);
}

TEST(Gcd, Examples) {
  EXPECT_EQ(gcd_univariate(U({-1, 0, 1}), U({-1, 1})), U({-1, 1}));
  EXPECT_EQ(gcd_univariate(U({1, 0, 0, 1}), U({-1, 0, 0, 1})), U({1}));
  EXPECT_EQ(gcd_univariate(U({2, 4}), UniPoly()), UniPoly({Rational(1, 2), 1}));
  EXPECT_THROW(gcd_univariate(UniPoly(), UniPoly()), std::invalid_argument);
}

TEST(Resultant, Examples) {
  EXPECT_EQ(sylvester_resultant(U({1, 0, 0, 1}), U({-1, 0, 0, 1})), -8);
  EXPECT_EQ(sylvester_resultant(U({-1, 1}), U({1, 1})), 2);
  EXPECT_EQ(sylvester_resultant(U({-1, 0, 1}), U({-1, 1})), 0);
  EXPECT_EQ(sylvester_resultant(U({-1, 0, 0, 1}), U({5})), 125);
  EXPECT_THROW(sylvester_resultant(UniPoly(), U({1})), std::invalid_argument);
}

TEST(BinaryForm, Examples) {
  EXPECT_TRUE(binary_form_real_projective_zero(P("x^2 + y^2")).only_zero());
  auto diff = binary_form_real_projective_zero(P("x^2 - y^2"));
  ASSERT_TRUE(diff.has_witness());
  EXPECT_EQ(diff.point, (std::vector<Rational>{1, 1}));
  auto cubes = binary_form_real_projective_zero(P("x^3 + y^3"));
  ASSERT_TRUE(cubes.has_witness());
  EXPECT_EQ(cubes.point, (std::vector<Rational>{1, -1}));
  auto zero = binary_form_real_projective_zero(MultiPoly(2));
  EXPECT_EQ(zero.point, (std::vector<Rational>{1, 0}));
  auto at_infinity = binary_form_real_projective_zero(P("x^2*y + y^3"));
  EXPECT_EQ(at_infinity.point, (std::vector<Rational>{1, 0}));
  auto algebraic = binary_form_real_projective_zero(P("x^2 - 2*y^2"));
  ASSERT_TRUE(algebraic.has_witness());
  EXPECT_TRUE(algebraic.point.empty());
  ASSERT_TRUE(algebraic.algebraic.has_value());
  EXPECT_TRUE(algebraic.algebraic->isolation.has_value());
  EXPECT_THROW(binary_form_real_projective_zero(P("x^2 + y")), std::invalid_argument);
}

TEST(RealOnlyZero, Examples) {
  EXPECT_TRUE(real_only_zero(system_of({P("x^3 + 2*y^3"), P("3*x - y")})).only_zero());
  auto axes = real_only_zero(system_of({P("x^11*y^8"), P("x^12*y^7")}));
  ASSERT_TRUE(axes.has_witness());
  EXPECT_EQ(axes.point, (std::vector<Rational>{1, 0}));
  auto sphere = real_only_zero(system_of({P("x^2 + y^2 + z^2", 3)}));
  EXPECT_TRUE(sphere.inconclusive());
  EXPECT_EQ(sphere.field, ZeroSolutionVerdict::Field::Real);
  EXPECT_THROW(real_only_zero(HomogSystem{}), std::invalid_argument);
}

TEST(RealOnlyZero, ThreeVariableWitnessSearch) {
  const std::vector<MultiPoly> forms{P("x*y - z^2", 3), P("x - y", 3)};
  auto v = real_only_zero(system_of(forms));
  ASSERT_TRUE(v.has_witness());
  EXPECT_TRUE(verifies(forms, v.point));
  // (1 : 1 : 1) and (1 : 1 : -1) both qualify.
  EXPECT_EQ(v.point[0], 1);
  EXPECT_EQ(v.point[1], 1);
  EXPECT_EQ(abs(v.point[2]), 1);

  // Off-grid zero (3 : 5 : 11): denominators exceed the grid, so descent and
  // rational reconstruction have to find it.
  const std::vector<MultiPoly> skew{P("5*x - 3*y", 3), P("11*y - 5*z", 3)};
  auto w = real_only_zero(system_of(skew));
  ASSERT_TRUE(w.has_witness());
  EXPECT_EQ(w.point, (std::vector<Rational>{3, 5, 11}));
}

TEST(ComplexOnlyZero, Examples) {
  EXPECT_TRUE(complex_only_zero(system_of({P("x^3 + y^3"), P("x^3 - y^3")})).only_zero());
  auto common = complex_only_zero(system_of({P("x^2 - y^2"), P("x - y")}));
  ASSERT_TRUE(common.has_witness());
  EXPECT_EQ(common.point, (std::vector<Rational>{1, 1}));
  EXPECT_TRUE(complex_only_zero(system_of({P("x^3"), P("y")})).only_zero());
  // x^2 + y^2 has the complex zero (i : 1) but no real one.
  const auto circle = system_of({P("x^2 + y^2"), P("x^4 - y^4")});
  EXPECT_TRUE(real_only_zero(circle).only_zero());
  auto c = complex_only_zero(circle);
  ASSERT_TRUE(c.has_witness());
  EXPECT_TRUE(c.point.empty());
  EXPECT_EQ(c.field, ZeroSolutionVerdict::Field::Complex);
}

TEST(NormalizeProjective, PrimitivePositive) {
  EXPECT_EQ(normalize_projective({Rational(-2, 3), Rational(4, 9)}), (std::vector<Rational>{3, -2}));
  EXPECT_EQ(normalize_projective({0, Rational(-5, 7), 0}), (std::vector<Rational>{0, 1, 0}));
}

// ---------------------------------------------------------------------------
// Properties

TEST(SturmProperty, AgreesWithFloatingPointSubdivision) {
  Rng rng(4);
  int tested = 0;
  while (tested < 200) {
    const UniPoly p = testing::random_unipoly(rng, static_cast<std::size_t>(testing::uniform_int(rng, 1, 8)));
    if (!gcd_univariate(p, derivative(p)).is_constant()) continue;
    const std::vector<double> roots = testing::float_real_roots(p);
    EXPECT_EQ(sturm_count(p, std::nullopt, std::nullopt), roots.size()) << render(p);
    const Rational a = testing::random_rational(rng, 20, 4);
    const Rational b = a + abs(testing::random_rational(rng, 20, 3)) + Rational(1, 7);
    const double da = a.get_d(), db = b.get_d();
    const auto inside = std::count_if(roots.begin(), roots.end(), [&](double r) { return r > da && r <= db; });
    bool near_endpoint = std::any_of(roots.begin(), roots.end(),
                                     [&](double r) { return std::abs(r - da) < 1e-9 || std::abs(r - db) < 1e-9; });
    if (!near_endpoint) EXPECT_EQ(sturm_count(p, a, b), static_cast<std::size_t>(inside)) << render(p);
    const auto isolations = isolate_real_roots(p);
    EXPECT_EQ(isolations.size(), roots.size());
    for (std::size_t k = 0; k < isolations.size() && k < roots.size(); ++k) {
      EXPECT_LE(isolations[k].lo.get_d(), roots[k] + 1e-9);
      EXPECT_GE(isolations[k].hi.get_d(), roots[k] - 1e-9);
    }
    ++tested;
  }
}

TEST(ResultantProperty, ZeroExactlyWhenGcdIsNonconstant) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    UniPoly p = testing::random_unipoly(rng, static_cast<std::size_t>(testing::uniform_int(rng, 1, 5)), 3);
    UniPoly q = testing::random_unipoly(rng, static_cast<std::size_t>(testing::uniform_int(rng, 1, 5)), 3);
    if (trial < 50) {
      const UniPoly common = testing::random_unipoly(rng, static_cast<std::size_t>(testing::uniform_int(rng, 1, 2)), 5);
      p = p * common;
      q = q * common;
    }
    const Rational res = sylvester_resultant(p, q);
    EXPECT_EQ(res, testing::euclid_resultant(p, q)) << render(p) << " | " << render(q);
    EXPECT_EQ(res == 0, !gcd_univariate(p, q).is_constant()) << render(p) << " | " << render(q);
    if (trial < 50) EXPECT_EQ(res, 0);
  }
}

TEST(OnlyZeroProperty, WitnessesVerifyAndComplexImpliesReal) {
  Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<MultiPoly> forms;
    for (int k = 0; k < 2; ++k) {
      const unsigned d = static_cast<unsigned>(testing::uniform_int(rng, 1, 4));
      MultiPoly f(2);
      for (unsigned i = 0; i <= d; ++i)
        if (testing::uniform_int(rng, 0, 2) > 0) f += MultiPoly::term({d - i, i}, testing::random_rational(rng, 3, 2));
      if (f.is_zero()) f = MultiPoly::term({d, 0}, 1);
      forms.push_back(std::move(f));
    }
    if (trial % 4 == 0) {
      // Plant a common rational linear factor.
      const MultiPoly l = MultiPoly::term({1, 0}, testing::random_nonzero_rational(rng, 3, 2)) +
                          MultiPoly::term({0, 1}, testing::random_nonzero_rational(rng, 3, 2));
      for (auto& f : forms) f = f * l;
    }
    const auto sys = system_of(forms);
    const auto real = real_only_zero(sys);
    const auto complex = complex_only_zero(sys);
    EXPECT_FALSE(real.inconclusive());
    EXPECT_FALSE(complex.inconclusive());
    if (real.has_witness() && !real.point.empty()) EXPECT_TRUE(verifies(forms, real.point));
    if (complex.has_witness() && !complex.point.empty()) EXPECT_TRUE(verifies(forms, complex.point));
    if (complex.only_zero()) EXPECT_TRUE(real.only_zero()) << render(forms[0]) << " ; " << render(forms[1]);
    if (real.has_witness()) EXPECT_TRUE(complex.has_witness());
    if (trial % 4 == 0) EXPECT_TRUE(real.has_witness());

    // Positive rescaling changes nothing.
    std::vector<MultiPoly> scaled = forms;
    for (auto& f : scaled) f = f * Rational(testing::uniform_int(rng, 1, 9), testing::uniform_int(rng, 1, 9));
    EXPECT_EQ(real_only_zero(system_of(scaled)).status, real.status);
    EXPECT_EQ(complex_only_zero(system_of(scaled)).status, complex.status);
    EXPECT_EQ(real_only_zero(system_of(scaled)).point, real.point);
  }
}

}  // namespace
}  // namespace polysurj
