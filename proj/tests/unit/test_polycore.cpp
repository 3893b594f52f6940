#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "generators.hpp"
#include "polysurj/multipoly.hpp"
#include "polysurj/parser.hpp"

namespace polysurj {
namespace {

using testing::Rng;

MultiPoly P(const char* text, std::size_t nvars = 2) { return parse_poly(text, nvars); }

TEST(Rational, SimplestBetweenAndApproximate) {
  EXPECT_EQ(simplest_between(Rational(1, 3), Rational(2, 3)), Rational(1, 2));
  EXPECT_EQ(simplest_between(Rational(-7, 2), Rational(5, 1)), Rational(0));
  EXPECT_EQ(simplest_between(Rational(3, 10), Rational(3, 10)), Rational(3, 10));
  EXPECT_EQ(simplest_between(Rational(-5, 3), Rational(-4, 3)), Rational(-3, 2));
  EXPECT_THROW(simplest_between(Rational(1), Rational(0)), std::invalid_argument);
  EXPECT_EQ(approximate(0.3333333333, 100), Rational(1, 3));
  EXPECT_EQ(approximate(-2.5, 10), Rational(-5, 2));
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(to_string(Rational(-3, 2)), "-3/2");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_EQ(pow(Rational(-2, 3), 3), Rational(-8, 27));
}

TEST(MultiPoly, ArithmeticExamples) {
  EXPECT_EQ(P("x + y") * P("x - y"), P("x^2 - y^2"));
  EXPECT_EQ(power(P("x^2*y - x + 1"), 2), P("x^4*y^2 - 2*x^3*y + 2*x^2*y + x^2 - 2*x + 1"));
  const MultiPoly p = P("3*x*y - 1/2");
  EXPECT_EQ(add(p, MultiPoly(2)), p);
  EXPECT_EQ(power(p, 0), MultiPoly::constant(2, 1));
  EXPECT_THROW(add(P("x"), P("x", 3)), std::invalid_argument);
  EXPECT_THROW(multiply(P("x"), P("x", 3)), std::invalid_argument);
}

TEST(MultiPoly, PowerMatchesHandExpansionTermByTerm) {
  // (x^2 y - x + 1)^2 written out from (a + b + c)^2 = a^2 + b^2 + c^2 + 2ab + 2ac + 2bc.
  const MultiPoly a = MultiPoly::term({2, 1}, 1), b = MultiPoly::term({1, 0}, -1), c = MultiPoly::constant(2, 1);
  const MultiPoly expected = a * a + b * b + c * c + Rational(2) * (a * b + a * c + b * c);
  EXPECT_EQ(power(a + b + c, 2), expected);
  EXPECT_EQ(expected.coefficient({3, 1}), -2);
  EXPECT_EQ(expected.coefficient({2, 1}), 2);
  EXPECT_EQ(expected.size(), 6u);
}

TEST(MultiPoly, NoZeroCoefficientsStored) {
  const MultiPoly p = P("x^2 + y") - P("x^2");
  EXPECT_EQ(p, P("y"));
  EXPECT_EQ(p.size(), 1u);
  EXPECT_TRUE((P("x") - P("x")).is_zero());
  EXPECT_TRUE((P("x") * Rational(0)).is_zero());
}

TEST(MultiPoly, TotalDegree) {
  EXPECT_EQ(total_degree(P("x^6*y^4 - 2*x^5*y^3")), Degree(10));
  EXPECT_EQ(total_degree(MultiPoly(2)), Degree::neg_infinity());
  EXPECT_TRUE(total_degree(MultiPoly(2)).is_neg_infinity());
  EXPECT_EQ(total_degree(P("7/2")), Degree(0));
  EXPECT_LT(Degree::neg_infinity(), Degree(0));
  EXPECT_EQ(Degree::neg_infinity() + Degree(3), Degree::neg_infinity());
  EXPECT_THROW(Degree::neg_infinity().value(), std::logic_error);
}

TEST(MultiPoly, LeadingForm) {
  EXPECT_EQ(leading_form(P("x^3 - x")), P("x^3"));
  EXPECT_EQ(leading_form(P("x^2*y - x + 1")), P("x^2*y"));
  EXPECT_EQ(leading_form(P("x^6*y^4 - 2*x^5*y^3 + x*y^8 + 1")), P("x^6*y^4"));
  EXPECT_TRUE(leading_form(MultiPoly(2)).is_zero());
}

TEST(MultiPoly, PartialDerivative) {
  EXPECT_EQ(partial_derivative(P("x^6*y^4"), 0), P("6*x^5*y^4"));
  EXPECT_EQ(partial_derivative(P("x^6*y^4"), 1), P("4*x^6*y^3"));
  EXPECT_TRUE(partial_derivative(P("5/3"), 0).is_zero());
  EXPECT_THROW(partial_derivative(P("x"), 2), std::out_of_range);
}

TEST(MultiPoly, Substitute) {
  const MultiPoly u = P("x"), v = P("y");
  const std::vector<MultiPoly> rot{u + v, u - v};
  EXPECT_EQ(substitute(P("x^2 + y^2"), rot), P("2*x^2 + 2*y^2"));

  const MultiPoly t = P("x*y - 1");
  const MultiPoly s = P("1") + P("x") * t;
  const std::vector<MultiPoly> images{t, s};
  const MultiPoly h = substitute(P("x*y"), images);
  EXPECT_EQ(h, t * s);
  EXPECT_EQ(total_degree(h), Degree(5));

  const MultiPoly p = P("x^3*y - 2*x + 7");
  const std::vector<MultiPoly> identity{P("x"), P("y")};
  EXPECT_EQ(substitute(p, identity), p);
  EXPECT_THROW(substitute(p, std::vector<MultiPoly>{P("x")}), std::invalid_argument);
}

TEST(MultiPoly, Evaluate) {
  const std::vector<Rational> two{2, 0};
  EXPECT_EQ(evaluate(P("x^3 - x"), two), 6);
  const std::vector<Rational> ones{1, 1};
  EXPECT_EQ(evaluate(P("x*y - 1"), ones), 0);
  EXPECT_EQ(evaluate(MultiPoly(2), ones), 0);
  EXPECT_THROW(evaluate(P("x"), std::vector<Rational>{1}), std::invalid_argument);
}

TEST(MultiPoly, JacobianDeterminant) {
  EXPECT_EQ(jacobian_determinant(PolyMap({P("x"), P("y")})), P("1"));
  EXPECT_EQ(jacobian_determinant(PolyMap({P("x + y^3"), P("y - x^3")})), P("1 + 9*x^2*y^2"));
  EXPECT_EQ(jacobian_determinant(PolyMap({P("x^2"), P("y")})), P("2*x"));
  // Entry (i, j) is dp_j/dX_i.
  const PolyMatrix j = jacobian_matrix(PolyMap({P("x + y^3"), P("y - x^3")}));
  EXPECT_EQ(j[0][1], P("-3*x^2"));
  EXPECT_EQ(j[1][0], P("3*y^2"));
}

TEST(MultiPoly, DeterminantMatchesLeibnizOn3x3) {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    PolyMatrix m(3, std::vector<MultiPoly>(3, MultiPoly(2)));
    for (auto& row : m)
      for (auto& e : row) e = testing::random_poly(rng, 2, 2, 3);
    MultiPoly leibniz(2);
    const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    for (int k = 0; k < 6; ++k) {
      MultiPoly term = m[0][perms[k][0]] * m[1][perms[k][1]] * m[2][perms[k][2]];
      leibniz += k < 3 ? term : -term;
    }
    EXPECT_EQ(determinant(m), leibniz);
  }
  EXPECT_THROW(determinant(PolyMatrix{}), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Properties

TEST(MultiPolyProperty, ArithmeticAgreesWithDenseOracle) {
  Rng rng(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(testing::uniform_int(rng, 1, 3));
    const MultiPoly p = testing::random_poly(rng, n, 6, 5);
    const MultiPoly q = testing::random_poly(rng, n, 6, 5);
    const std::size_t side = 13;
    const auto dp = testing::to_dense(p, side), dq = testing::to_dense(q, side);
    EXPECT_EQ(p + q, testing::from_dense(testing::dense_add(dp, dq))) << render(p) << " | " << render(q);
    EXPECT_EQ(p * q, testing::from_dense(testing::dense_mul(dp, dq))) << render(p) << " | " << render(q);
    // Squares stay below degree 12 in every variable.
    EXPECT_EQ(power(p, 2), testing::from_dense(testing::dense_mul(dp, dp)));
  }
}

TEST(MultiPolyProperty, LeadingFormIsMultiplicativeAndHomogeneous) {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(testing::uniform_int(rng, 1, 3));
    const MultiPoly p = testing::random_nonzero_poly(rng, n, 5);
    const MultiPoly q = testing::random_nonzero_poly(rng, n, 5);
    EXPECT_EQ(leading_form(p * q), leading_form(p) * leading_form(q));
    EXPECT_TRUE(is_homogeneous(leading_form(p)));
    EXPECT_LT(total_degree(p - leading_form(p)), total_degree(p));
    std::vector<MultiPoly> identity;
    for (std::size_t v = 0; v < n; ++v) identity.push_back(MultiPoly::variable(n, v));
    EXPECT_EQ(substitute(p, identity), p);
  }
}

TEST(MultiPolyProperty, JacobianOfLinearChangeScalesByDeterminant) {
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const PolyMap f({testing::random_nonzero_poly(rng, 2, 4), testing::random_nonzero_poly(rng, 2, 4)});
    Rational a[2][2];
    do {
      for (auto& row : a)
        for (auto& v : row) v = testing::random_rational(rng, 5, 3);
    } while (a[0][0] * a[1][1] - a[0][1] * a[1][0] == 0);
    const Rational det_a = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    // X = a U, i.e. X_j = sum_i a_ij U_i.
    const MultiPoly u = MultiPoly::variable(2, 0), v = MultiPoly::variable(2, 1);
    const std::vector<MultiPoly> images{a[0][0] * u + a[1][0] * v, a[0][1] * u + a[1][1] * v};
    const PolyMap g({substitute(f[0], images), substitute(f[1], images)});
    // Direct 2x2 expansion of the composed map's Jacobian.
    const MultiPoly direct = partial_derivative(g[0], 0) * partial_derivative(g[1], 1) -
                             partial_derivative(g[0], 1) * partial_derivative(g[1], 0);
    EXPECT_EQ(jacobian_determinant(g), direct);
    EXPECT_EQ(direct, det_a * substitute(jacobian_determinant(f), images));
  }
}

}  // namespace
}  // namespace polysurj
