#include <gtest/gtest.h>

#include <stdexcept>

#include "generators.hpp"
#include "polysurj/corpus.hpp"
#include "polysurj/parser.hpp"
#include "polysurj/systems.hpp"

namespace polysurj {
namespace {

using testing::Rng;

MultiPoly P(const char* text, std::size_t nvars = 2) { return parse_poly(text, nvars); }

ProblemSpec spec_of(const char* p1, const char* p2) { return make_problem(PolyMap({P(p1), P(p2)})); }

TEST(BuildCombined, Examples) {
  ProblemSpec spec = spec_of("x^3 - x", "y");
  CombinedSystem sys = build_combined(spec, false);
  EXPECT_EQ(sys.equations, (std::vector<MultiPoly>{P("x^3 - x"), P("y")}));
  EXPECT_EQ(sys.degrees, (std::vector<Degree>{Degree(3), Degree(1)}));
  EXPECT_FALSE(sys.shifted_by_target);

  spec.target = {6, 0};
  sys = build_combined(spec, true);
  EXPECT_EQ(sys.equations, (std::vector<MultiPoly>{P("x^3 - x - 6"), P("y")}));
  EXPECT_TRUE(sys.shifted_by_target);

  ProblemSpec cube = spec_of("x", "y");
  cube.alpha = {3, 1};
  EXPECT_EQ(build_combined(cube, false).equations, (std::vector<MultiPoly>{P("x^3"), P("y")}));
}

TEST(BuildCombined, MatrixMixesComponents) {
  ProblemSpec spec = spec_of("x", "y^2");
  spec.gmatrix = {{P("1"), P("x")}, {P("y"), P("0")}};
  spec.alpha = {2, 1};
  const CombinedSystem sys = build_combined(spec, false);
  EXPECT_EQ(sys.equations[0], P("x^2 + x*y^2"));
  EXPECT_EQ(sys.equations[1], P("x^2*y"));
}

TEST(InducedHomogeneous, Examples) {
  ProblemSpec spec = spec_of("x^3 - x", "y");
  spec.target = {6, 0};
  const HomogSystem h = induced_homogeneous(build_combined(spec, true));
  EXPECT_EQ(h.forms, (std::vector<MultiPoly>{P("x^3"), P("y")}));

  ProblemSpec zero = spec_of("x", "y");
  zero.gmatrix = {{P("1"), P("0")}, {P("0"), P("0")}};
  const HomogSystem hz = induced_homogeneous(build_combined(zero, false));
  EXPECT_TRUE(hz.forms[1].is_zero());
  EXPECT_TRUE(hz.degrees[1].is_neg_infinity());
  EXPECT_TRUE(hz.well_formed());
}

TEST(InducedHomogeneous, PinchukProductEquation) {
  const PinchukMap m = build_pinchuk();
  ProblemSpec spec = make_problem(PolyMap({m.p * partial_derivative(m.p, 0), P("y")}));
  EXPECT_EQ(induced_homogeneous(build_combined(spec, false)).forms[0], P("6*x^11*y^8"));
}

TEST(Homogenize, Examples) {
  ProblemSpec spec = spec_of("x^3 - x", "y");
  spec.target = {6, 0};
  const HomogSystem h = homogenize(build_combined(spec, true));
  EXPECT_EQ(h.nvars, 3u);
  EXPECT_EQ(h.forms[0], P("x^3 - x*z^2 - 6*z^3", 3));
  EXPECT_EQ(h.forms[1], P("y", 3));
  EXPECT_TRUE(h.well_formed());
  EXPECT_EQ(drop_trailing_variable(h.forms[0], 0), P("x^3"));

  const HomogSystem already = homogenize(build_combined(spec_of("x^3", "y"), false));
  EXPECT_EQ(already.forms, (std::vector<MultiPoly>{P("x^3", 3), P("y", 3)}));

  ProblemSpec zero = spec_of("x", "y");
  zero.gmatrix = {{P("1"), P("0")}, {P("0"), P("0")}};
  EXPECT_THROW(homogenize(build_combined(zero, false)), std::invalid_argument);
}

TEST(TopPair, Examples) {
  auto ok = build_top_pair_system(spec_of("x^3 + 2*y^3 + x", "3*x - y + 1"));
  ASSERT_TRUE(ok.ok());
  EXPECT_EQ(ok->system.forms, (std::vector<MultiPoly>{P("x^3 + 2*y^3"), P("3*x - y")}));
  EXPECT_EQ(ok->selector, (std::vector<std::size_t>{0, 1}));

  auto even = build_top_pair_system(spec_of("x^2", "y"));
  ASSERT_FALSE(even.ok());
  EXPECT_EQ(even.failure().row, 0);
  EXPECT_NE(even.failure().reason.find("even"), std::string::npos);

  ProblemSpec tie = spec_of("x^3", "x^3");
  tie.gmatrix = {{P("1"), P("1")}, {P("1"), P("-1")}};
  auto tied = build_top_pair_system(tie);
  ASSERT_FALSE(tied.ok());
  EXPECT_EQ(tied.failure().row, 0);
  EXPECT_NE(tied.failure().reason.find("tie"), std::string::npos);
}

TEST(ColumnSystem, Examples) {
  const PolyMatrix g1 = {{P("x"), P("1")}, {P("y"), P("1")}};
  auto c1 = build_column_system(g1, 0);
  ASSERT_TRUE(c1.ok());
  EXPECT_EQ(c1->forms, (std::vector<MultiPoly>{P("x"), P("y")}));

  const PolyMatrix g2 = {{P("x^3"), P("1")}, {P("x + y"), P("1")}};
  auto c2 = build_column_system(g2, 0);
  ASSERT_TRUE(c2.ok());
  EXPECT_EQ(c2->forms, (std::vector<MultiPoly>{P("x^3"), P("x + y")}));

  EXPECT_FALSE(build_column_system(g1, 1).ok());
  EXPECT_FALSE(build_column_system(g2, 1).ok());
}

TEST(JacobianProductSystem, Examples) {
  const PinchukMap m = build_pinchuk();
  auto j1 = build_jacobian_product_system(m.map(), 0);
  ASSERT_TRUE(j1.ok());
  EXPECT_EQ(j1->forms, (std::vector<MultiPoly>{P("6*x^11*y^8"), P("4*x^12*y^7")}));
  auto j2 = build_jacobian_product_system(m.map(), 1);
  ASSERT_TRUE(j2.ok());
  EXPECT_EQ(j2->forms[0].size(), 1u);
  EXPECT_EQ(j2->forms[0].leading_term().first, (Monomial{29, 20}));
  EXPECT_EQ(j2->forms[1].leading_term().first, (Monomial{30, 19}));
  EXPECT_GT(j2->forms[0].leading_term().second, 0);
  EXPECT_GT(j2->forms[1].leading_term().second, 0);

  auto lin = build_jacobian_product_system(PolyMap({P("x"), P("y")}), 0);
  ASSERT_TRUE(lin.ok());
  EXPECT_EQ(lin->forms[0], P("x"));
  EXPECT_TRUE(lin->forms[1].is_zero());
  EXPECT_TRUE(lin->degrees[1].is_neg_infinity());

  EXPECT_FALSE(build_jacobian_product_system(PolyMap({P("3"), P("y")}), 0).ok());
}

TEST(PowerGradientSystem, Examples) {
  auto shear = build_power_gradient_system(PolyMap({P("x + y^3"), P("y - x^3")}), {2, 2});
  ASSERT_TRUE(shear.ok());
  EXPECT_EQ(shear->forms, (std::vector<MultiPoly>{P("6*x^5"), P("6*y^5")}));

  auto lin = build_power_gradient_system(PolyMap({P("x"), P("y")}), {2, 2});
  ASSERT_TRUE(lin.ok());
  EXPECT_EQ(lin->forms, (std::vector<MultiPoly>{P("2*x"), P("2*y")}));

  EXPECT_FALSE(build_power_gradient_system(PolyMap({P("x"), P("y")}), {2, 3}).ok());
}

// ---------------------------------------------------------------------------
// Properties

ProblemSpec random_nondegenerate_spec(Rng& rng, std::size_t n) {
  for (;;) {
    ProblemSpec spec = testing::random_spec(rng, n);
    for (auto& t : spec.target) t = testing::random_rational(rng);
    bool ok = true;
    for (const auto& e : build_combined(spec, true).equations) ok = ok && !e.is_zero();
    for (const auto& e : build_combined(spec, false).equations) ok = ok && !e.is_zero();
    if (ok) return spec;
  }
}

TEST(HomogenizeProperty, SpecializationsRecoverTheSystem) {
  Rng rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(testing::uniform_int(rng, 1, 3));
    const ProblemSpec spec = random_nondegenerate_spec(rng, n);
    for (bool shift : {false, true}) {
      const CombinedSystem sys = build_combined(spec, shift);
      const HomogSystem h = homogenize(sys);
      ASSERT_TRUE(h.well_formed());
      for (std::size_t i = 0; i < n; ++i) {
        EXPECT_EQ(h.degrees[i], sys.degrees[i]);
        EXPECT_EQ(drop_trailing_variable(h.forms[i], 1), sys.equations[i]);
        EXPECT_EQ(drop_trailing_variable(h.forms[i], 0), leading_form(sys.equations[i]));
      }
      if (!shift) {
        const HomogSystem induced = induced_homogeneous(sys);
        for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(drop_trailing_variable(h.forms[i], 0), induced.forms[i]);
      }
    }
  }
}

TEST(TopPairProperty, MatchesInducedSystemForOddMaps) {
  Rng rng(1717);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<MultiPoly> comps;
    for (int j = 0; j < 2; ++j) {
      const unsigned d = 2 * static_cast<unsigned>(testing::uniform_int(rng, 0, 2)) + 1;
      MultiPoly p = testing::random_poly(rng, 2, d - 1, 4);
      p += MultiPoly::term({d, 0}, testing::random_nonzero_rational(rng));
      p += MultiPoly::term({0, d}, testing::random_nonzero_rational(rng));
      comps.push_back(std::move(p));
    }
    const ProblemSpec spec = make_problem(PolyMap(std::move(comps)));
    auto top = build_top_pair_system(spec);
    ASSERT_TRUE(top.ok());
    EXPECT_EQ(top->system.forms, induced_homogeneous(build_combined(spec, false)).forms);
    EXPECT_TRUE(top->system.well_formed());
    ++checked;
  }
  EXPECT_EQ(checked, 100);
}

TEST(SystemsProperty, EveryBuiltFormIsHomogeneous) {
  Rng rng(2626);
  for (int trial = 0; trial < 100; ++trial) {
    const ProblemSpec spec = testing::random_spec(rng, 2);
    EXPECT_TRUE(induced_homogeneous(build_combined(spec, false)).well_formed());
    EXPECT_TRUE(leading_form_system(spec.map).well_formed());
    for (std::size_t j = 0; j < 2; ++j) {
      if (auto s = build_jacobian_product_system(spec.map, j)) EXPECT_TRUE(s->well_formed());
      if (auto s = build_column_system(spec.gmatrix, j)) EXPECT_TRUE(s->well_formed());
    }
    if (auto s = build_power_gradient_system(spec.map, {2, 4})) EXPECT_TRUE(s->well_formed());
    if (auto s = build_top_pair_system(spec)) EXPECT_TRUE(s->system.well_formed());
  }
}

}  // namespace
}  // namespace polysurj
