#include <gtest/gtest.h>

#include "euler/errors.hpp"
#include "euler/fold.hpp"
#include "euler/quadric.hpp"
#include "helpers.hpp"

using namespace euler;
using namespace testing_helpers;

TEST(Validate, Examples) {
  auto r = free_ring({"x", "y"});
  EXPECT_NO_THROW(validate(point(r, {"x", "y"}, {"0", "0"}, "0")));
  auto q = free_ring({"x"});
  EXPECT_NO_THROW(validate(point(q, {"x"}, {"1 - x"}, "x")));
}

TEST(Validate, ViolationCarriesResidual) {
  auto q = free_ring({"x"});
  QuadricPoint bad = point(q, {"x"}, {"1"}, "0");
  EXPECT_EQ(bad.residual(), el(q, "x"));
  try {
    validate(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EquationViolated);
    EXPECT_NE(std::string(e.what()).find("x"), std::string::npos);
  }
  EXPECT_FALSE(is_valid(bad));
}

TEST(Validate, ArityMismatch) {
  auto q = free_ring({"x"});
  try {
    QuadricPoint(els(q, {"x", "x"}), els(q, {"1"}), el(q, "0"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ArityMismatch);
  }
}

TEST(Homotopy, BridgeExample) {
  auto q = free_ring({"x"});
  Homotopy h = base_bridge(q, 1);
  EXPECT_NO_THROW(validate(h));
  EXPECT_EQ(h.start(), point(q, {"0"}, {"1"}, "0"));
  EXPECT_EQ(h.end(), point(q, {"0"}, {"1"}, "1"));
  EXPECT_EQ(h.reversed().start(), h.end());
  EXPECT_EQ(h.reversed().end(), h.start());
}

TEST(Homotopy, EndpointsOfValidHomotopiesValidate) {
  auto q = free_ring({"x", "y"});
  RingPtr qt = q->homotopy_extension();
  // Linear interpolations of a along a fixed b = 0, s = 0 always validate.
  for (const char* a : {"x*T", "T^2 - T*y", "x + T*y"}) {
    Homotopy h(QuadricPoint(els(qt, {a, "y"}), els(qt, {"0", "0"}), el(qt, "0")));
    ASSERT_TRUE(is_valid(h));
    EXPECT_TRUE(is_valid(h.start()));
    EXPECT_TRUE(is_valid(h.end()));
  }
  Homotopy c = constant_homotopy(point(q, {"x"}, {"1 - x"}, "x"));
  EXPECT_TRUE(is_valid(c));
  EXPECT_EQ(c.start(), c.end());
}

TEST(VanishingIdeal, Examples) {
  auto q = free_ring({"x"});
  EXPECT_EQ(vanishing_ideal(point(q, {"x"}, {"1 - x"}, "x")), ideal(q, {"x"}));
  EXPECT_TRUE(vanishing_ideal(base_point(q, 1)).is_unit());
  auto r = free_ring({"x", "y"});
  EXPECT_EQ(vanishing_ideal(point(r, {"x", "y"}, {"0", "0"}, "0")), ideal(r, {"x", "y"}));
}

TEST(VanishingIdeal, OrientationGenerationProperty) {
  auto r = free_ring({"x", "y"});
  const std::vector<QuadricPoint> points = {
      point(r, {"x", "y"}, {"0", "0"}, "0"),
      point(r, {"x^2 - x", "y"}, {"-1", "0"}, "x"),
      point(r, {"x - x^2", "y"}, {"1", "0"}, "x"),
      point(r, {"x", "y^2"}, {"1 - x", "0"}, "x"),
      base_point(r, 2),
  };
  for (const auto& v : points) {
    ASSERT_TRUE(is_valid(v)) << v.to_string();
    Ideal I = vanishing_ideal(v);
    Ideal lhs = ideal_sum(Ideal(r, v.a()), ideal_power(I, 2));
    EXPECT_TRUE(lhs.contains(v.s())) << v.to_string();
  }
}

TEST(Device, VariableAndRelationCounts) {
  auto d1 = jouanolou_device(1, CoefficientField::rationals());
  EXPECT_EQ(d1.ring->nvars(), 10u);
  EXPECT_EQ(d1.ring->relations().size(), 3u);
  auto d2 = jouanolou_device(2, CoefficientField::rationals());
  EXPECT_EQ(d2.ring->nvars(), 16u);
  EXPECT_EQ(d2.ring->relations().size(), 3u);
}

TEST(Device, RelationsAsDisplayed) {
  auto d = jouanolou_device(1, CoefficientField::rationals());
  const RingPtr& R = d.ring;
  RingElement one = RingElement::one(R);
  EXPECT_TRUE((d.x(0) * d.y(0) - d.z() * (one - d.z())).is_zero());
  EXPECT_TRUE((d.xp(0) * d.yp(0) - d.zp() * (one - d.zp())).is_zero());
  EXPECT_TRUE((d.u(0) * d.x(0) + d.v(0) * d.xp(0) + d.u(1) * d.z() + d.v(1) * d.zp() - one).is_zero());
}

TEST(Device, FiniteFieldBaseChange) {
  auto d = jouanolou_device(1, CoefficientField::prime(5));
  EXPECT_EQ(d.ring->nvars(), 10u);
  EXPECT_EQ(d.ring->field().name(), CoefficientField::prime(5).name());
  // 6 z = z over F_5.
  EXPECT_EQ(d.z().scaled(Coeff(6)), d.z());
}

TEST(Device, UnsupportedN) {
  try {
    jouanolou_device(0, CoefficientField::rationals());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedN);
  }
}

TEST(Device, SectionsAreWellDefined) {
  for (std::size_t n : {1u, 2u}) {
    auto d = jouanolou_device(n, CoefficientField::rationals());
    auto q = quadric_ring(n, CoefficientField::rationals());
    EXPECT_TRUE(left_section(d, q).well_defined());
    EXPECT_TRUE(right_section(d, q).well_defined());
  }
}

TEST(FoldMap, DisplayedFormulaForN1) {
  FoldMap F = fold_map(1, CoefficientField::rationals());
  const auto& d = F.device;
  RingElement c1 = d.xp(0) * (d.u(0) * d.x(0) + d.u(1) * d.z()) + d.x(0) * (d.v(0) * d.xp(0) + d.v(1) * d.zp());
  EXPECT_EQ(F.c_displayed[0], c1);
}

TEST(FoldMap, N1RestrictsToIdentityAndSatisfiesEquation) {
  FoldMap F = fold_map(1, CoefficientField::rationals());
  EXPECT_TRUE(F.point().residual().is_zero());
  QuadricPoint id = identity_point(F.quadric);
  EXPECT_EQ(F.restrict_left(), id);
  EXPECT_EQ(F.restrict_right(), id);
}

TEST(FoldMap, UnsupportedN) {
  try {
    fold_map(3, CoefficientField::rationals());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedN);
  }
}
