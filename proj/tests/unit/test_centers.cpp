#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "poncelet/centers.hpp"
#include "poncelet/families.hpp"

using namespace poncelet;

namespace {

const Triangle kEquilateral{{1, 0}, {-0.5, std::sqrt(3.0) / 2}, {-0.5, -std::sqrt(3.0) / 2}};
const Triangle kRight{{0, 0}, {4, 0}, {0, 3}};

void expect_near(Point p, Point q, double tol) {
  EXPECT_NEAR(p.x, q.x, tol);
  EXPECT_NEAR(p.y, q.y, tol);
}

}  // namespace

TEST(BrocardAngle, EquilateralAndRightTriangle) {
  EXPECT_NEAR(brocard_angle(kEquilateral), kPi / 6, 1e-15);
  EXPECT_NEAR(1 / std::tan(brocard_angle(kRight)), 25.0 / 12.0, 1e-14);
  EXPECT_NEAR(oracle::cot_brocard_from_angles(kRight), 25.0 / 12.0, 1e-14);
}

TEST(BrocardAngle, DegenerateThrows) {
  try {
    brocard_angle({{0, 0}, {1, 0}, {3, 0}});
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateTriangle);
  }
}

TEST(BrocardPoints, EquilateralCollapseToCentroid) {
  const auto [o1, o2] = brocard_points(kEquilateral);
  expect_near(o1, {0, 0}, 1e-15);
  expect_near(o2, {0, 0}, 1e-15);
}

TEST(BrocardPoints, PorismFociWithFixedOrder) {
  for (double t : parameter_grid(50)) {
    const auto [o1, o2] = brocard_points(brocard_triangle(1, 0.8, t));
    expect_near(o1, {-0.6, 0}, 1e-10);
    expect_near(o2, {0.6, 0}, 1e-10);
  }
}

TEST(BrocardPoints, MatchRotatedRayConstruction) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 2000; ++trial) {
    const Triangle tri = oracle::ccw(oracle::random_triangle(rng));
    const auto [o1, o2] = brocard_points(tri);
    const double scale = length_scale(tri);
    EXPECT_LT(distance(o1, oracle::brocard_first(tri)), 1e-9 * scale);
    EXPECT_LT(distance(o2, oracle::brocard_second(tri)), 1e-9 * scale);
    EXPECT_LT(brocard_concurrence_residual(tri, brocard_angle(tri), o1), 1e-9);
  }
}

TEST(BrocardPoints, ShailDistance) {
  EXPECT_LT(shail_check(kEquilateral), 1e-12);
  EXPECT_LT(shail_check(kRight), 1e-9);
  EXPECT_LT(brocard_sine_diagnostic(kRight), 1e-12);
}

TEST(Centers, EquilateralAllCoincide) {
  for (CenterId id : {CenterId::X2, CenterId::X3, CenterId::X6, CenterId::X39, CenterId::X182})
    expect_near(triangle_center(kEquilateral, id), {0, 0}, 1e-14);
}

TEST(Centers, AgainstIndependentFormulas) {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 2000; ++trial) {
    const Triangle tri = oracle::random_triangle(rng);
    const double tol = 1e-9 * (1 + norm(oracle::circumcenter(tri)));
    expect_near(triangle_center(tri, CenterId::X2), oracle::centroid(tri), 1e-12);
    expect_near(triangle_center(tri, CenterId::X3), oracle::circumcenter(tri), tol);
    expect_near(triangle_center(tri, CenterId::X6), oracle::symmedian(tri), 1e-10);
    expect_near(triangle_center(tri, CenterId::X39), oracle::x39(tri), 1e-10);
    const Triangle c = oracle::ccw(tri);
    expect_near(triangle_center(tri, CenterId::X39), midpoint(oracle::brocard_first(c), oracle::brocard_second(c)),
                1e-9);
    expect_near(triangle_center(tri, CenterId::X182),
                midpoint(oracle::circumcenter(tri), oracle::symmedian(tri)), tol);
  }
}

TEST(Centers, PorismStationaryValues) {
  for (double t : parameter_grid(100)) {
    const Triangle tri = brocard_triangle(1, 0.8, t);
    expect_near(triangle_center(tri, CenterId::X3), {0, -1.374773}, 1e-6);
    expect_near(triangle_center(tri, CenterId::X39), {0, 0}, 1e-10);
  }
}

TEST(Centers, PorismFourPointsConcyclic) {
  for (double t : parameter_grid(100)) {
    const Triangle tri = brocard_triangle(1, 0.8, t);
    const auto [o1, o2] = brocard_points(tri);
    const auto [c, r] = circle_through(o1, o2, triangle_center(tri, CenterId::X3));
    EXPECT_NEAR(distance(c, triangle_center(tri, CenterId::X6)), r, 1e-9);
  }
}

TEST(Centers, ParseNames) {
  EXPECT_EQ(parse_center_id("X39"), CenterId::X39);
  EXPECT_EQ(parse_center_id("X182"), CenterId::X182);
  EXPECT_FALSE(parse_center_id("X7").has_value());
  EXPECT_EQ(to_string(CenterId::X6), "X6");
}

TEST(SteinerEllipse, EquilateralIsCircumcircle) {
  const Ellipse e = to_ellipse(steiner_circumellipse(kEquilateral));
  EXPECT_NEAR(e.a, 1, 1e-12);
  EXPECT_NEAR(e.b, 1, 1e-12);
  EXPECT_NEAR(norm(e.center), 0, 1e-12);
}

TEST(SteinerEllipse, HomotheticTriangleGivesOuterEllipse) {
  for (double t : parameter_grid(60)) {
    const Ellipse e = to_ellipse(steiner_circumellipse(homothetic_triangle(2, 1, t)));
    EXPECT_NEAR(e.a, 2, 1e-10);
    EXPECT_NEAR(e.b, 1, 1e-10);
    EXPECT_NEAR(norm(e.center), 0, 1e-10);
    EXPECT_NEAR(std::sin(e.theta), 0, 1e-10);
  }
}

TEST(SteinerEllipse, PorismAxisRatio) {
  for (double t : parameter_grid(60))
    EXPECT_NEAR(conic_axis_ratio(steiner_circumellipse(brocard_triangle(1, 0.8, t))), 2.188901, 1e-6);
}

TEST(BrocardInellipse, EquilateralIncircle) {
  const Ellipse e = brocard_inellipse(kEquilateral);
  const double s = std::sqrt(3.0);
  EXPECT_NEAR(e.a, s / (2 * s), 1e-12);
  EXPECT_NEAR(e.b, s / (2 * s), 1e-12);
}

TEST(BrocardInellipse, RoundTripRecoversCaustic) {
  for (double t : parameter_grid(200)) {
    const Ellipse e = brocard_inellipse(brocard_triangle(1, 0.8, t));
    EXPECT_NEAR(e.a, 1, 1e-8);
    EXPECT_NEAR(e.b, 0.8, 1e-8);
    EXPECT_NEAR(norm(e.center), 0, 1e-8);
  }
}

TEST(BrocardInellipse, HomotheticAspect) {
  for (double t : parameter_grid(60)) {
    const Ellipse e = brocard_inellipse(homothetic_triangle(2, 1, t));
    EXPECT_NEAR(e.a / e.b, std::sqrt(91.0) / 8, 1e-9);
  }
}

TEST(Properties, RandomTriangles) {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 10000; ++trial) {
    const Triangle tri = oracle::random_triangle(rng);
    const auto chk = brocard_angle_check(tri);
    EXPECT_LT(chk.discrepancy, 1e-10);
    EXPECT_NEAR(chk.cot_from_angles, oracle::cot_brocard_from_angles(tri), 1e-8 * chk.cot_from_angles);
    EXPECT_LE(brocard_angle(tri), kPi / 6 + 1e-15);
    const auto b2 = brocard_inellipse_b2(tri);
    const double mx = std::max({b2[0], b2[1], b2[2]}), mn = std::min({b2[0], b2[1], b2[2]});
    EXPECT_LT((mx - mn) / mx, 1e-9);
  }
}

TEST(Properties, ThirtyDegreesOnlyWhenEquilateral) {
  EXPECT_NEAR(brocard_angle(kEquilateral), kPi / 6, 1e-15);
  const Triangle near{{1, 0}, {-0.5, 0.87}, {-0.5, -0.866}};
  EXPECT_LT(brocard_angle(near), kPi / 6 - 1e-7);
}
