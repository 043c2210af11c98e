#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "poncelet/families.hpp"
#include "poncelet/geometry.hpp"

using namespace poncelet;

namespace {

// Coefficients scaled so that the entry with the largest magnitude is +1 or -1
// and then matched in sign to `ref`.
void expect_proportional(const ConicImplicit& c, std::array<double, 6> ref, double tol) {
  const auto got = c.coefficients();
  std::size_t k = 0;
  for (std::size_t i = 0; i < 6; ++i)
    if (std::abs(ref[i]) > std::abs(ref[k])) k = i;
  const double s = ref[k] / got[k];
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(got[i] * s, ref[i], tol) << "coefficient " << i;
}

const Triangle kRight{{0, 0}, {4, 0}, {0, 3}};

}  // namespace

TEST(Trilinear, EquilateralUnitWeightsGiveCentroid) {
  const Triangle eq{{1, 0}, {-0.5, std::sqrt(3.0) / 2}, {-0.5, -std::sqrt(3.0) / 2}};
  const Point p = trilinear_to_cartesian(eq, {1, 1, 1});
  EXPECT_NEAR(p.x, 0.0, 1e-15);
  EXPECT_NEAR(p.y, 0.0, 1e-15);
}

TEST(Trilinear, RightTriangleIncenter) {
  const Point p = trilinear_to_cartesian(kRight, {1, 1, 1});
  EXPECT_NEAR(p.x, 1.0, 1e-14);
  EXPECT_NEAR(p.y, 1.0, 1e-14);
  // Equidistant (inradius 1) from all three sidelines.
  EXPECT_NEAR(std::abs(Line::through(kRight.v2, kRight.v3).signed_distance(p)), 1.0, 1e-14);
}

TEST(Trilinear, BrocardMidpointMatchesBarycentricForm) {
  const auto s = sidelengths(kRight);
  const double a = s[0], b = s[1], c = s[2];
  const Point p = trilinear_to_cartesian(kRight, {a * (b * b + c * c), b * (a * a + c * c), c * (a * a + b * b)});
  const Point q = oracle::x39(kRight);
  EXPECT_NEAR(p.x, q.x, 1e-14);
  EXPECT_NEAR(p.y, q.y, 1e-14);
}

TEST(Trilinear, CollinearVerticesThrow) {
  try {
    trilinear_to_cartesian({{0, 0}, {1, 1}, {2, 2}}, {1, 1, 1});
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateTriangle);
  }
}

TEST(FivePointConic, UnitCircle) {
  std::array<Point, 5> pts;
  for (int i = 0; i < 5; ++i) pts[i] = {std::cos(0.3 + 1.1 * i), std::sin(0.3 + 1.1 * i)};
  expect_proportional(conic_through_five_points(std::span<const Point, 5>(pts)), {1, 0, 1, 0, 0, -1}, 1e-10);
}

TEST(FivePointConic, KnownEllipse) {
  std::array<Point, 5> pts;
  for (int i = 0; i < 5; ++i) pts[i] = {2 * std::cos(0.2 + 1.3 * i), std::sin(0.2 + 1.3 * i)};
  const auto c = conic_through_five_points(std::span<const Point, 5>(pts));
  expect_proportional(c, {1, 0, 4, 0, 0, -4}, 1e-10);
  for (const Point& p : pts) EXPECT_LT(std::abs(c.evaluate(p)), 1e-9);
}

TEST(FivePointConic, SteinerEllipseCenteredAtVertexAverage) {
  // Homothetic triangle of the (2, 1) pair plus two more points of the outer ellipse.
  std::array<Point, 5> pts;
  const double t = 0.37;
  for (int i = 0; i < 3; ++i) pts[i] = {2 * std::cos(t + 2 * kPi * i / 3), std::sin(t + 2 * kPi * i / 3)};
  pts[3] = {2 * std::cos(1.0), std::sin(1.0)};
  pts[4] = {2 * std::cos(2.5), std::sin(2.5)};
  const Point ctr = conic_through_five_points(std::span<const Point, 5>(pts)).center();
  const Point avg = oracle::centroid({pts[0], pts[1], pts[2]});
  EXPECT_NEAR(ctr.x, avg.x, 1e-10);
  EXPECT_NEAR(ctr.y, avg.y, 1e-10);
}

TEST(FivePointConic, ResidualOnRandomConics) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const Ellipse e = Ellipse::make({u(rng), u(rng)}, 1 + std::abs(u(rng)), 0.2 + std::abs(u(rng)) / 3, u(rng));
    std::array<Point, 5> pts;
    for (int i = 0; i < 5; ++i) pts[i] = e.point_at(u(rng));
    const auto c = conic_through_five_points(std::span<const Point, 5>(pts));
    for (const Point& p : pts) EXPECT_LT(std::abs(c.evaluate(p)), 1e-9);
  }
}

TEST(FivePointConic, PointAtInfinityRow) {
  // Hyperbola xy = 1 through four finite points and its asymptotic direction (1, 0).
  std::array<HomogeneousPoint, 5> pts{HomogeneousPoint::from({1, 1}), HomogeneousPoint::from({2, 0.5}),
                                      HomogeneousPoint::from({-1, -1}), HomogeneousPoint::from({0.25, 4}),
                                      HomogeneousPoint{1, 0, 0}};
  const auto c = conic_through_five_points(std::span<const HomogeneousPoint, 5>(pts));
  expect_proportional(c, {0, 0.5, 0, 0, 0, -1}, 1e-10);
}

TEST(AxisRatio, CircleAndEllipse) {
  EXPECT_NEAR(conic_axis_ratio(ConicImplicit::normalized({1, 0, 1, 0, 0, -1})), 1.0, 1e-15);
  EXPECT_NEAR(conic_axis_ratio(ConicImplicit::normalized({1, 0, 4, 0, 0, -4})), 2.0, 1e-14);
}

TEST(AxisRatio, InvariantUnderCoefficientScaleAndRigidMotion) {
  std::array<Point, 5> pts;
  for (int i = 0; i < 5; ++i) pts[i] = {3 * std::cos(0.4 + 1.2 * i), 1.3 * std::sin(0.4 + 1.2 * i)};
  const double base = conic_axis_ratio(conic_through_five_points(std::span<const Point, 5>(pts)));
  EXPECT_NEAR(base, 3 / 1.3, 1e-10);

  auto c = conic_through_five_points(std::span<const Point, 5>(pts));
  const ConicImplicit scaled{-7 * c.a20, -7 * c.a11, -7 * c.a02, -7 * c.a10, -7 * c.a01, -7 * c.a00};
  EXPECT_NEAR(conic_axis_ratio(scaled), base, 1e-12);

  std::array<Point, 5> moved;
  for (int i = 0; i < 5; ++i) moved[i] = rotate(pts[i], 0.9) + Point{4, -2};
  EXPECT_NEAR(conic_axis_ratio(conic_through_five_points(std::span<const Point, 5>(moved))), base, 1e-9);
}

TEST(Tangents, UnitCircleFromTwoZero) {
  const auto tp = tangent_lines_from_point(Ellipse::circle({0, 0}, 1), {2, 0});
  for (const Line& l : {tp.first, tp.second}) {
    EXPECT_NEAR(std::abs(l.signed_distance({0, 0})), 1.0, 1e-14);
    EXPECT_NEAR(l.signed_distance({2, 0}), 0.0, 1e-14);
  }
  EXPECT_NEAR(tp.touch_first.x, 0.5, 1e-14);
  EXPECT_NEAR(tp.touch_second.x, 0.5, 1e-14);
  EXPECT_NEAR(std::abs(tp.touch_first.y), std::sqrt(3.0) / 2, 1e-14);
  EXPECT_NEAR(tp.touch_first.y, -tp.touch_second.y, 1e-14);
}

TEST(Tangents, EllipseSymmetricPairWithZeroDiscriminant) {
  const Ellipse e = Ellipse::make({0, 0}, 1, 0.5);
  const auto tp = tangent_lines_from_point(e, {2, 0});
  EXPECT_NEAR(tp.touch_first.y, -tp.touch_second.y, 1e-14);
  for (const Line& l : {tp.first, tp.second}) {
    const Point d = l.direction();
    EXPECT_LT(oracle::tangency_defect(1, 0.5, {2, 0}, Point{2, 0} + d), 1e-10);
    EXPECT_LT(focal_tangency_residual(e, l), 1e-10);
  }
}

TEST(Tangents, BoundaryPointGivesDuplicatedTangent) {
  const Ellipse e = Ellipse::make({0, 0}, 2, 1);
  const Point p = e.point_at(0.8);
  const auto tp = tangent_lines_from_point(e, p);
  EXPECT_NEAR(std::abs(dot(tp.first.n, tp.second.n)), 1.0, 1e-12);
  EXPECT_NEAR(distance(tp.touch_first, p), 0.0, 1e-12);
  EXPECT_LT(focal_tangency_residual(e, tp.first), 1e-10);
}

TEST(Tangents, InteriorPointThrows) {
  try {
    tangent_lines_from_point(Ellipse::make({0, 0}, 2, 1), {0.1, 0.2});
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::PointInsideEllipse);
  }
}

TEST(Tangents, FocalProductOnRandomEllipses) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 500; ++trial) {
    const Ellipse e = Ellipse::make({2 * u(rng), 2 * u(rng)}, 1.5 + u(rng), 0.3 + 0.25 * (1 + u(rng)), 3 * u(rng));
    const Point p = e.from_local({(e.a + 0.1 + std::abs(3 * u(rng))) * u(rng) * 2, e.b * 5 + u(rng)});
    const auto tp = tangent_lines_from_point(e, p);
    EXPECT_LT(focal_tangency_residual(e, tp.first), 1e-9);
    EXPECT_LT(focal_tangency_residual(e, tp.second), 1e-9);
  }
}

TEST(SimilarityMap, Examples) {
  const Point id = apply_similarity(Similarity{1, 0, {0, 0}}, Point{3, 4});
  EXPECT_EQ(id, (Point{3, 4}));
  const Point r = apply_similarity(Similarity{2, kPi / 2, {0, 0}}, Point{1, 0});
  EXPECT_NEAR(r.x, 0.0, 1e-15);
  EXPECT_NEAR(r.y, 2.0, 1e-15);
  const Point t = apply_similarity(Similarity{3, 0, {-1, -1}}, Point{2, 2});
  EXPECT_NEAR(t.x, 3.0, 1e-15);
  EXPECT_NEAR(t.y, 3.0, 1e-15);
}

TEST(SimilarityMap, PreservesAnglesAndComposes) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-4, 4);
  for (int trial = 0; trial < 1000; ++trial) {
    const Triangle tri = oracle::random_triangle(rng);
    const Similarity s1{0.1 + std::abs(u(rng)), u(rng), {u(rng), u(rng)}};
    const Similarity s2{0.1 + std::abs(u(rng)), u(rng), {u(rng), u(rng)}};
    const Triangle img = apply_similarity(s1, tri);
    const auto before = oracle::angles(tri), after = oracle::angles(img);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(before[i], after[i], 1e-10);

    const Triangle twice = apply_similarity(s2, img);
    const Triangle once = apply_similarity(Similarity::compose(s2, s1), tri);
    EXPECT_LT(vertex_set_distance(twice, once), 1e-10);
  }
}

TEST(Lines, IntersectAndParallel) {
  const Point p = intersect(Line::through({0, 0}, {1, 1}), Line::through({0, 1}, {1, 0}));
  EXPECT_NEAR(p.x, 0.5, 1e-15);
  EXPECT_NEAR(p.y, 0.5, 1e-15);
  EXPECT_THROW(intersect(Line::through({0, 0}, {1, 0}), Line::through({0, 1}, {1, 1})), GeometryError);
  const HomogeneousPoint h = meet(Line::through({0, 0}, {1, 0}), Line::through({0, 1}, {1, 1}));
  EXPECT_TRUE(h.at_infinity());
  EXPECT_NEAR(std::abs(unit(h.direction()).x), 1.0, 1e-15);
}

TEST(Circles, ThroughThreePointsAgreesWithBisectors) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    const Triangle tri = oracle::random_triangle(rng);
    const auto [c, r] = circle_through(tri.v1, tri.v2, tri.v3);
    const Point o = oracle::circumcenter(tri);
    EXPECT_LT(distance(c, o), 1e-9 * (1 + norm(o)));
    EXPECT_NEAR(r, circumradius(tri), 1e-9 * r);
  }
  EXPECT_THROW(circle_through({0, 0}, {1, 0}, {2, 0}), GeometryError);
}

TEST(EllipseType, MakeSwapsAxesAndWrapsAngle) {
  const Ellipse e = Ellipse::make({0, 0}, 1, 2, 0.0);
  EXPECT_EQ(e.a, 2);
  EXPECT_EQ(e.b, 1);
  EXPECT_NEAR(e.theta, kPi / 2, 1e-15);
  EXPECT_THROW(Ellipse::make({0, 0}, 1, 0), GeometryError);
  const Ellipse back = to_ellipse(ConicImplicit::from_ellipse(Ellipse::make({1, -2}, 3, 1, 0.4)));
  EXPECT_NEAR(back.a, 3, 1e-12);
  EXPECT_NEAR(back.b, 1, 1e-12);
  EXPECT_NEAR(back.theta, 0.4, 1e-12);
  EXPECT_NEAR(back.center.x, 1, 1e-12);
  EXPECT_NEAR(back.center.y, -2, 1e-12);
}
