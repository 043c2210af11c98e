#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <utility>

#include "poncelet/error.hpp"

namespace poncelet {

inline constexpr double kPi = 3.14159265358979323846;

/// Relative tolerance shared by every check in the library. The CLI overrides
/// it per run with `--tol`.
struct Tolerance {
  double rel = 1e-9;
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator-(Point a) { return {-a.x, -a.y}; }
  friend constexpr Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend constexpr Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr Point operator/(Point a, double s) { return {a.x / s, a.y / s}; }
  friend constexpr bool operator==(Point, Point) = default;
};

constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
constexpr Point midpoint(Point a, Point b) { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }
/// Counterclockwise quarter turn.
constexpr Point perp(Point a) { return {-a.y, a.x}; }
inline Point rotate(Point a, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * a.x - s * a.y, s * a.x + c * a.y};
}
inline Point unit(Point a) { return a / norm(a); }
inline bool is_finite(Point a) { return std::isfinite(a.x) && std::isfinite(a.y); }

/// Oriented line {p : n·p = d} with unit normal n.
struct Line {
  Point n;
  double d = 0.0;

  static Line through(Point p, Point q);
  /// Line through p with direction dir.
  static Line through_direction(Point p, Point dir);

  double signed_distance(Point p) const { return dot(n, p) - d; }
  Point direction() const { return perp(n); }
  Point foot(Point p) const { return p - signed_distance(p) * n; }
};

/// Intersection of two lines; throws DegenerateConfiguration when parallel.
Point intersect(const Line& l1, const Line& l2);

struct Triangle {
  Point v1, v2, v3;

  constexpr const Point& operator[](int i) const { return i == 0 ? v1 : (i == 1 ? v2 : v3); }
  constexpr Point& operator[](int i) { return i == 0 ? v1 : (i == 1 ? v2 : v3); }
};

/// Signed area, positive for counterclockwise vertices.
double signed_area(const Triangle& tri);
inline double area(const Triangle& tri) { return std::abs(signed_area(tri)); }

/// Sidelengths (|v2v3|, |v3v1|, |v1v2|): the side opposite each vertex.
std::array<double, 3> sidelengths(const Triangle& tri);
double perimeter(const Triangle& tri);
double sum_squared_sides(const Triangle& tri);
/// Interior angles at v1, v2, v3.
std::array<double, 3> interior_angles(const Triangle& tri);
double circumradius(const Triangle& tri);
/// Longest side, used as the length scale for degeneracy tests.
double length_scale(const Triangle& tri);

/// Throws DegenerateTriangle if the vertices are collinear (area <= 1e-12 scale²).
void require_nondegenerate(const Triangle& tri);

/// Same vertices with v1 kept first and the order made counterclockwise.
Triangle counterclockwise(const Triangle& tri);

struct Ellipse {
  Point center;
  double a = 1.0;      // semi-major
  double b = 1.0;      // semi-minor
  double theta = 0.0;  // major-axis direction, [0, pi)

  /// Validates a >= b > 0 (swapping axes if given the other way) and wraps theta.
  static Ellipse make(Point center, double a, double b, double theta = 0.0);
  static Ellipse circle(Point center, double r) { return make(center, r, r, 0.0); }

  double focal_half_distance() const { return std::sqrt(std::max(a * a - b * b, 0.0)); }
  std::pair<Point, Point> foci() const;
  Point major_direction() const { return {std::cos(theta), std::sin(theta)}; }
  Point point_at(double u) const;
  /// x²/a² + y²/b² - 1 in the ellipse frame: < 0 inside, 0 on, > 0 outside.
  double level(Point p) const;
  Point to_local(Point p) const;
  Point from_local(Point q) const;
};

/// a20 x² + 2 a11 xy + a02 y² + a10 x + a01 y + a00 = 0.
struct ConicImplicit {
  double a20 = 0, a11 = 0, a02 = 0, a10 = 0, a01 = 0, a00 = 0;

  /// Scales to max |coefficient| = 1. The sign is fixed so that the quadratic
  /// part has non-negative trace (or, failing that, the largest coefficient is
  /// positive). Throws DegenerateConfiguration if the quadratic part vanishes.
  static ConicImplicit normalized(std::array<double, 6> coeffs);
  static ConicImplicit from_ellipse(const Ellipse& e);

  std::array<double, 6> coefficients() const { return {a20, a11, a02, a10, a01, a00}; }
  double evaluate(Point p) const;
  Point gradient(Point p) const;
  /// Gradient-zero point; throws NotAnEllipse for parabolic patterns.
  Point center() const;
};

struct Similarity {
  double scale = 1.0;
  double rot = 0.0;
  Point pre_translate;

  /// The similarity equivalent to applying `first`, then `second`.
  static Similarity compose(const Similarity& second, const Similarity& first);
};

struct Trilinears {
  double p = 1, q = 1, r = 1;
};

/// Normalized trilinears to Cartesian using sidelength weights
/// (p a A + q b B + r c C) / (a p + b q + c r).
Point trilinear_to_cartesian(const Triangle& tri, const Trilinears& coords);

/// Projective point (x : y : w); w == 0 is a point at infinity in direction (x, y).
struct HomogeneousPoint {
  double x = 0.0, y = 0.0, w = 1.0;

  static HomogeneousPoint from(Point p) { return {p.x, p.y, 1.0}; }
  bool at_infinity(double rel = 1e-12) const { return std::abs(w) <= rel * std::hypot(x, y); }
  Point affine() const { return {x / w, y / w}; }
  Point direction() const { return {x, y}; }
};

/// Meet of two lines; parallel lines give a point at infinity.
HomogeneousPoint meet(const Line& l1, const Line& l2);

/// Unique conic through five points (nullspace of the 5×6 design matrix).
ConicImplicit conic_through_five_points(std::span<const Point, 5> pts);
/// Same, allowing points at infinity (asymptotic directions).
ConicImplicit conic_through_five_points(std::span<const HomogeneousPoint, 5> pts);

/// Semi-major / semi-minor ratio from the eigenvalues of [[a20,a11],[a11,a02]].
double conic_axis_ratio(const ConicImplicit& c);

/// Center, axes and major-axis angle of a real elliptic conic.
Ellipse to_ellipse(const ConicImplicit& c);

struct TangentPair {
  Line first, second;
  Point touch_first, touch_second;
};

/// Tangent lines from an exterior point via the polar line. A point on the
/// ellipse yields its tangent twice. Throws PointInsideEllipse.
TangentPair tangent_lines_from_point(const Ellipse& e, Point p);

/// |d(F1,l)·d(F2,l) - b²| / b², with the product signed so that foci on
/// opposite sides of l give a large residual.
double focal_tangency_residual(const Ellipse& e, const Line& l);

Point apply_similarity(const Similarity& s, Point p);
Triangle apply_similarity(const Similarity& s, const Triangle& tri);

/// Second intersection of the circle with the line through p (p on the circle)
/// along dir.
Point circle_second_intersection(Point center, Point p, Point dir);

/// Circle through three points as (center, radius); throws CollinearPoints.
std::pair<Point, double> circle_through(Point p1, Point p2, Point p3);

/// Angle wrapped to (-pi/2, pi/2].
double wrap_half_turn(double angle);

}  // namespace poncelet

namespace poncelet::detail {

/// Maps conic coefficients found in the conditioned frame u = (x - m) / s back
/// to world coordinates, then normalizes.
ConicImplicit uncondition_conic(const std::array<double, 6>& v, Point m, double s);

}  // namespace poncelet::detail
