#include "poncelet/geometry.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>

namespace poncelet {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::PointAtInfinity: return "PointAtInfinity";
    case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorCode::NotAnEllipse: return "NotAnEllipse";
    case ErrorCode::PointInsideEllipse: return "PointInsideEllipse";
    case ErrorCode::InvalidAxes: return "InvalidAxes";
    case ErrorCode::InvalidLambda: return "InvalidLambda";
    case ErrorCode::VertexInsideCaustic: return "VertexInsideCaustic";
    case ErrorCode::SingularDenominator: return "SingularDenominator";
    case ErrorCode::TooFewValidSamples: return "TooFewValidSamples";
    case ErrorCode::CollinearSamples: return "CollinearSamples";
    case ErrorCode::DegenerateSamples: return "DegenerateSamples";
    case ErrorCode::CollinearPoints: return "CollinearPoints";
    case ErrorCode::NoSecondRealIntersection: return "NoSecondRealIntersection";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::InconsistentTangency: return "InconsistentTangency";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Line Line::through(Point p, Point q) {
  const Point dir = q - p;
  if (norm(dir) == 0.0) {
    throw GeometryError(ErrorCode::DegenerateConfiguration, "line through coincident points");
  }
  return through_direction(p, dir);
}

Line Line::through_direction(Point p, Point dir) {
  const double len = norm(dir);
  if (!(len > 0.0)) {
    throw GeometryError(ErrorCode::DegenerateConfiguration, "line with zero direction");
  }
  const Point n = perp(dir) / len;
  return {n, dot(n, p)};
}

Point intersect(const Line& l1, const Line& l2) {
  const double det = cross(l1.n, l2.n);
  if (std::abs(det) < 1e-14) {
    throw GeometryError(ErrorCode::DegenerateConfiguration, "intersecting parallel lines");
  }
  return {(l1.d * l2.n.y - l2.d * l1.n.y) / det, (l1.n.x * l2.d - l2.n.x * l1.d) / det};
}

double signed_area(const Triangle& tri) { return 0.5 * cross(tri.v2 - tri.v1, tri.v3 - tri.v1); }

std::array<double, 3> sidelengths(const Triangle& tri) {
  return {distance(tri.v2, tri.v3), distance(tri.v3, tri.v1), distance(tri.v1, tri.v2)};
}

double perimeter(const Triangle& tri) {
  const auto s = sidelengths(tri);
  return s[0] + s[1] + s[2];
}

double sum_squared_sides(const Triangle& tri) {
  const auto s = sidelengths(tri);
  return s[0] * s[0] + s[1] * s[1] + s[2] * s[2];
}

std::array<double, 3> interior_angles(const Triangle& tri) {
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) {
    const Point u = tri[(i + 1) % 3] - tri[i];
    const Point v = tri[(i + 2) % 3] - tri[i];
    out[i] = std::atan2(std::abs(cross(u, v)), dot(u, v));
  }
  return out;
}

double circumradius(const Triangle& tri) {
  require_nondegenerate(tri);
  const auto s = sidelengths(tri);
  return s[0] * s[1] * s[2] / (4.0 * area(tri));
}

double length_scale(const Triangle& tri) {
  const auto s = sidelengths(tri);
  return std::max({s[0], s[1], s[2]});
}

void require_nondegenerate(const Triangle& tri) {
  const double scale = length_scale(tri);
  if (!is_finite(tri.v1) || !is_finite(tri.v2) || !is_finite(tri.v3) ||
      !(area(tri) > 1e-12 * scale * scale)) {
    throw GeometryError(ErrorCode::DegenerateTriangle, "vertices are collinear or coincident");
  }
}

Triangle counterclockwise(const Triangle& tri) {
  if (signed_area(tri) < 0.0) return {tri.v1, tri.v3, tri.v2};
  return tri;
}

Ellipse Ellipse::make(Point center, double a, double b, double theta) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b) || !is_finite(center)) {
    throw GeometryError(ErrorCode::InvalidAxes, "ellipse semi-axes must be positive and finite");
  }
  if (a < b) {
    std::swap(a, b);
    theta += 0.5 * kPi;
  }
  theta = std::fmod(theta, kPi);
  if (theta < 0.0) theta += kPi;
  if (theta >= kPi) theta -= kPi;
  return {center, a, b, theta};
}

std::pair<Point, Point> Ellipse::foci() const {
  const Point off = focal_half_distance() * major_direction();
  return {center - off, center + off};
}

Point Ellipse::point_at(double u) const { return from_local({a * std::cos(u), b * std::sin(u)}); }

Point Ellipse::to_local(Point p) const { return rotate(p - center, -theta); }

Point Ellipse::from_local(Point q) const { return center + rotate(q, theta); }

double Ellipse::level(Point p) const {
  const Point q = to_local(p);
  return q.x * q.x / (a * a) + q.y * q.y / (b * b) - 1.0;
}

ConicImplicit ConicImplicit::normalized(std::array<double, 6> c) {
  double max_abs = 0.0;
  int arg = 0;
  for (int i = 0; i < 6; ++i) {
    if (std::abs(c[i]) > max_abs) {
      max_abs = std::abs(c[i]);
      arg = i;
    }
  }
  const double quad = std::max({std::abs(c[0]), std::abs(c[1]), std::abs(c[2])});
  if (!(max_abs > 0.0) || !(quad > 1e-14 * max_abs)) {
    throw GeometryError(ErrorCode::DegenerateConfiguration, "conic has no quadratic part");
  }
  const double trace = c[0] + c[2];
  double sign = 1.0;
  if (std::abs(trace) > 1e-12 * max_abs) {
    sign = trace > 0.0 ? 1.0 : -1.0;
  } else if (c[arg] < 0.0) {
    sign = -1.0;
  }
  const double f = sign / max_abs;
  return {c[0] * f, c[1] * f, c[2] * f, c[3] * f, c[4] * f, c[5] * f};
}

ConicImplicit ConicImplicit::from_ellipse(const Ellipse& e) {
  // q^T M q = 1 with q = R(-theta)(p - center), M = diag(1/a², 1/b²)
  const double ct = std::cos(e.theta), st = std::sin(e.theta);
  const double ia = 1.0 / (e.a * e.a), ib = 1.0 / (e.b * e.b);
  const double m00 = ct * ct * ia + st * st * ib;
  const double m01 = ct * st * (ia - ib);
  const double m11 = st * st * ia + ct * ct * ib;
  const Point c = e.center;
  return normalized({m00, m01, m11, -2.0 * (m00 * c.x + m01 * c.y), -2.0 * (m01 * c.x + m11 * c.y),
                     m00 * c.x * c.x + 2.0 * m01 * c.x * c.y + m11 * c.y * c.y - 1.0});
}

double ConicImplicit::evaluate(Point p) const {
  return a20 * p.x * p.x + 2.0 * a11 * p.x * p.y + a02 * p.y * p.y + a10 * p.x + a01 * p.y + a00;
}

Point ConicImplicit::gradient(Point p) const {
  return {2.0 * a20 * p.x + 2.0 * a11 * p.y + a10, 2.0 * a11 * p.x + 2.0 * a02 * p.y + a01};
}

Point ConicImplicit::center() const {
  const double det = a20 * a02 - a11 * a11;
  const double scale = std::max({std::abs(a20), std::abs(a11), std::abs(a02)});
  if (!(std::abs(det) > 1e-14 * scale * scale)) {
    throw GeometryError(ErrorCode::NotAnEllipse, "conic has no unique center");
  }
  // [[a20, a11], [a11, a02]] c = -0.5 (a10, a01)
  return {(-0.5 * a10 * a02 + 0.5 * a01 * a11) / det, (-0.5 * a01 * a20 + 0.5 * a10 * a11) / det};
}

Similarity Similarity::compose(const Similarity& second, const Similarity& first) {
  return {first.scale * second.scale, first.rot + second.rot,
          first.pre_translate + rotate(second.pre_translate, -first.rot) / first.scale};
}

Point trilinear_to_cartesian(const Triangle& tri, const Trilinears& coords) {
  require_nondegenerate(tri);
  const auto s = sidelengths(tri);
  const double wa = coords.p * s[0], wb = coords.q * s[1], wc = coords.r * s[2];
  const double denom = wa + wb + wc;
  if (!(std::abs(denom) > 1e-12 * (std::abs(wa) + std::abs(wb) + std::abs(wc)))) {
    throw GeometryError(ErrorCode::PointAtInfinity, "trilinear weights sum to zero");
  }
  return (wa * tri.v1 + wb * tri.v2 + wc * tri.v3) / denom;
}

HomogeneousPoint meet(const Line& l1, const Line& l2) {
  return {l1.d * l2.n.y - l2.d * l1.n.y, l1.n.x * l2.d - l2.n.x * l1.d, cross(l1.n, l2.n)};
}

ConicImplicit conic_through_five_points(std::span<const Point, 5> pts) {
  std::array<HomogeneousPoint, 5> h;
  for (std::size_t i = 0; i < 5; ++i) h[i] = HomogeneousPoint::from(pts[i]);
  return conic_through_five_points(std::span<const HomogeneousPoint, 5>(h));
}

ConicImplicit conic_through_five_points(std::span<const HomogeneousPoint, 5> pts) {
  // Condition the system: centroid of the finite points at the origin, unit
  // mean radius.
  Point m{};
  int finite = 0;
  for (const HomogeneousPoint& p : pts) {
    if (p.at_infinity()) continue;
    m = m + p.affine();
    ++finite;
  }
  if (finite == 0) {
    throw GeometryError(ErrorCode::DegenerateConfiguration, "all five points at infinity");
  }
  m = m / static_cast<double>(finite);
  double s = 0.0;
  for (const HomogeneousPoint& p : pts) {
    if (!p.at_infinity()) s += distance(p.affine(), m);
  }
  s /= finite;
  if (!(s > 0.0)) {
    throw GeometryError(ErrorCode::DegenerateConfiguration, "coincident points");
  }

  Eigen::MatrixXd design(5, 6);
  for (int i = 0; i < 5; ++i) {
    const HomogeneousPoint& p = pts[static_cast<std::size_t>(i)];
    double X = (p.x - m.x * p.w) / s, Y = (p.y - m.y * p.w) / s, W = p.w;
    const double len = std::sqrt(X * X + Y * Y + W * W);
    if (!(len > 0.0)) throw GeometryError(ErrorCode::DegenerateConfiguration, "null homogeneous point");
    X /= len;
    Y /= len;
    W /= len;
    design.row(i) << X * X, 2.0 * X * Y, Y * Y, X * W, Y * W, W * W;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (!(sv(4) > 1e-10 * sv(0))) {
    throw GeometryError(ErrorCode::DegenerateConfiguration,
                        "five points do not determine a unique conic");
  }
  const Eigen::VectorXd v = svd.matrixV().col(5);

  return detail::uncondition_conic({v(0), v(1), v(2), v(3), v(4), v(5)}, m, s);
}

namespace detail {

ConicImplicit uncondition_conic(const std::array<double, 6>& v, Point m, double s) {
  // F(x) = (x-m)^T Q (x-m)/s² + L·(x-m)/s + A00.
  const double q00 = v[0] / (s * s), q01 = v[1] / (s * s), q11 = v[2] / (s * s);
  const double l0 = v[3] / s, l1 = v[4] / s;
  const double a10 = -2.0 * (q00 * m.x + q01 * m.y) + l0;
  const double a01 = -2.0 * (q01 * m.x + q11 * m.y) + l1;
  const double a00 = q00 * m.x * m.x + 2.0 * q01 * m.x * m.y + q11 * m.y * m.y - l0 * m.x - l1 * m.y + v[5];
  return ConicImplicit::normalized({q00, q01, q11, a10, a01, a00});
}

}  // namespace detail

namespace {

struct QuadraticForm {
  double lambda_small, lambda_large;  // after orienting to positive trace
  double major_angle;                 // direction of the smaller eigenvalue
  double orientation;                 // +1 or -1 applied to the equation
};

QuadraticForm elliptic_form(const ConicImplicit& c) {
  double p = c.a20, q = c.a02, r = c.a11;
  const double det = p * q - r * r;
  const double scale = std::max({std::abs(p), std::abs(q), std::abs(r)});
  if (!(det > 1e-14 * scale * scale)) {
    throw GeometryError(ErrorCode::NotAnEllipse, "quadratic part is not definite");
  }
  const double orientation = (p + q) > 0.0 ? 1.0 : -1.0;
  p *= orientation;
  q *= orientation;
  r *= orientation;
  const double half_tr = 0.5 * (p + q);
  const double disc = std::hypot(0.5 * (p - q), r);
  const double large = half_tr + disc;
  const double small = det / large;  // stable for nearly-circular forms
  const double angle = disc > 1e-15 * scale ? 0.5 * std::atan2(2.0 * r, p - q) + 0.5 * kPi : 0.0;
  return {small, large, angle, orientation};
}

}  // namespace

double conic_axis_ratio(const ConicImplicit& c) {
  const QuadraticForm f = elliptic_form(c);
  const double at_center = f.orientation * c.evaluate(c.center());
  if (!(at_center < 0.0)) {
    throw GeometryError(ErrorCode::NotAnEllipse, "conic has no real points");
  }
  return std::sqrt(f.lambda_large / f.lambda_small);
}

Ellipse to_ellipse(const ConicImplicit& c) {
  const QuadraticForm f = elliptic_form(c);
  const Point center = c.center();
  const double at_center = f.orientation * c.evaluate(center);
  if (!(at_center < 0.0)) {
    throw GeometryError(ErrorCode::NotAnEllipse, "conic has no real points");
  }
  return Ellipse::make(center, std::sqrt(-at_center / f.lambda_small),
                       std::sqrt(-at_center / f.lambda_large), f.major_angle);
}

TangentPair tangent_lines_from_point(const Ellipse& e, Point p) {
  const Point q = e.to_local(p);
  const Point u{q.x / e.a, q.y / e.b};
  const double r2 = dot(u, u);
  // Tangent at the unit-frame point w, mapped back to the world frame.
  auto tangent_at = [&](Point w) {
    const Point touch = e.from_local({e.a * w.x, e.b * w.y});
    const Point normal = rotate(Point{w.x / e.a, w.y / e.b}, e.theta);
    return std::pair{Line::through_direction(touch, perp(normal)), touch};
  };
  if (std::abs(r2 - 1.0) <= 1e-12) {
    const auto [line, touch] = tangent_at(u / std::sqrt(r2));
    return {line, line, touch, touch};
  }
  if (r2 < 1.0) {
    throw GeometryError(ErrorCode::PointInsideEllipse, "no real tangents from an interior point");
  }
  // The polar line u·w = 1 cuts the unit circle at these two points.
  const double h = std::sqrt(r2 - 1.0) / r2;
  const Point base = u / r2;
  const auto [l1, t1] = tangent_at(base + h * perp(u));
  const auto [l2, t2] = tangent_at(base - h * perp(u));
  return {l1, l2, t1, t2};
}

double focal_tangency_residual(const Ellipse& e, const Line& l) {
  const auto [f1, f2] = e.foci();
  const double product = l.signed_distance(f1) * l.signed_distance(f2);
  return std::abs(product - e.b * e.b) / (e.b * e.b);
}

Point apply_similarity(const Similarity& s, Point p) {
  return s.scale * rotate(p + s.pre_translate, s.rot);
}

Triangle apply_similarity(const Similarity& s, const Triangle& tri) {
  return {apply_similarity(s, tri.v1), apply_similarity(s, tri.v2), apply_similarity(s, tri.v3)};
}

Point circle_second_intersection(Point center, Point p, Point dir) {
  const Point d = unit(dir);
  // |p + s d - center|² = r² has roots s = 0 and s = -2 d·(p - center).
  return p - 2.0 * dot(d, p - center) * d;
}

std::pair<Point, double> circle_through(Point p1, Point p2, Point p3) {
  const Point b = p2 - p1, c = p3 - p1;
  const double d = 2.0 * cross(b, c);
  const double scale = std::max({norm(b), norm(c), distance(p2, p3)});
  if (!(std::abs(d) > 1e-14 * scale * scale)) {
    throw GeometryError(ErrorCode::CollinearPoints, "no circle through collinear points");
  }
  const double b2 = dot(b, b), c2 = dot(c, c);
  const Point rel{(c.y * b2 - b.y * c2) / d, (b.x * c2 - c.x * b2) / d};
  return {p1 + rel, norm(rel)};
}

double wrap_half_turn(double angle) {
  double w = std::fmod(angle, kPi);
  if (w <= -0.5 * kPi) w += kPi;
  if (w > 0.5 * kPi) w -= kPi;
  return w;
}

}  // namespace poncelet
