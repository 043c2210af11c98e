#include "poncelet/centers.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace poncelet {

std::string_view to_string(CenterId id) noexcept {
  switch (id) {
    case CenterId::X2: return "X2";
    case CenterId::X3: return "X3";
    case CenterId::X6: return "X6";
    case CenterId::X39: return "X39";
    case CenterId::X182: return "X182";
  }
  return "X?";
}

std::optional<CenterId> parse_center_id(std::string_view name) {
  for (CenterId id : {CenterId::X2, CenterId::X3, CenterId::X6, CenterId::X39, CenterId::X182}) {
    if (name == to_string(id)) return id;
  }
  return std::nullopt;
}

double brocard_angle(const Triangle& tri) {
  require_nondegenerate(tri);
  return std::atan2(4.0 * area(tri), sum_squared_sides(tri));
}

BrocardAngleCheck brocard_angle_check(const Triangle& tri) {
  require_nondegenerate(tri);
  BrocardAngleCheck check;
  check.cot_from_sides = sum_squared_sides(tri) / (4.0 * area(tri));
  for (int i = 0; i < 3; ++i) {
    const Point u = tri[(i + 1) % 3] - tri[i];
    const Point v = tri[(i + 2) % 3] - tri[i];
    check.cot_from_angles += dot(u, v) / std::abs(cross(u, v));
  }
  check.discrepancy = std::abs(check.cot_from_sides - check.cot_from_angles) / check.cot_from_sides;
  return check;
}

std::pair<Point, Point> brocard_points(const Triangle& tri) {
  const Triangle ccw = counterclockwise(tri);
  require_nondegenerate(ccw);
  const auto [a, b, c] = sidelengths(ccw);
  return {trilinear_to_cartesian(ccw, {c / b, a / c, b / a}),
          trilinear_to_cartesian(ccw, {b / c, c / a, a / b})};
}

BrocardData brocard_data(const Triangle& tri) {
  const auto [o1, o2] = brocard_points(tri);
  return {brocard_angle(tri), o1, o2};
}

double brocard_concurrence_residual(const Triangle& tri, double omega, Point omega1) {
  const Triangle ccw = counterclockwise(tri);
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    const Line rotated = Line::through_direction(ccw[i], rotate(ccw[(i + 1) % 3] - ccw[i], omega));
    worst = std::max(worst, std::abs(rotated.signed_distance(omega1)));
  }
  return worst / length_scale(ccw);
}

Point triangle_center(const Triangle& tri, CenterId id) {
  require_nondegenerate(tri);
  const auto [a, b, c] = sidelengths(tri);
  const double a2 = a * a, b2 = b * b, c2 = c * c;
  switch (id) {
    case CenterId::X2:
      return trilinear_to_cartesian(tri, {1.0 / a, 1.0 / b, 1.0 / c});
    case CenterId::X3:
      return trilinear_to_cartesian(
          tri, {(b2 + c2 - a2) / (2.0 * b * c), (a2 + c2 - b2) / (2.0 * a * c), (a2 + b2 - c2) / (2.0 * a * b)});
    case CenterId::X6:
      return trilinear_to_cartesian(tri, {a, b, c});
    case CenterId::X39:
      return trilinear_to_cartesian(tri, {a * (b2 + c2), b * (a2 + c2), c * (a2 + b2)});
    case CenterId::X182:
      return midpoint(triangle_center(tri, CenterId::X3), triangle_center(tri, CenterId::X6));
  }
  throw GeometryError(ErrorCode::InvalidArgument, "unknown center");
}

ConicImplicit steiner_circumellipse(const Triangle& tri) {
  require_nondegenerate(tri);
  const Point g = (tri.v1 + tri.v2 + tri.v3) / 3.0;
  const double s = length_scale(tri);

  // Three incidence rows plus a vanishing gradient at the centroid, in the
  // conditioned frame u = (x - g) / s where the centroid sits at the origin.
  Eigen::Matrix<double, 5, 6> system = Eigen::Matrix<double, 5, 6>::Zero();
  for (int i = 0; i < 3; ++i) {
    const Point u = (tri[i] - g) / s;
    system.row(i) << u.x * u.x, 2.0 * u.x * u.y, u.y * u.y, u.x, u.y, 1.0;
  }
  // dF/dx and dF/dy at u = 0.
  system.row(3) << 0, 0, 0, 1, 0, 0;
  system.row(4) << 0, 0, 0, 0, 1, 0;

  Eigen::JacobiSVD<Eigen::Matrix<double, 5, 6>> svd(system, Eigen::ComputeFullV);
  const Eigen::Matrix<double, 6, 1> v = svd.matrixV().col(5);
  return detail::uncondition_conic({v(0), v(1), v(2), v(3), v(4), v(5)}, g, s);
}

std::array<double, 3> brocard_inellipse_b2(const Triangle& tri) {
  const Triangle ccw = counterclockwise(tri);
  require_nondegenerate(ccw);
  // In needle-shaped triangles a Brocard point can sit within 1e-7 of a long
  // side; its distance to that side only keeps its digits if the point and the
  // line are formed in extended precision.
  using real = long double;
  std::array<real, 3> x{}, y{}, len{};
  for (int i = 0; i < 3; ++i) {
    x[i] = ccw[i].x;
    y[i] = ccw[i].y;
  }
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    len[i] = std::hypot(x[k] - x[j], y[k] - y[j]);
  }
  const real a = len[0], b = len[1], c = len[2];
  auto to_cartesian = [&](real p, real q, real r) {
    const real wa = p * a, wb = q * b, wc = r * c, w = wa + wb + wc;
    return std::array<real, 2>{(wa * x[0] + wb * x[1] + wc * x[2]) / w, (wa * y[0] + wb * y[1] + wc * y[2]) / w};
  };
  const auto o1 = to_cartesian(c / b, a / c, b / a);
  const auto o2 = to_cartesian(b / c, c / a, a / b);
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const real dx = x[j] - x[i], dy = y[j] - y[i], l = std::hypot(dx, dy);
    auto dist = [&](const std::array<real, 2>& o) { return (dx * (o[1] - y[i]) - dy * (o[0] - x[i])) / l; };
    out[i] = static_cast<double>(dist(o1) * dist(o2));
  }
  return out;
}

Ellipse brocard_inellipse(const Triangle& tri, Tolerance tol) {
  const auto [o1, o2] = brocard_points(tri);
  const auto b2 = brocard_inellipse_b2(tri);
  const double lo = std::min({b2[0], b2[1], b2[2]});
  const double hi = std::max({b2[0], b2[1], b2[2]});
  const double mean = (b2[0] + b2[1] + b2[2]) / 3.0;
  if (!(lo > 0.0) || hi - lo > tol.rel * mean) {
    throw GeometryError(ErrorCode::InconsistentTangency, "sidelines disagree on the inellipse minor axis");
  }
  const double c = 0.5 * distance(o1, o2);
  const Point axis = o2 - o1;
  const double theta = c > 1e-14 * length_scale(tri) ? std::atan2(axis.y, axis.x) : 0.0;
  return Ellipse::make(midpoint(o1, o2), std::sqrt(mean + c * c), std::sqrt(mean), theta);
}

double shail_check(const Triangle& tri) {
  const double r = circumradius(tri);
  const double omega = brocard_angle(tri);
  const auto [o1, o2] = brocard_points(tri);
  const double s2 = std::sin(omega) * std::sin(omega);
  const Point d = o1 - o2;
  return std::abs(dot(d, d) - 4.0 * r * r * s2 * (1.0 - 4.0 * s2)) / (r * r);
}

double brocard_sine_diagnostic(const Triangle& tri) {
  require_nondegenerate(tri);
  const auto [a, b, c] = sidelengths(tri);
  const double gamma = a * a * b * b + a * a * c * c + b * b * c * c;
  return std::abs(4.0 * area(tri) / std::sqrt(gamma) - 2.0 * std::sin(brocard_angle(tri)));
}

}  // namespace poncelet
