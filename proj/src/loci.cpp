#include "poncelet/loci.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace poncelet {

namespace {

struct Frame {
  Point mean;
  double scale = 1.0;
};

Frame conditioning(std::span<const Point> pts) {
  Frame f;
  for (const Point& p : pts) f.mean = f.mean + p;
  f.mean = f.mean / static_cast<double>(pts.size());
  double s = 0.0;
  for (const Point& p : pts) s = std::max(s, distance(p, f.mean));
  f.scale = s;
  return f;
}

bool is_point_locus(std::span<const Point> pts) {
  double min_x = pts[0].x, max_x = pts[0].x, min_y = pts[0].y, max_y = pts[0].y;
  double magnitude = 1.0;
  for (const Point& p : pts) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
    magnitude = std::max(magnitude, norm(p));
  }
  return std::hypot(max_x - min_x, max_y - min_y) < 1e-10 * magnitude;
}

FittedConic point_locus(std::span<const Point> pts) {
  const Frame f = conditioning(pts);
  return {LocusKind::PointLocus, f.mean, 0.0, 0.0, f.scale};
}

}  // namespace

Point X39Locus::at(double t) const {
  const double c2 = a * a - b * b;
  return {-a * c2 * std::cos(3.0 * t) / (2.0 * (a * a + 3.0 * b * b)),
          -b * c2 * std::sin(3.0 * t) / (2.0 * (3.0 * a * a + b * b))};
}

X39Locus x39_locus_closed_form(double a, double b) {
  homothetic_pair(a, b);  // validates
  const double c2 = a * a - b * b;
  return {a, b, 0.5 * c2 * a / (a * a + 3.0 * b * b), 0.5 * c2 * b / (3.0 * a * a + b * b)};
}

X2Locus x2_locus_brocard(double a, double b) {
  const PorismParams p = brocard_porism_params(a, b);
  const double a2 = a * a, b2 = b * b;
  const double root = std::sqrt(std::max(0.0, 4.0 * a2 * a2 - 5.0 * a2 * b2 + b2 * b2));
  const double sin2 = 1.0 / (1.0 + p.cot_omega * p.cot_omega);
  const double cos2w = 1.0 - 2.0 * sin2;
  return {{0.0, -root / (3.0 * b)}, 2.0 * (a2 - b2) / (3.0 * b), p.R * (2.0 * cos2w - 1.0) / 3.0};
}

std::vector<LocusSample> sample_locus(const FamilySpec& spec, CenterId id, int n) {
  spec.validate();
  std::vector<LocusSample> out;
  out.reserve(static_cast<std::size_t>(n));
  for (double t : parameter_grid(n)) out.push_back({t, triangle_center(family_triangle(spec, t), id), id});
  return out;
}

std::vector<Point> locus_points(const std::vector<LocusSample>& samples) {
  std::vector<Point> pts;
  pts.reserve(samples.size());
  for (const auto& s : samples) pts.push_back(s.p);
  return pts;
}

FittedConic fit_circle(std::span<const Point> samples) {
  if (samples.size() < 3) throw GeometryError(ErrorCode::CollinearSamples, "circle fit needs 3 points");
  if (is_point_locus(samples)) return point_locus(samples);
  const Frame f = conditioning(samples);

  // x² + y² = D x + E y + F in the conditioned frame.
  const auto n = static_cast<Eigen::Index>(samples.size());
  Eigen::MatrixXd m(n, 3);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Point u = (samples[static_cast<std::size_t>(i)] - f.mean) / f.scale;
    m.row(i) << u.x, u.y, 1.0;
    rhs(i) = dot(u, u);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (!(sv(2) > 1e-12 * sv(0))) {
    throw GeometryError(ErrorCode::CollinearSamples, "samples are collinear");
  }
  const Eigen::Vector3d sol = svd.solve(rhs);
  const Point cu{0.5 * sol(0), 0.5 * sol(1)};
  const double ru = std::sqrt(sol(2) + dot(cu, cu));

  FittedConic fit{LocusKind::Circle, f.mean + f.scale * cu, f.scale * ru, f.scale * ru, 0.0};
  double sq = 0.0;
  for (const Point& p : samples) {
    const double d = distance(p, fit.center) - fit.semi_x;
    sq += d * d;
  }
  fit.rms_residual = std::sqrt(sq / static_cast<double>(samples.size()));
  return fit;
}

FittedConic fit_axis_aligned_ellipse(std::span<const Point> samples) {
  if (samples.size() < 4) throw GeometryError(ErrorCode::DegenerateSamples, "ellipse fit needs 4 points");
  if (is_point_locus(samples)) return point_locus(samples);
  const Frame f = conditioning(samples);

  const auto n = static_cast<Eigen::Index>(samples.size());
  Eigen::MatrixXd m(n, 5);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Point u = (samples[static_cast<std::size_t>(i)] - f.mean) / f.scale;
    m.row(i) << u.x * u.x, u.y * u.y, u.x, u.y, 1.0;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (!(sv(3) > 1e-12 * sv(0))) {
    throw GeometryError(ErrorCode::DegenerateSamples, "samples do not determine an ellipse");
  }
  const Eigen::VectorXd v = svd.matrixV().col(4);
  const double A = v(0), C = v(1), D = v(2), E = v(3), F = v(4);
  if (!(A * C > 0.0)) {
    throw GeometryError(ErrorCode::DegenerateSamples, "best-fit axis-aligned conic is not an ellipse");
  }
  const Point cu{-D / (2.0 * A), -E / (2.0 * C)};
  const double g = D * D / (4.0 * A) + E * E / (4.0 * C) - F;
  if (!(g / A > 0.0)) {
    throw GeometryError(ErrorCode::DegenerateSamples, "best-fit axis-aligned conic is imaginary");
  }
  FittedConic fit{LocusKind::AxisAlignedEllipse, f.mean + f.scale * cu, f.scale * std::sqrt(g / A),
                  f.scale * std::sqrt(g / C), 0.0};
  double sq = 0.0;
  for (const Point& p : samples) {
    const Point d = p - fit.center;
    const double r = std::hypot(d.x / fit.semi_x, d.y / fit.semi_y);
    // Radial distance to the ellipse along the ray from its center.
    const double e = r > 0.0 ? (r - 1.0) * norm(d) / r : std::min(fit.semi_x, fit.semi_y);
    sq += e * e;
  }
  fit.rms_residual = std::sqrt(sq / static_cast<double>(samples.size()));
  return fit;
}

int winding_number(std::span<const Point> samples, Point center) {
  double total = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Point u = samples[i] - center;
    const Point v = samples[(i + 1) % samples.size()] - center;
    total += std::atan2(cross(u, v), dot(u, v));
  }
  return static_cast<int>(std::lround(total / (2.0 * kPi)));
}

AxisIntersection axis_intersection_check(double a, double b, double t) {
  AxisIntersection out;
  const X2Locus locus = x2_locus_brocard(a, b);
  out.circle_y[0] = locus.center.y + locus.radius;
  out.circle_y[1] = locus.center.y - locus.radius;
  if (!(a > b)) {
    // Equilateral family: every line through the fixed centroid meets the axis there.
    out.point_locus = true;
    out.axes_y[0] = out.axes_y[1] = locus.center.y;
    return out;
  }
  const Ellipse steiner = to_ellipse(steiner_circumellipse(brocard_triangle(a, b, t)));
  const Point dirs[2] = {steiner.major_direction(), perp(steiner.major_direction())};
  for (int i = 0; i < 2; ++i) {
    if (std::abs(dirs[i].x) < 1e-12) {
      throw GeometryError(ErrorCode::DegenerateConfiguration, "circumellipse axis parallel to the y-axis");
    }
    out.axes_y[i] = steiner.center.y - steiner.center.x / dirs[i].x * dirs[i].y;
  }
  const double straight = std::max(std::abs(out.axes_y[0] - out.circle_y[0]), std::abs(out.axes_y[1] - out.circle_y[1]));
  const double swapped = std::max(std::abs(out.axes_y[0] - out.circle_y[1]), std::abs(out.axes_y[1] - out.circle_y[0]));
  out.residual = std::min(straight, swapped);
  return out;
}

}  // namespace poncelet
