#include "poncelet/circles.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace poncelet {

namespace {

struct AngleParts {
  double sin_w, cos_w, cot_w;
};

AngleParts porism_angle(const PorismParams& p) {
  const double sin_w = 1.0 / std::sqrt(1.0 + p.cot_omega * p.cot_omega);
  return {sin_w, sin_w * p.cot_omega, p.cot_omega};
}

double eccentricity_from(double sin_w) { return std::sqrt(std::max(0.0, 1.0 - 4.0 * sin_w * sin_w)); }

// Circle through X3, Omega1, Omega2; collapses to X3 when the Brocard points coincide.
std::pair<Point, double> brocard_circle_through(const Triangle& tri) {
  const auto [o1, o2] = brocard_points(tri);
  const Point x3 = triangle_center(tri, CenterId::X3);
  if (distance(o1, o2) < 1e-12 * length_scale(tri)) return {x3, 0.0};
  return circle_through(x3, o1, o2);
}

}  // namespace

double brocard_eccentricity(double a, double b) {
  return eccentricity_from(porism_angle(brocard_porism_params(a, b)).sin_w);
}

Point x182_closed_form(double a, double b) {
  const double c = std::sqrt(a * a - b * b);
  return {0.0, -c * (2.0 * a * a - b * b) / (b * std::sqrt(4.0 * a * a - b * b))};
}

Point x182_printed(double a, double b) {
  const double c = std::sqrt(a * a - b * b);
  return {0.0, -c * std::sqrt(2.0 * a * a - b * b) / (b * std::sqrt(4.0 * a * a - b * b))};
}

std::string x182_erratum(double a, double b) {
  std::ostringstream os;
  os.precision(6);
  os << std::fixed << "erratum: X182 y = -c*sqrt(2a^2-b^2)/(b*sqrt(4a^2-b^2)) = " << x182_printed(a, b).y
     << " is not the midpoint of X3 and X6; -c*(2a^2-b^2)/(b*sqrt(4a^2-b^2)) = " << x182_closed_form(a, b).y
     << " is used";
  return os.str();
}

double r182_closed_form(double a, double b) {
  const double c = std::sqrt(a * a - b * b);
  return 2.0 * a * a * c / (b * std::sqrt(4.0 * a * a - b * b));
}

double r182_tabulated(double a, double b) {
  const PorismParams p = brocard_porism_params(a, b);
  const AngleParts w = porism_angle(p);
  return eccentricity_from(w.sin_w) * 0.5 * p.R * w.cos_w;
}

std::string brocard_circle_erratum(double a, double b) {
  std::ostringstream os;
  os.precision(6);
  os << std::fixed << "erratum: Brocard circle radius e*(R/2)*cos(w) = " << r182_tabulated(a, b)
     << " disagrees with the circle through X3, X6 and the Brocard points; e*(R/2)/cos(w) = "
     << r182_closed_form(a, b) << " is used, centered at X182 (not X39)";
  return os.str();
}

std::vector<NamedCircle> stationary_circles(double a, double b) {
  const PorismParams p = brocard_porism_params(a, b);
  const AngleParts w = porism_angle(p);
  const double e = eccentricity_from(w.sin_w);
  const double R = p.R;
  const Point x3 = p.circumcenter;
  const Point x182 = x182_closed_form(a, b);
  const Point x6 = 2.0 * x182 - x3;
  const Point x39{0.0, 0.0};
  return {
      {"Circumcircle", "X3", x3, R, true, ""},
      {"2nd Brocard", "X3", x3, e * R, true, ""},
      {"Stammler", "X3", x3, 2.0 * R, true, ""},
      {"2nd Lemoine", "X6", x6, R * std::tan(std::atan2(w.sin_w, w.cos_w)), true, ""},
      {"Gallatly", "X39", x39, R * w.sin_w, true, ""},
      {"Half-Moses", "X39", x39, R * w.sin_w * w.sin_w, true, ""},
      {"Moses", "X39", x39, 2.0 * R * w.sin_w * w.sin_w, true, ""},
      {"Brocard", "X182", x182, r182_closed_form(a, b), true, brocard_circle_erratum(a, b)},
      {"1st Lemoine", "X182", x182, 0.5 * R / w.cos_w, true, x182_erratum(a, b)},
      {"Lucas Inner", "X6407", {}, R / (4.0 * w.cot_w + 7.0), false,
       "center X6407 not implemented; radius only"},
  };
}

bool CircleStationarity::pass(Tolerance tol) const {
  const double scale = std::max(1.0, expected.radius);
  bool ok = max_radius_dev <= tol.rel * scale && std::abs(mean_radius - expected.radius) <= tol.rel * scale;
  if (expected.center_verifiable) {
    ok = ok && max_center_drift <= tol.rel * scale && distance(mean_center, expected.center) <= tol.rel * scale;
  }
  if (concyclic_residual) ok = ok && *concyclic_residual <= tol.rel * scale;
  return ok;
}

std::vector<CircleStationarity> verify_stationarity(double a, double b, int n) {
  if (n < 2) throw GeometryError(ErrorCode::InvalidArgument, "need n >= 2");
  const std::vector<NamedCircle> registry = stationary_circles(a, b);
  const std::size_t count = registry.size();
  std::vector<std::vector<std::pair<Point, double>>> samples(count);
  std::vector<CircleStationarity> out(count);
  double concyclic = 0.0;

  for (double t : parameter_grid(n)) {
    const Triangle tri = brocard_triangle(a, b, t);
    const auto [cc, R] = circle_through(tri.v1, tri.v2, tri.v3);
    const double w = brocard_angle(tri);
    const double sw = std::sin(w), cw = std::cos(w);
    const double e = eccentricity_from(sw);
    const Point x6 = triangle_center(tri, CenterId::X6);
    const Point x39 = triangle_center(tri, CenterId::X39);
    const Point x182 = triangle_center(tri, CenterId::X182);
    const auto [bc, br] = brocard_circle_through(tri);
    concyclic = std::max(concyclic, std::abs(distance(x6, bc) - br));

    const std::pair<Point, double> measured[] = {
        {cc, R},
        {cc, e * R},
        {cc, 2.0 * R},
        {x6, R * std::tan(w)},
        {x39, R * sw},
        {x39, R * sw * sw},
        {x39, 2.0 * R * sw * sw},
        {bc, br},
        {x182, 0.5 * R / cw},
        {Point{}, R / (4.0 / std::tan(w) + 7.0)},
    };
    for (std::size_t i = 0; i < count; ++i) samples[i].push_back(measured[i]);
  }

  for (std::size_t i = 0; i < count; ++i) {
    CircleStationarity& r = out[i];
    r.name = registry[i].name;
    r.expected = registry[i];
    r.samples = static_cast<int>(samples[i].size());
    Point center_sum{};
    double radius_sum = 0.0;
    for (const auto& [c, rad] : samples[i]) {
      center_sum = center_sum + c;
      radius_sum += rad;
    }
    r.mean_center = center_sum / r.samples;
    r.mean_radius = radius_sum / r.samples;
    for (const auto& [c, rad] : samples[i]) {
      r.max_center_drift = std::max(r.max_center_drift, distance(c, r.mean_center));
      r.max_radius_dev = std::max(r.max_radius_dev, std::abs(rad - r.mean_radius));
    }
    if (r.name == "Brocard") r.concyclic_residual = concyclic;
  }
  return out;
}

BrocardCircleRoutes brocard_circle_routes(double a, double b, double t) {
  const Triangle tri = brocard_triangle(a, b, t);
  BrocardCircleRoutes r;
  r.closed_form = r182_closed_form(a, b);
  r.midpoint_route = 0.5 * distance(triangle_center(tri, CenterId::X3), triangle_center(tri, CenterId::X6));
  const auto [center, radius] = brocard_circle_through(tri);
  r.concyclic_center = center;
  r.concyclic_route = radius;
  r.x6_residual = std::abs(distance(triangle_center(tri, CenterId::X6), center) - radius);
  return r;
}

}  // namespace poncelet
