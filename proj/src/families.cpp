#include "poncelet/families.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace poncelet {

std::string_view to_string(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::Homothetic: return "homothetic";
    case FamilyKind::BrocardPorism: return "brocard";
    case FamilyKind::ConfocalLambda: return "confocal";
  }
  return "unknown";
}

namespace {

void require_axes(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(b > 0.0) || a < b) {
    throw GeometryError(ErrorCode::InvalidAxes, "semi-axes must satisfy a >= b > 0");
  }
}

}  // namespace

void FamilySpec::validate() const {
  switch (kind) {
    case FamilyKind::Homothetic:
      require_axes(a, b);
      return;
    case FamilyKind::BrocardPorism: {
      require_axes(a, b);
      if (!porism_feasible(brocard_porism_params(a, b))) {
        throw GeometryError(ErrorCode::DegenerateConfiguration,
                            "porism infeasible: circumradius must satisfy R >= 2c");
      }
      return;
    }
    case FamilyKind::ConfocalLambda:
      if (!porism_feasible(confocal_lambda_params(a, b, lambda))) {
        throw GeometryError(ErrorCode::DegenerateConfiguration,
                            "porism infeasible: circumradius must satisfy R >= 2c");
      }
      return;
  }
}

HomotheticPair homothetic_pair(double a, double b) {
  require_axes(a, b);
  return {Ellipse::make({}, a, b), Ellipse::make({}, 0.5 * a, 0.5 * b)};
}

Triangle homothetic_triangle(double a, double b, double t) {
  require_axes(a, b);
  // cos and sin of t + 2pi/3 and t + 4pi/3 by the addition formulas, so that
  // t = 0 lands exactly on (-a/2, ±b·sqrt(3)/2).
  const double c = std::cos(t), s = std::sin(t);
  const double h = 0.5 * std::sqrt(3.0);
  return {{a * c, b * s},
          {a * (-0.5 * c - h * s), b * (-0.5 * s + h * c)},
          {a * (-0.5 * c + h * s), b * (-0.5 * s - h * c)}};
}

PorismParams brocard_porism_params(double a, double b) {
  require_axes(a, b);
  const double c = std::sqrt(a * a - b * b);
  const double delta = std::sqrt(4.0 * a * a - b * b);
  return {{0.0, -c * delta / b}, 2.0 * a * a / b, delta / b, c, delta, Ellipse::make({}, a, b)};
}

bool porism_feasible(const PorismParams& p, Tolerance tol) {
  return p.R >= 2.0 * p.c * (1.0 - tol.rel);
}

Triangle porism_triangle(const PorismParams& params, double t) {
  const Point p1 = params.circumcenter + params.R * Point{std::cos(t), std::sin(t)};
  if (params.caustic.level(p1) <= 0.0) {
    throw GeometryError(ErrorCode::VertexInsideCaustic, "circumcircle vertex inside the caustic");
  }
  const TangentPair tangents = tangent_lines_from_point(params.caustic, p1);
  const Point p2 = circle_second_intersection(params.circumcenter, p1, tangents.first.direction());
  const Point p3 = circle_second_intersection(params.circumcenter, p1, tangents.second.direction());
  const double eps = 1e-12 * params.R;
  if (distance(p1, p2) < eps || distance(p1, p3) < eps || distance(p2, p3) < eps) {
    throw GeometryError(ErrorCode::DegenerateTriangle, "tangent line touches the circumcircle");
  }
  return counterclockwise({p1, p2, p3});
}

Triangle brocard_triangle(double a, double b, double t) {
  return porism_triangle(brocard_porism_params(a, b), t);
}

double brocard_closed_form_denominator(double a, double b, double t) {
  const double c2 = a * a - b * b;
  const double d2 = 4.0 * a * a - b * b;
  const double a4 = a * a * a * a, b2 = b * b;
  const double ct = std::cos(t), ct2 = ct * ct;
  return 16.0 * a4 * c2 * c2 * ct2 * ct2 - 4.0 * b2 * c2 * (2.0 * a4 - b2 * d2) * ct2 + a4 * b2 * b2;
}

Triangle brocard_triangle_closed_form(double a, double b, double t) {
  require_axes(a, b);
  if (!(a > b)) {
    throw GeometryError(ErrorCode::InvalidAxes, "closed form needs a > b");
  }
  const PorismParams params = brocard_porism_params(a, b);
  const double c = params.c, d1 = params.delta;
  const double a2 = a * a, a4 = a2 * a2, b2 = b * b, b3 = b2 * b, b4 = b2 * b2, b5 = b4 * b;
  const double c2 = c * c, c3 = c2 * c;
  const double ct = std::cos(t), st = std::sin(t);
  const double ct2 = ct * ct, ct3 = ct2 * ct, ct4 = ct2 * ct2;

  const double q = brocard_closed_form_denominator(a, b, t);
  const double q_scale = std::max({16.0 * a4 * c2 * c2, std::abs(4.0 * b2 * c2 * (2.0 * a4 - b2 * d1 * d1)),
                                   a4 * b4});
  if (std::abs(q) < 1e-12 * q_scale) {
    throw GeometryError(ErrorCode::SingularDenominator, "closed-form denominator vanishes");
  }

  const Point p1 = params.circumcenter + params.R * Point{ct, st};
  const double power = p1.x * p1.x / a2 + p1.y * p1.y / b2 - 1.0;
  if (power < 0.0) {
    throw GeometryError(ErrorCode::VertexInsideCaustic, "circumcircle vertex inside the caustic");
  }
  // The printed polynomials leave this radical implicit; it is the scaled
  // power of P1 with respect to the caustic, and its two signs give P2, P3.
  const double radical = b2 / a * std::sqrt(power);

  // Numerators split as (terms without the radical) + radical * (terms with it).
  const double x_plain = -4.0 * a2 * b * c2 * (4.0 * a4 - 3.0 * a2 * b2 + b4) * ct3 -
                         8.0 * a4 * b * c3 * d1 * st * ct3 + a2 * b3 * (4.0 * a4 - 7.0 * a2 * b2 + 2.0 * b4) * ct +
                         2.0 * a2 * b3 * c3 * d1 * st * ct;
  const double x_rad = -2.0 * a2 * c * d1 * (2.0 * a4 - 2.0 * a2 * b2 + b4) * ct2 -
                       4.0 * a4 * c2 * (2.0 * a2 - b2) * st * ct2 + a4 * b2 * (2.0 * a2 - b2) * st +
                       a4 * b2 * c * d1;
  const double y_plain = 8.0 * a4 * b * c3 * d1 * ct4 - 2.0 * c3 * d1 * b3 * (5.0 * a2 - 2.0 * b2) * ct2 -
                         4.0 * b3 * a2 * c2 * (3.0 * a2 - b2) * st * ct2 - st * a4 * b5;
  const double y_rad = 4.0 * a4 * b2 * c2 * ct3 - b2 * a2 * (8.0 * a4 - 9.0 * a2 * b2 + 2.0 * b4) * ct -
                       2.0 * b2 * a2 * c * d1 * (2.0 * a2 - b2) * st * ct;

  const Point p2{(x_plain + radical * x_rad) / q, (y_plain + radical * y_rad) / q};
  const Point p3{(x_plain - radical * x_rad) / q, (y_plain - radical * y_rad) / q};
  return counterclockwise({p1, p2, p3});
}

PorismParams confocal_lambda_params(double a, double b, double lambda) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(b > 0.0) || !(a > b)) {
    throw GeometryError(ErrorCode::InvalidLambda, "confocal family needs a > b > 0");
  }
  if (!std::isfinite(lambda) || !(lambda < b * b)) {
    throw GeometryError(ErrorCode::InvalidLambda, "lambda must be below b²");
  }
  const double delta_sq = 4.0 * a * a - b * b - 3.0 * lambda;
  if (delta_sq < 0.0) {
    throw GeometryError(ErrorCode::InvalidLambda, "4a² - b² - 3 lambda must be non-negative");
  }
  const double c = std::sqrt(a * a - b * b);
  const double delta = std::sqrt(delta_sq);
  const double root = std::sqrt(b * b - lambda);
  return {{0.0, -c * delta / root},
          2.0 * (a * a - lambda) / root,
          delta / root,
          c,
          delta,
          Ellipse::make({}, std::sqrt(a * a - lambda), root)};
}

Triangle confocal_lambda_triangle(double a, double b, double lambda, double t) {
  return porism_triangle(confocal_lambda_params(a, b, lambda), t);
}

PorismParams family_porism(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::BrocardPorism: return brocard_porism_params(spec.a, spec.b);
    case FamilyKind::ConfocalLambda: return confocal_lambda_params(spec.a, spec.b, spec.lambda);
    case FamilyKind::Homothetic: break;
  }
  throw GeometryError(ErrorCode::InvalidArgument, "homothetic family has no fixed circumcircle");
}

Triangle family_triangle(const FamilySpec& spec, double t) {
  if (spec.kind == FamilyKind::Homothetic) return homothetic_triangle(spec.a, spec.b, t);
  return porism_triangle(family_porism(spec), t);
}

Ellipse family_outer(const FamilySpec& spec) {
  if (spec.kind == FamilyKind::Homothetic) return homothetic_pair(spec.a, spec.b).outer;
  const PorismParams p = family_porism(spec);
  return Ellipse::circle(p.circumcenter, p.R);
}

Ellipse family_caustic(const FamilySpec& spec) {
  if (spec.kind == FamilyKind::Homothetic) return homothetic_pair(spec.a, spec.b).inner;
  return family_porism(spec).caustic;
}

std::vector<double> parameter_grid(int n) {
  std::vector<double> ts(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) ts[static_cast<std::size_t>(i)] = 2.0 * kPi * i / n;
  return ts;
}

double vertex_set_distance(const Triangle& t1, const Triangle& t2) {
  static constexpr std::array<std::array<int, 3>, 6> perms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : perms) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) worst = std::max(worst, distance(t1[i], t2[p[i]]));
    best = std::min(best, worst);
  }
  return best;
}

ClosedFormReport closed_form_discrepancy(double a, double b, int n) {
  ClosedFormReport report;
  for (double t : parameter_grid(n)) {
    ++report.samples;
    try {
      const double d = vertex_set_distance(brocard_triangle(a, b, t), brocard_triangle_closed_form(a, b, t));
      if (d > report.max_discrepancy) {
        report.max_discrepancy = d;
        report.worst_t = t;
      }
    } catch (const GeometryError& e) {
      if (e.code() != ErrorCode::SingularDenominator) throw;
      ++report.singular;
    }
  }
  return report;
}

}  // namespace poncelet
