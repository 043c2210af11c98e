#include "poncelet/invariants.hpp"

#include <algorithm>
#include <cmath>

#include "poncelet/centers.hpp"
#include "poncelet/circles.hpp"

namespace poncelet {

namespace {

// Neumaier-compensated accumulation in extended precision.
class CompensatedSum {
 public:
  void add(long double v) {
    const long double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  long double value() const { return sum_ + comp_; }

 private:
  long double sum_ = 0.0L;
  long double comp_ = 0.0L;
};

double family_scale(const FamilySpec& spec) { return std::max(spec.a, spec.b); }

bool is_degenerate(const FamilySpec& spec, const Triangle& tri, const SweepOptions& opts) {
  return !(area(tri) >= opts.degenerate_area * spec.a * spec.b);
}

void require_enough(int samples, int degenerate, const SweepOptions& opts) {
  if (degenerate > opts.max_degenerate_fraction * samples || samples - degenerate < 2) {
    throw GeometryError(ErrorCode::TooFewValidSamples,
                        std::to_string(degenerate) + " of " + std::to_string(samples) + " samples degenerate");
  }
}

template <typename Measure>
std::vector<double> collect(const FamilySpec& spec, int n, const SweepOptions& opts, int& degenerate,
                            Measure&& measure) {
  if (n < 2) throw GeometryError(ErrorCode::InvalidArgument, "sweep needs n >= 2");
  spec.validate();
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(n));
  degenerate = 0;
  for (double t : parameter_grid(n)) {
    try {
      const Triangle tri = family_triangle(spec, t);
      if (is_degenerate(spec, tri, opts)) {
        ++degenerate;
        continue;
      }
      values.push_back(measure(tri));
    } catch (const GeometryError& e) {
      if (e.code() == ErrorCode::InvalidAxes || e.code() == ErrorCode::InvalidLambda) throw;
      ++degenerate;
    }
  }
  require_enough(n, degenerate, opts);
  return values;
}

InvariantReport summarize(std::string name, const std::vector<double>& values, int degenerate, double scale) {
  InvariantReport r;
  r.name = std::move(name);
  r.samples = static_cast<int>(values.size());
  r.degenerate = degenerate;
  r.scale = scale;
  CompensatedSum sum;
  for (double v : values) sum.add(v);
  r.mean = static_cast<double>(sum.value() / static_cast<long double>(values.size()));
  for (double v : values) r.max_abs_dev = std::max(r.max_abs_dev, std::abs(v - r.mean));
  if (std::abs(r.mean) > 1e-300) r.rel_dev = r.max_abs_dev / std::abs(r.mean);
  return r;
}

}  // namespace

bool InvariantReport::pass(Tolerance tol) const {
  switch (expectation) {
    case Expectation::Varies:
      return rel_dev.has_value() && *rel_dev > 1e-6;
    case Expectation::Bounded:
      return std::abs(mean) + max_abs_dev <= tol.rel * scale;
    case Expectation::Constant:
      break;
  }
  const double floor = std::max(std::abs(mean), scale);
  if (!(max_abs_dev <= tol.rel * floor)) return false;
  if (closed_form) {
    return std::abs(mean - *closed_form) <= tol.rel * std::max(std::abs(*closed_form), scale);
  }
  return true;
}

bool PointInvariantReport::pass(Tolerance tol) const {
  return max_drift <= tol.rel * scale && closed_form_error() <= tol.rel * scale;
}

Statistic statistic_by_name(const std::string& name) {
  if (name == "area") return {name, [](const Triangle& t) { return area(t); }};
  if (name == "sum_sq") return {name, [](const Triangle& t) { return sum_squared_sides(t); }};
  if (name == "perimeter") return {name, [](const Triangle& t) { return perimeter(t); }};
  if (name == "omega") return {name, [](const Triangle& t) { return brocard_angle(t); }};
  if (name == "cot_omega") {
    return {name, [](const Triangle& t) { return 1.0 / std::tan(brocard_angle(t)); }};
  }
  if (name == "circumradius") return {name, [](const Triangle& t) { return circumradius(t); }};
  if (name == "shail") return {name, [](const Triangle& t) { return shail_check(t); }};
  throw GeometryError(ErrorCode::InvalidArgument, "unknown statistic '" + name + "'");
}

InvariantReport sweep(const FamilySpec& spec, const Statistic& statistic, int n, SweepOptions opts) {
  int degenerate = 0;
  const auto values = collect(spec, n, opts, degenerate, statistic.measure);
  return summarize(statistic.name, values, degenerate, 0.0);
}

PointInvariantReport sweep_point(const FamilySpec& spec, const std::string& name,
                                 const std::function<Point(const Triangle&)>& measure, int n,
                                 SweepOptions opts) {
  std::vector<Point> pts;
  int degenerate = 0;
  collect(spec, n, opts, degenerate, [&](const Triangle& tri) {
    pts.push_back(measure(tri));
    return 0.0;
  });
  PointInvariantReport r;
  r.name = name;
  r.samples = static_cast<int>(pts.size());
  r.scale = family_scale(spec);
  CompensatedSum sx, sy;
  for (const Point& p : pts) {
    sx.add(p.x);
    sy.add(p.y);
  }
  const auto count = static_cast<long double>(pts.size());
  r.mean = {static_cast<double>(sx.value() / count), static_cast<double>(sy.value() / count)};
  for (const Point& p : pts) r.max_drift = std::max(r.max_drift, distance(p, r.mean));
  return r;
}

HomotheticInvariants homothetic_invariants(double a, double b) {
  homothetic_pair(a, b);  // validates
  const double root3 = std::sqrt(3.0);
  return {3.0 * root3 * a * b / 4.0, 3.0 * root3 * a * b / 2.0, 4.5 * (a * a + b * b),
          root3 * (a * a + b * b) / (2.0 * a * b)};
}

double johnson_cot_omega(double phi) {
  const double c = std::cos(phi);
  return 0.5 * std::sqrt(3.0) * (c + 1.0 / c);
}

double beta_closed_form(double a, double b) {
  const double a2 = a * a, b2 = b * b;
  return std::sqrt(3.0 * a2 * a2 + 10.0 * a2 * b2 + 3.0 * b2 * b2) / (4.0 * a * b);
}

double sigma_closed_form(double a, double b) {
  const double a2 = a * a, b2 = b * b;
  const double s2 = (8.0 * a2 - 5.0 * b2 + 4.0 * std::sqrt(4.0 * a2 * a2 - 5.0 * a2 * b2 + b2 * b2)) / (3.0 * b2);
  return std::sqrt(s2);
}

InvariantReport aspect_ratio_sweep(const FamilySpec& spec, AspectConic which, int n, SweepOptions opts) {
  int degenerate = 0;
  std::vector<double> values;
  std::string name;
  if (which == AspectConic::BrocardInellipse) {
    name = "beta";
    values = collect(spec, n, opts, degenerate, [](const Triangle& tri) {
      const Ellipse e = brocard_inellipse(tri);
      return e.a / e.b;
    });
  } else {
    name = "sigma";
    values = collect(spec, n, opts, degenerate,
                     [](const Triangle& tri) { return conic_axis_ratio(steiner_circumellipse(tri)); });
  }
  InvariantReport r = summarize(name, values, degenerate, 1.0);
  if (which == AspectConic::BrocardInellipse && spec.kind == FamilyKind::Homothetic) {
    r.closed_form = beta_closed_form(spec.a, spec.b);
  } else if (which == AspectConic::SteinerCircumellipse && spec.kind != FamilyKind::Homothetic) {
    const Ellipse caustic = family_caustic(spec);
    r.closed_form = sigma_closed_form(caustic.a, caustic.b);
  }
  return r;
}

bool InvariantSuite::all_pass(Tolerance tol) const {
  return std::all_of(scalars.begin(), scalars.end(), [&](const auto& r) { return r.pass(tol); }) &&
         std::all_of(points.begin(), points.end(), [&](const auto& r) { return r.pass(tol); });
}

InvariantSuite invariant_suite(const FamilySpec& spec, int n) {
  spec.validate();
  InvariantSuite suite;
  const double scale = family_scale(spec);
  auto add = [&](const std::string& stat, std::optional<double> closed, double report_scale,
                 Expectation expect = Expectation::Constant, std::string note = {}) {
    InvariantReport r = sweep(spec, statistic_by_name(stat), n);
    r.closed_form = closed;
    r.scale = report_scale;
    r.expectation = expect;
    r.note = std::move(note);
    suite.scalars.push_back(std::move(r));
  };
  auto add_point = [&](const std::string& name, CenterId id, std::optional<Point> closed) {
    PointInvariantReport r = sweep_point(spec, name, [id](const Triangle& t) { return triangle_center(t, id); }, n);
    r.closed_form = closed;
    suite.points.push_back(std::move(r));
  };
  auto add_brocard_points = [&](double c) {
    PointInvariantReport r1 =
        sweep_point(spec, "Omega1", [](const Triangle& t) { return brocard_points(t).first; }, n);
    r1.closed_form = Point{-c, 0.0};
    PointInvariantReport r2 =
        sweep_point(spec, "Omega2", [](const Triangle& t) { return brocard_points(t).second; }, n);
    r2.closed_form = Point{c, 0.0};
    suite.points.push_back(std::move(r1));
    suite.points.push_back(std::move(r2));
  };

  if (spec.kind == FamilyKind::Homothetic) {
    const HomotheticInvariants h = homothetic_invariants(spec.a, spec.b);
    const double s2 = scale * scale;
    add("area", h.area, s2, Expectation::Constant,
        "erratum: the closed form 3*sqrt(3)*a*b/2 (= " + std::to_string(h.area_printed) +
            ") is off by a factor of 2; 3*sqrt(3)*a*b/4 is consistent with cot(w) = sum(s^2)/(4A) and is used");
    add("sum_sq", h.sum_sq, s2);
    add("omega", std::atan2(1.0, h.cot_omega), 1.0);
    add("cot_omega", h.cot_omega, 1.0);
    InvariantReport beta = aspect_ratio_sweep(spec, AspectConic::BrocardInellipse, n);
    suite.scalars.push_back(std::move(beta));
    add("perimeter", std::nullopt, scale, spec.a > spec.b ? Expectation::Varies : Expectation::Constant,
        "negative control: perimeter is not conserved by this family");
    add_point("X2", CenterId::X2, Point{0.0, 0.0});
    return suite;
  }

  const PorismParams p = family_porism(spec);
  const double a = p.caustic.a, b = p.caustic.b;
  add("omega", std::atan2(1.0, p.cot_omega), 1.0);
  add("cot_omega", p.cot_omega, 1.0);
  add("circumradius", p.R, scale);
  add("shail", std::nullopt, 1.0, Expectation::Bounded, "residual of the Brocard-point distance relation");
  suite.scalars.push_back(aspect_ratio_sweep(spec, AspectConic::SteinerCircumellipse, n));
  if (spec.kind == FamilyKind::BrocardPorism && spec.a > spec.b) {
    add("area", std::nullopt, scale * scale, Expectation::Varies,
        "negative control: area is not conserved by this family");
  }
  {
    InvariantReport r182 = sweep(
        spec,
        {"brocard_circle_radius",
         [](const Triangle& t) { return 0.5 * distance(triangle_center(t, CenterId::X3), triangle_center(t, CenterId::X6)); }},
        n);
    r182.closed_form = r182_closed_form(a, b);
    r182.scale = scale;
    r182.note = brocard_circle_erratum(a, b);
    suite.scalars.push_back(std::move(r182));
  }
  add_brocard_points(p.c);
  const Point x182 = x182_closed_form(a, b);
  add_point("X3", CenterId::X3, p.circumcenter);
  add_point("X6", CenterId::X6, 2.0 * x182 - p.circumcenter);
  add_point("X39", CenterId::X39, Point{0.0, 0.0});
  add_point("X182", CenterId::X182, x182);
  suite.points.back().note = x182_erratum(a, b);
  return suite;
}

}  // namespace poncelet
