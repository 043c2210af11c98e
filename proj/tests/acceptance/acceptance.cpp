// Prints one PASS/FAIL line per acceptance criterion and exits non-zero if any
// criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "poncelet/centers.hpp"
#include "poncelet/circles.hpp"
#include "poncelet/families.hpp"
#include "poncelet/invariants.hpp"
#include "poncelet/loci.hpp"
#include "poncelet/moses.hpp"
#include "poncelet/similarity.hpp"

using namespace poncelet;

namespace {

int failures = 0;

void report(int id, const char* title, bool ok, const std::string& detail) {
  std::printf("%s criterion %d (%s): %s\n", ok ? "PASS" : "FAIL", id, title, detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

void criterion1() {
  const FamilySpec spec = FamilySpec::homothetic(2, 1);
  const auto h = homothetic_invariants(2, 1);
  const auto cot = sweep(spec, statistic_by_name("cot_omega"), 1000);
  const auto ss = sweep(spec, statistic_by_name("sum_sq"), 1000);
  const auto area = sweep(spec, statistic_by_name("area"), 1000);
  const bool ok = *cot.rel_dev < 1e-9 && rel(cot.mean, h.cot_omega) < 1e-9 && std::abs(cot.mean - 2.165064) < 5e-7 &&
                  *ss.rel_dev < 1e-9 && rel(ss.mean, 22.5) < 1e-9 && *area.rel_dev < 1e-9 &&
                  rel(area.mean, h.area) < 1e-9 && std::abs(area.mean - 2.598076) < 5e-7;
  report(1, "homothetic invariance", ok,
         "cot=" + fmt("%.9f", cot.mean) + " rel_dev=" + fmt("%.1e", *cot.rel_dev) + "; sum_sq=" +
             fmt("%.9f", ss.mean) + " rel_dev=" + fmt("%.1e", *ss.rel_dev) + "; area=" + fmt("%.9f", area.mean) +
             " rel_dev=" + fmt("%.1e", *area.rel_dev) + " (3*sqrt(3)ab/4; the /2 constant " +
             fmt("%.6f", h.area_printed) + " is an erratum)");
}

struct PorismSweepStats {
  double max_R = 0, max_center = 0, max_cot = 0;
};

PorismSweepStats porism_sweep(double a, double b, double lambda, int n) {
  const auto p = confocal_lambda_params(a, b, lambda);
  PorismSweepStats s;
  for (double t : parameter_grid(n)) {
    const Triangle tri = confocal_lambda_triangle(a, b, lambda, t);
    const auto [center, radius] = circle_through(tri.v1, tri.v2, tri.v3);
    s.max_R = std::max(s.max_R, rel(radius, p.R));
    s.max_center = std::max(s.max_center, distance(center, p.circumcenter) / p.R);
    s.max_cot = std::max(s.max_cot, rel(1 / std::tan(brocard_angle(tri)), p.cot_omega));
  }
  return s;
}

void criterion2() {
  const auto p = brocard_porism_params(1, 0.8);
  const auto s = porism_sweep(1, 0.8, 0, 1000);
  const bool ok = std::abs(p.R - 2.5) < 5e-7 && std::abs(p.circumcenter.y + 1.374773) < 5e-7 &&
                  std::abs(p.cot_omega - 2.291288) < 5e-7 && s.max_R < 1e-9 && s.max_center < 1e-9 &&
                  s.max_cot < 1e-9;
  report(2, "Brocard-porism parameters", ok,
         "R=" + fmt("%.9f", p.R) + " X3=(0," + fmt("%.9f", p.circumcenter.y) + ") cot=" + fmt("%.9f", p.cot_omega) +
             "; per-triangle max rel dev R " + fmt("%.1e", s.max_R) + ", center " + fmt("%.1e", s.max_center) +
             ", cot " + fmt("%.1e", s.max_cot));
}

void criterion3() {
  double drift = 0, shail = 0, identity = 0;
  for (double t : parameter_grid(1000)) {
    const Triangle tri = brocard_triangle(1, 0.8, t);
    const auto [o1, o2] = brocard_points(tri);
    drift = std::max({drift, distance(o1, {-0.6, 0}), distance(o2, {0.6, 0})});
    shail = std::max(shail, shail_check(tri));
    // c = R sin w sqrt(1 - 4 sin² w), with R, w and c all measured on this triangle.
    const double R = circumradius(tri), sw = std::sin(brocard_angle(tri));
    const double c = 0.5 * distance(o1, o2);
    identity = std::max(identity, std::abs(c - R * sw * std::sqrt(1 - 4 * sw * sw)));
  }
  report(3, "stationary Brocard points", drift < 1e-8 && shail < 1e-9 && identity < 1e-12,
         "max drift " + fmt("%.1e", drift) + ", Shail residual " + fmt("%.1e", shail) + ", focal identity residual " +
             fmt("%.1e", identity));
}

void criterion4() {
  double drift = 0, cot = 0;
  for (double t : parameter_grid(1000)) {
    const Triangle tri = confocal_lambda_triangle(1, 0.8, 0.28, t);
    const auto [o1, o2] = brocard_points(tri);
    drift = std::max({drift, distance(o1, {-0.6, 0}), distance(o2, {0.6, 0})});
    cot = std::max(cot, rel(1 / std::tan(brocard_angle(tri)), std::sqrt(7.0)));
  }
  bool identical = true;
  for (double t : parameter_grid(1000)) {
    const Triangle a = confocal_lambda_triangle(1, 0.8, 0, t), b = brocard_triangle(1, 0.8, t);
    identical = identical && a.v1 == b.v1 && a.v2 == b.v2 && a.v3 == b.v3;
  }
  const auto p0 = confocal_lambda_params(1, 0.8, 0), q = brocard_porism_params(1, 0.8);
  identical = identical && p0.R == q.R && p0.circumcenter == q.circumcenter && p0.cot_omega == q.cot_omega;
  const auto s0 = porism_sweep(1, 0.8, 0, 1000);
  const bool c2 = s0.max_R < 1e-9 && s0.max_center < 1e-9 && s0.max_cot < 1e-9;
  report(4, "lambda family", drift < 1e-8 && cot < 1e-9 && identical && c2,
         "Brocard point drift " + fmt("%.1e", drift) + ", cot rel dev from sqrt(7) " + fmt("%.1e", cot) +
             (identical ? ", lambda=0 bitwise identical to the Brocard porism" : ", lambda=0 differs"));
}

void criterion5() {
  const auto beta = aspect_ratio_sweep(FamilySpec::homothetic(2, 1), AspectConic::BrocardInellipse, 1000);
  const auto sigma = aspect_ratio_sweep(FamilySpec::brocard(1, 0.8), AspectConic::SteinerCircumellipse, 1000);
  const auto beta1 = aspect_ratio_sweep(FamilySpec::homothetic(1.5, 1.5), AspectConic::BrocardInellipse, 200);
  const auto sigma1 = aspect_ratio_sweep(FamilySpec::brocard(1, 1), AspectConic::SteinerCircumellipse, 200);
  const double circ = std::max(std::abs(beta1.mean - 1) + beta1.max_abs_dev, std::abs(sigma1.mean - 1) + sigma1.max_abs_dev);
  const bool ok = rel(beta.mean, std::sqrt(91.0) / 8) < 1e-8 && *beta.rel_dev < 1e-8 &&
                  rel(sigma.mean, sigma_closed_form(1, 0.8)) < 1e-8 && *sigma.rel_dev < 1e-8 &&
                  std::abs(sigma.mean - 2.188901) < 5e-7 && circ < 1e-10;
  report(5, "aspect ratios", ok,
         "beta=" + fmt("%.9f", beta.mean) + " (sqrt(91)/8=" + fmt("%.9f", std::sqrt(91.0) / 8) + "), sigma=" +
             fmt("%.9f", sigma.mean) + " (closed form " + fmt("%.9f", sigma_closed_form(1, 0.8)) +
             "), a=b deviation " + fmt("%.1e", circ));
}

void criterion6() {
  const double beta = beta_closed_form(2, 1);
  const auto expected = brocard_porism_params(beta, 1);
  double caustic = 0, center = 0, radius = 0, omega = 0;
  for (const auto& f : homothetic_to_brocard_sweep(2, 1, 1, 1000)) {
    const Ellipse e = brocard_inellipse(f.image_tri);
    caustic = std::max({caustic, std::abs(e.a - beta), std::abs(e.b - 1), norm(e.center)});
    const auto [c, r] = circle_through(f.image_tri.v1, f.image_tri.v2, f.image_tri.v3);
    center = std::max(center, distance(c, expected.circumcenter));
    radius = std::max(radius, std::abs(r - expected.R));
    omega = std::max(omega, std::abs(brocard_angle(f.image_tri) - brocard_angle(f.source_tri)));
  }
  double pair = 0;
  for (const auto& f : brocard_to_homothetic_sweep(1, 0.8, 1, 1000)) {
    pair = std::max(pair, fit_homothetic_pair(f.image_tri).pair_condition_residual);
    omega = std::max(omega, std::abs(brocard_angle(f.image_tri) - brocard_angle(f.source_tri)));
  }
  report(6, "similarity", caustic < 1e-8 && center < 1e-8 && radius < 1e-8 && omega < 1e-10 && pair < 1e-10,
         "caustic drift " + fmt("%.1e", caustic) + ", circumcenter drift " + fmt("%.1e", center) + ", radius drift " +
             fmt("%.1e", radius) + ", omega change " + fmt("%.1e", omega) + ", pair residual " + fmt("%.1e", pair));
}

void criterion7() {
  const auto x39 = fit_axis_aligned_ellipse(locus_points(sample_locus(FamilySpec::homothetic(2, 1), CenterId::X39, 1000)));
  const double e39 = std::max(rel(x39.semi_x, 3.0 / 7), rel(x39.semi_y, 3.0 / 26));
  const auto x2 = fit_circle(locus_points(sample_locus(FamilySpec::brocard(1, 0.8), CenterId::X2, 1000)));
  const auto cf = x2_locus_brocard(1, 0.8);
  const double e2 = std::max(distance(x2.center, cf.center) / norm(cf.center), rel(x2.semi_x, cf.radius));
  double moses = 0;
  for (int i = 0; i < 50; ++i) {
    const double a = 1 + 0.04 * i, b = a * (0.2 + 0.8 * ((i * 17) % 50) / 50.0);
    const auto l = x2_locus_brocard(a, b);
    moses = std::max(moses, std::abs(l.radius - l.radius_moses) / std::max(1.0, l.radius));
  }
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0, 2 * kPi);
  double axes = 0;
  for (int i = 0; i < 50; ++i) axes = std::max(axes, axis_intersection_check(1, 0.8, u(rng)).residual);
  report(7, "loci", e39 < 1e-8 && e2 < 1e-8 && moses < 1e-12 && axes < 1e-8,
         "X39 semi-axes (" + fmt("%.9f", x39.semi_x) + ", " + fmt("%.9f", x39.semi_y) + ") rel err " + fmt("%.1e", e39) +
             "; X2 center y " + fmt("%.9f", x2.center.y) + " radius " + fmt("%.9f", x2.semi_x) + " rel err " +
             fmt("%.1e", e2) + "; radius forms " + fmt("%.1e", moses) + "; axis intersections " + fmt("%.1e", axes));
}

void criterion8() {
  const Point o1{-0.6, 0}, o2{0.6, 0};
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> radius(0.3, 5.0), angle(0, 2 * kPi);
  int ok = 0, tried = 0;
  double worst = 0;
  while (tried < 100) {
    const double r = radius(rng), th = angle(rng);
    const Point A{r * std::cos(th), r * std::sin(th)};
    if (std::abs(A.y) < 1e-3 * r) continue;  // on the line through the Brocard points
    ++tried;
    try {
      const auto res = moses_construct(o1, o2, A);
      worst = std::max(worst, res.brocard_residual);
      if (res.brocard_residual < 1e-7) ++ok;
    } catch (const GeometryError& e) {
      std::printf("  seed (%.6f, %.6f) failed: %s\n", A.x, A.y, e.what());
    }
  }
  const Triangle target = brocard_triangle(1, 0.8, kPi / 2);
  double reproduce = 1.0;
  try {
    reproduce = vertex_set_distance(moses_construct(o1, o2, target.v1).triangle, target);
  } catch (const GeometryError& e) {
    std::printf("  porism seed failed: %s\n", e.what());
  }
  report(8, "Moses construction", ok == tried && reproduce < 1e-7,
         std::to_string(ok) + "/" + std::to_string(tried) + " seeds, worst residual " + fmt("%.1e", worst) +
             ", porism vertex-set distance " + fmt("%.1e", reproduce));
}

void criterion9() {
  const Tolerance tol{1e-8};
  int passed = 0, total = 0;
  for (const auto& s : verify_stationarity(1, 0.8, 360)) {
    ++total;
    if (s.pass(tol)) ++passed;
  }
  double routes = 0;
  const double r182 = r182_closed_form(1, 0.8);
  for (double t : parameter_grid(360)) {
    const auto r = brocard_circle_routes(1, 0.8, t);
    routes = std::max({routes, std::abs(r.midpoint_route - r182), std::abs(r.concyclic_route - r182), r.x6_residual});
  }
  // The quoted six-digit value 0.818318 is one unit high in its last digit
  // (the closed form evaluates to 0.8183170884), so it is compared at 1e-6.
  report(9, "stationary circles", passed == total && std::abs(r182 - 0.818318) < 1e-6 && routes < 1e-8,
         std::to_string(passed) + "/" + std::to_string(total) + " circles stationary; R182=" + fmt("%.10f", r182) +
             " with route spread " + fmt("%.1e", routes) + "; erratum: " + brocard_circle_erratum(1, 0.8));
}

void criterion10() {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(-5, 5);
  double agree = 0, b2 = 0, max_omega = 0;
  int n = 0;
  while (n < 10000) {
    const Triangle tri{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
    if (area(tri) < 1e-3 * length_scale(tri) * length_scale(tri)) continue;
    ++n;
    agree = std::max(agree, brocard_angle_check(tri).discrepancy);
    max_omega = std::max(max_omega, brocard_angle(tri));
    const auto s = brocard_inellipse_b2(tri);
    const double hi = std::max({s[0], s[1], s[2]}), lo = std::min({s[0], s[1], s[2]});
    b2 = std::max(b2, (hi - lo) / hi);
  }
  const auto cf = closed_form_discrepancy(1, 0.8, 100);
  std::printf("  closed-form vertex report (informational): %d samples, %d singular, max discrepancy %.3e at t=%.6f\n",
              cf.samples, cf.singular, cf.max_discrepancy, cf.worst_t);
  report(10, "property suite", agree < 1e-10 && max_omega <= kPi / 6 && b2 < 1e-9,
         "10000 triangles: cot agreement " + fmt("%.1e", agree) + ", max omega " + fmt("%.6f", max_omega) +
             " (pi/6=" + fmt("%.6f", kPi / 6) + "), b^2 spread " + fmt("%.1e", b2));
}

}  // namespace

int main() {
  void (*checks[])() = {criterion1, criterion2, criterion3, criterion4, criterion5,
                        criterion6, criterion7, criterion8, criterion9, criterion10};
  for (int i = 0; i < 10; ++i) {
    try {
      checks[i]();
    } catch (const std::exception& e) {
      report(i + 1, "exception", false, e.what());
    }
  }
  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
