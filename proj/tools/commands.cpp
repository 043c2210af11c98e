#include "commands.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "poncelet/circles.hpp"
#include "poncelet/invariants.hpp"
#include "poncelet/loci.hpp"
#include "poncelet/moses.hpp"
#include "poncelet/similarity.hpp"
#include "svg.hpp"

namespace poncelet::cli {

using json = nlohmann::ordered_json;

namespace {

/// Input problems detected before any computation starts.
struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json to_json(Point p) { return json::array({p.x, p.y}); }

json to_json(const Triangle& t) { return json::array({to_json(t.v1), to_json(t.v2), to_json(t.v3)}); }

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

const char* const kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string palette(std::size_t i) { return kPalette[i % std::size(kPalette)]; }

bool is_porism(const FamilySpec& spec) { return spec.kind != FamilyKind::Homothetic; }

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  if (cfg.format.empty()) return;
  for (const char* f : allowed) {
    if (cfg.format == f) return;
  }
  throw InvalidInput("format '" + cfg.format + "' is not available for this command");
}

std::vector<Point> vertices(const Triangle& t) { return {t.v1, t.v2, t.v3}; }

std::vector<CenterId> centers_or(const RunConfig& cfg, std::vector<CenterId> fallback) {
  return cfg.centers.empty() ? fallback : cfg.centers;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------- sample

int cmd_sample(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"csv"});
  write_sample_csv(cfg.family, cfg.n, cfg.centers, out);
  return kPass;
}

// ---------------------------------------------------------------- invariants

int cmd_invariants(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_format(cfg, {"json"});
  const Tolerance tol{cfg.tol};
  const InvariantSuite suite = invariant_suite(cfg.family, cfg.n);
  json reports = json::array();
  for (const InvariantReport& r : suite.scalars) {
    const bool ok = r.pass(tol);
    reports.push_back({{"name", r.name},
                       {"closed_form", optional_json(r.closed_form)},
                       {"mean", r.mean},
                       {"max_abs_dev", r.max_abs_dev},
                       {"rel_dev", optional_json(r.rel_dev)},
                       {"pass", ok},
                       {"note", r.note},
                       {"samples", r.samples},
                       {"degenerate", r.degenerate}});
    if (!ok) {
      err << "FAIL " << r.name << ": max_abs_dev=" << format_real(r.max_abs_dev);
      if (r.closed_form) err << " |mean-closed_form|=" << format_real(std::abs(r.mean - *r.closed_form));
      err << " tol=" << format_real(cfg.tol) << '\n';
    }
  }
  for (const PointInvariantReport& r : suite.points) {
    const bool ok = r.pass(tol);
    reports.push_back({{"name", r.name},
                       {"closed_form", r.closed_form ? to_json(*r.closed_form) : json(nullptr)},
                       {"mean", to_json(r.mean)},
                       {"max_abs_dev", r.max_drift},
                       {"rel_dev", r.max_drift / r.scale},
                       {"pass", ok},
                       {"note", r.note},
                       {"samples", r.samples},
                       {"closed_form_error", r.closed_form_error()}});
    if (!ok) {
      err << "FAIL " << r.name << ": drift=" << format_real(r.max_drift)
          << " closed_form_error=" << format_real(r.closed_form_error()) << " tol=" << format_real(cfg.tol) << '\n';
    }
  }
  emit(out, reports);
  return suite.all_pass(tol) ? kPass : kInvariantFailure;
}

// ---------------------------------------------------------------- svg

// Homothetic triangles repeat with period 2pi/3 in t; spread snapshots over one period.
std::vector<double> snapshot_grid(const FamilySpec& spec, int snapshots) {
  std::vector<double> grid = parameter_grid(snapshots);
  if (!is_porism(spec)) {
    for (double& t : grid) t /= 3.0;
  }
  return grid;
}

void draw_family(SvgCanvas& canvas, const FamilySpec& spec, int snapshots) {
  Style outer;
  outer.width = 1.5;
  canvas.ellipse(family_outer(spec), outer);
  canvas.ellipse(family_caustic(spec), outer);
  const std::vector<double> grid = snapshot_grid(spec, snapshots);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    Style s;
    s.stroke = palette(i);
    s.opacity = 0.85;
    canvas.polygon(vertices(family_triangle(spec, grid[i])), s);
  }
}

void draw_locus(SvgCanvas& canvas, const FamilySpec& spec, CenterId id, int n, std::size_t color) {
  const std::vector<Point> pts = locus_points(sample_locus(spec, id, std::clamp(n, 3, 720)));
  Style s;
  s.stroke = palette(color);
  s.width = 1.2;
  s.dashed = true;
  canvas.polyline(pts, s, true);
}

int cmd_svg(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"svg"});
  SvgCanvas canvas;
  draw_family(canvas, cfg.family, cfg.snapshots);
  const std::vector<CenterId> loci =
      centers_or(cfg, is_porism(cfg.family) ? std::vector<CenterId>{} : std::vector<CenterId>{CenterId::X39});
  for (std::size_t i = 0; i < loci.size(); ++i) draw_locus(canvas, cfg.family, loci[i], cfg.n, 4 + i);

  if (is_porism(cfg.family)) {
    // Stationary objects: read them off one member of the family.
    const Triangle tri = family_triangle(cfg.family, 0.0);
    const auto [o1, o2] = brocard_points(tri);
    const Point x3 = triangle_center(tri, CenterId::X3);
    const Point x6 = triangle_center(tri, CenterId::X6);
    const Point x182 = triangle_center(tri, CenterId::X182);
    Style brocard;
    brocard.stroke = "#ff7f0e";
    brocard.dashed = true;
    canvas.ellipse(Ellipse::circle(x182, distance(x182, x3)), brocard);
    canvas.marker(o1, "Ω1", "#d62728");
    canvas.marker(o2, "Ω2", "#d62728");
    canvas.marker(x3, "X3", "black");
    canvas.marker(x6, "X6", "black");
    canvas.marker(triangle_center(tri, CenterId::X39), "X39", "#9467bd");
    canvas.marker(x182, "X182", "#ff7f0e");
  } else {
    canvas.marker(Point{0.0, 0.0}, "X2", "black");
  }
  out << canvas.render();
  return kPass;
}

// ---------------------------------------------------------------- loci

struct LocusFit {
  FittedConic fit;
  std::optional<FittedConic> closed_form;
  int winding = 0;
};

LocusFit fit_locus(const RunConfig& cfg, CenterId id, const std::vector<Point>& pts) {
  std::string model = cfg.model;
  if (model == "auto") model = id == CenterId::X2 && is_porism(cfg.family) ? "circle" : "ellipse";
  LocusFit out;
  if (model == "circle") {
    out.fit = fit_circle(pts);
  } else if (model == "ellipse") {
    out.fit = fit_axis_aligned_ellipse(pts);
  } else {
    throw InvalidInput("unknown locus model '" + cfg.model + "' (circle, ellipse, auto)");
  }
  const double a = cfg.family.a, b = cfg.family.b;
  if (cfg.family.kind == FamilyKind::Homothetic && id == CenterId::X39) {
    const X39Locus l = x39_locus_closed_form(a, b);
    out.closed_form = FittedConic{a > b ? LocusKind::AxisAlignedEllipse : LocusKind::PointLocus, {}, l.a39, l.b39, 0.0};
  } else if (cfg.family.kind == FamilyKind::BrocardPorism && id == CenterId::X2) {
    const X2Locus l = x2_locus_brocard(a, b);
    out.closed_form = FittedConic{a > b ? LocusKind::Circle : LocusKind::PointLocus, l.center, l.radius, l.radius, 0.0};
  }
  out.winding = out.fit.kind == LocusKind::PointLocus ? 0 : winding_number(pts, out.fit.center);
  return out;
}

json fitted_json(const FittedConic& f) {
  static const char* const kinds[] = {"circle", "axis_aligned_ellipse", "general_conic", "point"};
  return {{"kind", kinds[static_cast<int>(f.kind)]},
          {"center", to_json(f.center)},
          {"semi_axes", json::array({f.semi_x, f.semi_y})},
          {"rms_residual", f.rms_residual}};
}

int cmd_loci(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_format(cfg, {"json", "csv"});
  const std::vector<CenterId> ids =
      centers_or(cfg, {is_porism(cfg.family) ? CenterId::X2 : CenterId::X39});
  if (cfg.format == "csv") {
    out << 't';
    for (CenterId id : ids) out << ',' << to_string(id) << "_x," << to_string(id) << "_y";
    out << '\n';
    std::vector<std::vector<LocusSample>> all;
    for (CenterId id : ids) all.push_back(sample_locus(cfg.family, id, cfg.n));
    for (std::size_t i = 0; i < static_cast<std::size_t>(cfg.n); ++i) {
      out << format_real(all.front()[i].t);
      for (const auto& s : all) out << ',' << format_real(s[i].p.x) << ',' << format_real(s[i].p.y);
      out << '\n';
    }
    return kPass;
  }

  bool all_ok = true;
  json reports = json::array();
  for (CenterId id : ids) {
    const std::vector<Point> pts = locus_points(sample_locus(cfg.family, id, cfg.n));
    const LocusFit lf = fit_locus(cfg, id, pts);
    const double scale = std::max(cfg.family.a, 1e-300);
    json r{{"center", std::string(to_string(id))}, {"samples", cfg.n}, {"fit", fitted_json(lf.fit)},
           {"winding_number", lf.winding}};
    if (lf.closed_form) {
      const FittedConic& cf = *lf.closed_form;
      const double err_axes = std::max(std::abs(lf.fit.semi_x - cf.semi_x), std::abs(lf.fit.semi_y - cf.semi_y));
      const double err_center = distance(lf.fit.center, cf.center);
      const bool ok = std::max(err_axes, err_center) <= cfg.tol * scale && lf.fit.rms_residual <= cfg.tol * scale;
      all_ok = all_ok && ok;
      r["closed_form"] = fitted_json(cf);
      r["axes_error"] = err_axes;
      r["center_error"] = err_center;
      r["pass"] = ok;
      if (!ok) err << "FAIL " << to_string(id) << " locus: axes_error=" << format_real(err_axes)
                   << " center_error=" << format_real(err_center) << '\n';
      if (id == CenterId::X2 && cfg.family.kind == FamilyKind::BrocardPorism) {
        r["moses_radius"] = x2_locus_brocard(cfg.family.a, cfg.family.b).radius_moses;
      }
    } else {
      r["closed_form"] = nullptr;
    }
    reports.push_back(std::move(r));
  }
  emit(out, reports);
  return all_ok ? kPass : kInvariantFailure;
}

// ---------------------------------------------------------------- similarity

int cmd_similarity(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_format(cfg, {"json", "svg"});
  const FamilySpec& spec = cfg.family;
  if (spec.kind == FamilyKind::ConfocalLambda) {
    throw InvalidInput("similarity maps homothetic <-> brocard families only");
  }
  const bool forward = spec.kind == FamilyKind::Homothetic;
  const std::vector<SimilarityFrame> frames = forward ? homothetic_to_brocard_sweep(spec.a, spec.b, cfg.k, cfg.n)
                                                      : brocard_to_homothetic_sweep(spec.a, spec.b, cfg.k, cfg.n);
  const double scale = std::max(cfg.k * std::max(spec.a / spec.b, 1.0), 1.0);
  const Tolerance tol{cfg.tol};

  double omega_dev = 0.0, similarity_dev = 0.0;
  for (const SimilarityFrame& f : frames) {
    omega_dev = std::max(omega_dev, std::abs(brocard_angle(f.image_tri) - brocard_angle(f.source_tri)));
    similarity_dev = std::max(similarity_dev, direct_similarity_residual(f.source_tri, f.image_tri));
  }

  json summary{{"direction", forward ? "homothetic_to_brocard" : "brocard_to_homothetic"},
               {"k", cfg.k},
               {"omega_max_dev", omega_dev},
               {"shape_max_dev", similarity_dev},
               {"circular_degeneracy", frames.front().circular_degeneracy}};
  bool ok = omega_dev <= tol.rel && similarity_dev <= tol.rel * scale;
  Ellipse image_outer, image_inner;
  if (forward) {
    const double beta = beta_closed_form(spec.a, spec.b);
    Point cc0;
    double r0 = 0.0, center_drift = 0.0, radius_drift = 0.0, caustic_dev = 0.0;
    for (std::size_t i = 0; i < frames.size(); ++i) {
      const auto [cc, r] = circle_through(frames[i].image_tri.v1, frames[i].image_tri.v2, frames[i].image_tri.v3);
      if (i == 0) {
        cc0 = cc;
        r0 = r;
      }
      center_drift = std::max(center_drift, distance(cc, cc0));
      radius_drift = std::max(radius_drift, std::abs(r - r0));
      const Ellipse in = brocard_inellipse(frames[i].image_tri);
      caustic_dev = std::max({caustic_dev, std::abs(in.a - cfg.k * beta), std::abs(in.b - cfg.k), norm(in.center)});
    }
    summary["image_caustic"] = json::array({cfg.k * beta, cfg.k});
    summary["image_caustic_max_dev"] = caustic_dev;
    summary["image_circumcenter"] = to_json(cc0);
    summary["image_circumradius"] = r0;
    summary["circumcenter_max_drift"] = center_drift;
    summary["circumradius_max_drift"] = radius_drift;
    ok = ok && std::max({caustic_dev, center_drift, radius_drift}) <= tol.rel * scale;
    image_outer = Ellipse::circle(cc0, r0);
    image_inner = Ellipse::make({0.0, 0.0}, cfg.k * beta, cfg.k, 0.0);
  } else {
    const double sigma = sigma_closed_form(spec.a, spec.b);
    double pair_dev = 0.0, outer_dev = 0.0, fit_dev = 0.0;
    for (const SimilarityFrame& f : frames) {
      const HomotheticFit fit = fit_homothetic_pair(f.image_tri);
      pair_dev = std::max(pair_dev, fit.pair_condition_residual);
      fit_dev = std::max({fit_dev, fit.incidence_residual, fit.tangency_residual});
      outer_dev = std::max({outer_dev, std::abs(fit.outer_a - cfg.k * sigma), std::abs(fit.outer_b - cfg.k)});
    }
    summary["image_outer"] = json::array({cfg.k * sigma, cfg.k});
    summary["image_outer_max_dev"] = outer_dev;
    summary["pair_condition_max_residual"] = pair_dev;
    summary["fit_max_residual"] = fit_dev;
    ok = ok && pair_dev <= tol.rel && outer_dev <= tol.rel * scale && fit_dev <= tol.rel * scale;
    image_outer = Ellipse::make({0.0, 0.0}, cfg.k * sigma, cfg.k, 0.0);
    image_inner = Ellipse::make({0.0, 0.0}, 0.5 * cfg.k * sigma, 0.5 * cfg.k, 0.0);
  }
  summary["pass"] = ok;
  if (!ok) err << "FAIL similarity: " << summary.dump() << '\n';

  if (cfg.format == "svg") {
    SvgCanvas left, right;
    Style conic;
    conic.width = 1.5;
    left.ellipse(family_outer(spec), conic);
    left.ellipse(family_caustic(spec), conic);
    right.ellipse(image_outer, conic);
    right.ellipse(image_inner, conic);
    const std::vector<double> grid = snapshot_grid(spec, cfg.snapshots);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const SimilarityFrame f = forward ? homothetic_to_brocard(spec.a, spec.b, cfg.k, grid[i])
                                        : brocard_to_homothetic(spec.a, spec.b, cfg.k, grid[i]);
      Style s;
      s.stroke = palette(i);
      s.opacity = 0.85;
      left.polygon(vertices(f.source_tri), s);
      right.polygon(vertices(f.image_tri), s);
    }
    left.place_right(right, forward ? "homothetic" : "brocard", forward ? "brocard" : "homothetic");
    out << left.render(1200);
    return ok ? kPass : kInvariantFailure;
  }

  json jframes = json::array();
  for (const SimilarityFrame& f : frames) {
    jframes.push_back({{"t", f.t},
                       {"scale", f.transform.scale},
                       {"rotation", f.transform.rot},
                       {"pre_translate", to_json(f.transform.pre_translate)},
                       {"minor_axis_angle", f.minor_axis_angle},
                       {"source", to_json(f.source_tri)},
                       {"image", to_json(f.image_tri)}});
  }
  emit(out, json{{"summary", summary}, {"frames", jframes}});
  return ok ? kPass : kInvariantFailure;
}

// ---------------------------------------------------------------- circles

int cmd_circles(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_format(cfg, {"json"});
  if (cfg.family.kind != FamilyKind::BrocardPorism) throw InvalidInput("circles needs --family brocard");
  const double a = cfg.family.a, b = cfg.family.b;
  const Tolerance tol{cfg.tol};

  json registry = json::array();
  for (const NamedCircle& c : stationary_circles(a, b)) {
    registry.push_back({{"name", c.name},
                        {"center_label", c.center_label},
                        {"center", c.center_verifiable ? to_json(c.center) : json(nullptr)},
                        {"radius", c.radius},
                        {"note", c.note}});
  }
  bool ok = true;
  json checks = json::array();
  for (const CircleStationarity& s : verify_stationarity(a, b, cfg.n)) {
    const bool pass = s.pass(tol);
    ok = ok && pass;
    json j{{"name", s.name},
           {"mean_center", s.expected.center_verifiable ? to_json(s.mean_center) : json(nullptr)},
           {"mean_radius", s.mean_radius},
           {"max_center_drift", s.expected.center_verifiable ? json(s.max_center_drift) : json(nullptr)},
           {"max_radius_dev", s.max_radius_dev},
           {"pass", pass}};
    if (s.concyclic_residual) j["x6_concyclic_residual"] = *s.concyclic_residual;
    checks.push_back(std::move(j));
    if (!pass) err << "FAIL circle " << s.name << ": radius_dev=" << format_real(s.max_radius_dev) << '\n';
  }
  const BrocardCircleRoutes routes = brocard_circle_routes(a, b, 0.0);
  emit(out, json{{"registry", registry},
                 {"stationarity", checks},
                 {"brocard_circle_radius",
                  {{"closed_form", routes.closed_form},
                   {"midpoint_route", routes.midpoint_route},
                   {"concyclic_route", routes.concyclic_route},
                   {"tabulated_variant", r182_tabulated(a, b)}}},
                 {"errata", json::array({brocard_circle_erratum(a, b), x182_erratum(a, b)})}});
  return ok ? kPass : kInvariantFailure;
}

// ---------------------------------------------------------------- moses

int cmd_moses(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_format(cfg, {"json"});
  if (!is_porism(cfg.family)) throw InvalidInput("moses needs a porism family for its Brocard points");
  const double c = family_porism(cfg.family).c;
  if (!(c > 0.0)) throw InvalidInput("Brocard points coincide when a == b");
  const Point o1{-c, 0.0}, o2{c, 0.0};
  MosesOptions options;
  options.target_cot_omega = cfg.target_cot_omega;

  std::vector<Point> seeds;
  if (cfg.seed_point) {
    seeds.push_back(*cfg.seed_point);
  } else {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> radius(0.5 * c, 8.0 * c), angle(0.0, 2.0 * kPi);
    for (int i = 0; i < cfg.n; ++i) {
      const double r = radius(rng), t = angle(rng);
      seeds.push_back({r * std::cos(t), r * std::sin(t)});
    }
  }

  int success = 0, degenerate = 0, failed = 0;
  json runs = json::array();
  for (const Point& A : seeds) {
    json j{{"A", to_json(A)}};
    // Seeds this close to the line through the Brocard points are excluded.
    if (std::abs(A.y) < 1e-3 * norm(A)) {
      j["status"] = "excluded_near_degenerate";
      ++degenerate;
      runs.push_back(std::move(j));
      continue;
    }
    try {
      const MosesResult m = moses_construct(o1, o2, A, options);
      ++success;
      j["status"] = "ok";
      j["triangle"] = to_json(m.triangle);
      j["brocard_residual"] = m.brocard_residual;
      j["omega_swapped"] = m.omega_swapped;
      j["candidates"] = m.candidates.size();
      j["cot_omega"] = m.candidates[m.selected].cot_omega;
      j["R_at_infinity"] = m.R_at_infinity;
    } catch (const GeometryError& e) {
      j["status"] = e.code() == ErrorCode::DegenerateConfiguration ? "degenerate" : "failed";
      j["error"] = e.what();
      (e.code() == ErrorCode::DegenerateConfiguration ? degenerate : failed)++;
      if (e.code() != ErrorCode::DegenerateConfiguration) err << "FAIL moses seed: " << e.what() << '\n';
    }
    runs.push_back(std::move(j));
  }
  emit(out, json{{"omega1", to_json(o1)},
                 {"omega2", to_json(o2)},
                 {"success", success},
                 {"degenerate", degenerate},
                 {"failed", failed},
                 {"runs", runs}});
  return failed == 0 && success > 0 ? kPass : kInvariantFailure;
}

// ---------------------------------------------------------------- closed-form

int cmd_closed_form(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json"});
  if (cfg.family.kind != FamilyKind::BrocardPorism) throw InvalidInput("closed-form needs --family brocard");
  const ClosedFormReport r = closed_form_discrepancy(cfg.family.a, cfg.family.b, cfg.n);
  emit(out, json{{"samples", r.samples},
                 {"singular", r.singular},
                 {"max_discrepancy", r.max_discrepancy},
                 {"worst_t", r.worst_t},
                 {"gating", false}});
  return kPass;
}

}  // namespace

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_sample_csv(const FamilySpec& spec, int n, const std::vector<CenterId>& centers, std::ostream& out) {
  out << "t,x1,y1,x2,y2,x3,y3";
  for (CenterId id : centers) out << ',' << to_string(id) << "_x," << to_string(id) << "_y";
  out << '\n';
  for (double t : parameter_grid(n)) {
    const Triangle tri = family_triangle(spec, t);
    out << format_real(t);
    for (int i = 0; i < 3; ++i) out << ',' << format_real(tri[i].x) << ',' << format_real(tri[i].y);
    for (CenterId id : centers) {
      const Point p = triangle_center(tri, id);
      out << ',' << format_real(p.x) << ',' << format_real(p.y);
    }
    out << '\n';
  }
}

std::vector<SampleRow> read_sample_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("t,x1,y1,x2,y2,x3,y3", 0) != 0) {
    throw std::runtime_error("missing sample CSV header");
  }
  const auto columns = static_cast<std::size_t>(std::count(line.begin(), line.end(), ',') + 1);
  if (columns < 7 || (columns - 7) % 2 != 0) throw std::runtime_error("bad sample CSV header");
  std::vector<SampleRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> v;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      std::size_t used = 0;
      v.push_back(std::stod(cell, &used));
      if (used != cell.size()) throw std::runtime_error("bad number '" + cell + "'");
    }
    if (v.size() != columns) throw std::runtime_error("row width does not match header");
    SampleRow row;
    row.t = v[0];
    row.tri = {{v[1], v[2]}, {v[3], v[4]}, {v[5], v[6]}};
    for (std::size_t i = 7; i < v.size(); i += 2) row.centers.push_back({v[i], v[i + 1]});
    rows.push_back(std::move(row));
  }
  return rows;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.n < 2) throw InvalidInput("--n must be at least 2");
    if (!(cfg.tol > 0.0)) throw InvalidInput("--tol must be positive");
    if (!(cfg.k > 0.0)) throw InvalidInput("--k must be positive");
    if (cfg.snapshots < 1) throw InvalidInput("--snapshots must be at least 1");
    try {
      cfg.family.validate();
    } catch (const GeometryError& e) {
      throw InvalidInput(std::string("invalid family: ") + e.what());
    }
    switch (cfg.command) {
      case Command::Sample: return cmd_sample(cfg, out);
      case Command::Invariants: return cmd_invariants(cfg, out, err);
      case Command::Svg: return cmd_svg(cfg, out);
      case Command::Loci: return cmd_loci(cfg, out, err);
      case Command::Similarity: return cmd_similarity(cfg, out, err);
      case Command::Circles: return cmd_circles(cfg, out, err);
      case Command::Moses: return cmd_moses(cfg, out, err);
      case Command::ClosedForm: return cmd_closed_form(cfg, out);
    }
    return kInternal;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace poncelet::cli
