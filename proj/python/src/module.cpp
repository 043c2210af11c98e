#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "poncelet/centers.hpp"
#include "poncelet/circles.hpp"
#include "poncelet/families.hpp"
#include "poncelet/invariants.hpp"
#include "poncelet/loci.hpp"
#include "poncelet/moses.hpp"
#include "poncelet/similarity.hpp"

namespace py = pybind11;
using namespace poncelet;

// Points cross the boundary as (x, y) tuples and triangles as 3-tuples of points.
namespace pybind11::detail {

template <>
struct type_caster<Point> {
  PYBIND11_TYPE_CASTER(Point, const_name("tuple[float, float]"));

  bool load(handle src, bool) {
    if (!isinstance<sequence>(src)) return false;
    const auto seq = reinterpret_borrow<sequence>(src);
    if (seq.size() != 2) return false;
    try {
      value = {seq[0].cast<double>(), seq[1].cast<double>()};
    } catch (const cast_error&) {
      return false;
    }
    return true;
  }

  static handle cast(Point p, return_value_policy, handle) { return make_tuple(p.x, p.y).release(); }
};

template <>
struct type_caster<Triangle> {
  PYBIND11_TYPE_CASTER(Triangle, const_name("tuple[tuple[float, float], tuple[float, float], tuple[float, float]]"));

  bool load(handle src, bool convert) {
    if (!isinstance<sequence>(src)) return false;
    const auto seq = reinterpret_borrow<sequence>(src);
    if (seq.size() != 3) return false;
    for (int i = 0; i < 3; ++i) {
      make_caster<Point> vertex;
      if (!vertex.load(seq[static_cast<std::size_t>(i)], convert)) return false;
      value[i] = cast_op<Point>(vertex);
    }
    return true;
  }

  static handle cast(const Triangle& t, return_value_policy policy, handle parent) {
    return make_tuple(reinterpret_steal<object>(make_caster<Point>::cast(t.v1, policy, parent)),
                      reinterpret_steal<object>(make_caster<Point>::cast(t.v2, policy, parent)),
                      reinterpret_steal<object>(make_caster<Point>::cast(t.v3, policy, parent)))
        .release();
  }
};

}  // namespace pybind11::detail

namespace {

FamilySpec make_spec(const std::string& family, double a, double b, double lambda) {
  if (family == "homothetic") return FamilySpec::homothetic(a, b);
  if (family == "brocard") return FamilySpec::brocard(a, b);
  if (family == "confocal") return FamilySpec::confocal(a, b, lambda);
  throw GeometryError(ErrorCode::InvalidArgument, "unknown family '" + family + "'");
}

CenterId center(const std::string& name) {
  const auto id = parse_center_id(name);
  if (!id) throw GeometryError(ErrorCode::InvalidArgument, "unknown center '" + name + "'");
  return *id;
}

py::dict report_dict(const InvariantReport& r, double tol) {
  py::dict d;
  d["name"] = r.name;
  d["closed_form"] = r.closed_form;
  d["mean"] = r.mean;
  d["max_abs_dev"] = r.max_abs_dev;
  d["rel_dev"] = r.rel_dev;
  d["pass"] = r.pass(Tolerance{tol});
  d["note"] = r.note;
  return d;
}

py::dict point_report_dict(const PointInvariantReport& r, double tol) {
  py::dict d;
  d["name"] = r.name;
  d["closed_form"] = r.closed_form;
  d["mean"] = r.mean;
  d["max_abs_dev"] = r.max_drift;
  d["rel_dev"] = r.max_drift / r.scale;
  d["pass"] = r.pass(Tolerance{tol});
  d["note"] = r.note;
  return d;
}

py::dict fitted_dict(const FittedConic& f) {
  static const char* const kinds[] = {"circle", "axis_aligned_ellipse", "general_conic", "point"};
  py::dict d;
  d["kind"] = kinds[static_cast<int>(f.kind)];
  d["center"] = f.center;
  d["semi_axes"] = py::make_tuple(f.semi_x, f.semi_y);
  d["rms_residual"] = f.rms_residual;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Poncelet triangle families, triangle centers and their invariants.";

  static py::exception<GeometryError> geometry_error(m, "GeometryError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const GeometryError& e) {
      // args = (code name, message)
      const py::tuple args = py::make_tuple(std::string(to_string(e.code())), e.what());
      PyErr_SetObject(geometry_error.ptr(), args.ptr());
    }
  });

  py::class_<Ellipse>(m, "Ellipse")
      .def(py::init(&Ellipse::make), py::arg("center"), py::arg("a"), py::arg("b"), py::arg("theta") = 0.0)
      .def_readonly("center", &Ellipse::center)
      .def_readonly("a", &Ellipse::a)
      .def_readonly("b", &Ellipse::b)
      .def_readonly("theta", &Ellipse::theta)
      .def("foci", &Ellipse::foci)
      .def("__repr__", [](const Ellipse& e) {
        return "Ellipse(center=(" + std::to_string(e.center.x) + ", " + std::to_string(e.center.y) +
               "), a=" + std::to_string(e.a) + ", b=" + std::to_string(e.b) + ", theta=" + std::to_string(e.theta) +
               ")";
      });

  py::class_<ConicImplicit>(m, "ConicImplicit")
      .def_property_readonly("coefficients", &ConicImplicit::coefficients)
      .def("evaluate", &ConicImplicit::evaluate)
      .def("to_ellipse", [](const ConicImplicit& c) { return to_ellipse(c); });

  // Families
  m.def("homothetic_triangle", &homothetic_triangle, py::arg("a"), py::arg("b"), py::arg("t"));
  m.def("brocard_triangle", &brocard_triangle, py::arg("a"), py::arg("b"), py::arg("t"));
  m.def("confocal_lambda_triangle", &confocal_lambda_triangle, py::arg("a"), py::arg("b"), py::arg("lam"),
        py::arg("t"));
  m.def(
      "family_triangle",
      [](const std::string& family, double a, double b, double t, double lam) {
        return family_triangle(make_spec(family, a, b, lam), t);
      },
      py::arg("family"), py::arg("a"), py::arg("b"), py::arg("t"), py::arg("lam") = 0.0);
  m.def(
      "brocard_porism_params",
      [](double a, double b) {
        const PorismParams p = brocard_porism_params(a, b);
        py::dict d;
        d["circumcenter"] = p.circumcenter;
        d["R"] = p.R;
        d["cot_omega"] = p.cot_omega;
        d["c"] = p.c;
        return d;
      },
      py::arg("a"), py::arg("b"));

  // Centers
  m.def("brocard_angle", &brocard_angle, py::arg("tri"));
  m.def("brocard_points", &brocard_points, py::arg("tri"));
  m.def(
      "triangle_center", [](const Triangle& tri, const std::string& id) { return triangle_center(tri, center(id)); },
      py::arg("tri"), py::arg("center"));
  m.def("steiner_circumellipse", [](const Triangle& tri) { return to_ellipse(steiner_circumellipse(tri)); },
        py::arg("tri"));
  m.def("brocard_inellipse", [](const Triangle& tri) { return brocard_inellipse(tri); }, py::arg("tri"));

  // Invariants
  m.def(
      "invariant_suite",
      [](const std::string& family, double a, double b, double lam, int n, double tol) {
        const InvariantSuite s = invariant_suite(make_spec(family, a, b, lam), n);
        py::list out;
        for (const auto& r : s.scalars) out.append(report_dict(r, tol));
        for (const auto& r : s.points) out.append(point_report_dict(r, tol));
        return out;
      },
      py::arg("family"), py::arg("a"), py::arg("b"), py::arg("lam") = 0.0, py::arg("n") = 1000,
      py::arg("tol") = 1e-9);
  m.def("beta_closed_form", &beta_closed_form, py::arg("a"), py::arg("b"));
  m.def("sigma_closed_form", &sigma_closed_form, py::arg("a"), py::arg("b"));

  // Loci
  m.def(
      "sample_locus",
      [](const std::string& family, double a, double b, const std::string& id, int n, double lam) {
        return locus_points(sample_locus(make_spec(family, a, b, lam), center(id), n));
      },
      py::arg("family"), py::arg("a"), py::arg("b"), py::arg("center"), py::arg("n"), py::arg("lam") = 0.0);
  m.def("fit_circle", [](const std::vector<Point>& pts) { return fitted_dict(fit_circle(pts)); }, py::arg("points"));
  m.def(
      "fit_axis_aligned_ellipse", [](const std::vector<Point>& pts) { return fitted_dict(fit_axis_aligned_ellipse(pts)); },
      py::arg("points"));
  m.def(
      "x39_locus_semi_axes",
      [](double a, double b) {
        const X39Locus l = x39_locus_closed_form(a, b);
        return py::make_tuple(l.a39, l.b39);
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "x2_locus_brocard",
      [](double a, double b) {
        const X2Locus l = x2_locus_brocard(a, b);
        py::dict d;
        d["center"] = l.center;
        d["radius"] = l.radius;
        d["radius_moses"] = l.radius_moses;
        return d;
      },
      py::arg("a"), py::arg("b"));
  m.def("axis_intersection_residual", [](double a, double b, double t) { return axis_intersection_check(a, b, t).residual; },
        py::arg("a"), py::arg("b"), py::arg("t"));

  // Similarity
  auto frame_dict = [](const SimilarityFrame& f) {
    py::dict d;
    d["t"] = f.t;
    d["scale"] = f.transform.scale;
    d["rotation"] = f.transform.rot;
    d["pre_translate"] = f.transform.pre_translate;
    d["source"] = f.source_tri;
    d["image"] = f.image_tri;
    d["circular_degeneracy"] = f.circular_degeneracy;
    return d;
  };
  m.def(
      "homothetic_to_brocard",
      [frame_dict](double a, double b, double k, double t) { return frame_dict(homothetic_to_brocard(a, b, k, t)); },
      py::arg("a"), py::arg("b"), py::arg("k"), py::arg("t"));
  m.def(
      "brocard_to_homothetic",
      [frame_dict](double a, double b, double k, double t) { return frame_dict(brocard_to_homothetic(a, b, k, t)); },
      py::arg("a"), py::arg("b"), py::arg("k"), py::arg("t"));

  // Circles
  m.def(
      "stationary_circles",
      [](double a, double b) {
        py::list out;
        for (const NamedCircle& c : stationary_circles(a, b)) {
          py::dict d;
          d["name"] = c.name;
          d["center_label"] = c.center_label;
          d["center"] = c.center_verifiable ? py::cast(c.center) : py::none();
          d["radius"] = c.radius;
          d["note"] = c.note;
          out.append(d);
        }
        return out;
      },
      py::arg("a"), py::arg("b"));

  // Moses construction
  m.def(
      "moses_construct",
      [](Point omega1, Point omega2, Point A, std::optional<double> target_cot_omega) {
        MosesOptions options;
        options.target_cot_omega = target_cot_omega;
        const MosesResult r = moses_construct(omega1, omega2, A, options);
        py::dict d;
        d["triangle"] = r.triangle;
        d["brocard_residual"] = r.brocard_residual;
        d["omega_swapped"] = r.omega_swapped;
        d["candidates"] = r.candidates.size();
        d["cot_omega"] = r.candidates[r.selected].cot_omega;
        return d;
      },
      py::arg("omega1"), py::arg("omega2"), py::arg("A"), py::arg("target_cot_omega") = py::none());
}
