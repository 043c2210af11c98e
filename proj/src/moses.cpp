#include "poncelet/moses.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "poncelet/centers.hpp"

namespace poncelet {

namespace {

using Complex = std::complex<double>;
using Poly = std::vector<Complex>;  // lowest degree first

Poly multiply(const Poly& p, const Poly& q) {
  Poly out(p.size() + q.size() - 1, Complex{});
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  return out;
}

void accumulate(Poly& into, double k, const Poly& p) {
  for (std::size_t i = 0; i < p.size(); ++i) into[i] += k * p[i];
}

Complex horner(const Poly& p, Complex z) {
  Complex v{};
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * z + *it;
  return v;
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(static_cast<double>(i) * p[i]);
  return d;
}

// Divide by (z - 1), dropping the remainder.
Poly deflate_unit_root(const Poly& p) {
  const std::size_t n = p.size() - 1;
  Poly q(n);
  Complex carry{};
  for (std::size_t k = n; k-- > 0;) {
    carry = p[k + 1] + carry;
    q[k] = carry;
  }
  return q;
}

std::vector<Complex> roots(Poly p) {
  while (p.size() > 1 && std::abs(p.back()) <= 1e-14 * std::abs(p.front() + p.back()) + 1e-300) p.pop_back();
  const auto n = static_cast<Eigen::Index>(p.size() - 1);
  if (n < 1) return {};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) companion(i, n - 1) = -p[static_cast<std::size_t>(i)] / p.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

void require_circle(const Ellipse& circle) {
  if (!(circle.a > 0.0) || std::abs(circle.a - circle.b) > 1e-12 * circle.a) {
    throw GeometryError(ErrorCode::InvalidArgument, "expected a circle (a == b > 0)");
  }
}

double brocard_angle_cot(const Triangle& tri) { return 1.0 / std::tan(brocard_angle(tri)); }

}  // namespace

Point circumcenter3(Point p1, Point p2, Point p3) { return circle_through(p1, p2, p3).first; }

std::vector<Point> circle_conic_intersections(const Ellipse& circle, const ConicImplicit& conic, Point known) {
  require_circle(circle);
  const double r = circle.a;
  const Point c = circle.center;
  const Point e1 = unit(known - c);
  const Point e2 = perp(e1);

  auto on_circle = [&](double phi) { return c + r * (std::cos(phi) * e1 + std::sin(phi) * e2); };

  // Curves that coincide make the conic vanish identically along the circle.
  bool coincident = true;
  for (int k = 0; k < 8 && coincident; ++k) {
    const Point p = on_circle(2.0 * kPi * (k + 0.5) / 8.0);
    const double g = norm(conic.gradient(p)) * r;
    coincident = std::abs(conic.evaluate(p)) <= 1e-10 * std::max(g, 1e-300);
  }
  if (coincident) throw GeometryError(ErrorCode::NoSecondRealIntersection, "circle and conic coincide");

  // With z = exp(i phi): z x(z) and z y(z) are quadratics in z, and
  // z² Q(x, y) is a quartic with z = 1 (the known point) among its roots.
  const Complex i{0.0, 1.0};
  auto coordinate = [&](double centre, double u, double v) -> Poly {
    return {r * (0.5 * u + 0.5 * i * v), Complex{centre}, r * (0.5 * u - 0.5 * i * v)};
  };
  const Poly X = coordinate(c.x, e1.x, e2.x);
  const Poly Y = coordinate(c.y, e1.y, e2.y);
  const Poly W{Complex{}, Complex{1.0}, Complex{}};
  Poly quartic(5, Complex{});
  accumulate(quartic, conic.a20, multiply(X, X));
  accumulate(quartic, 2.0 * conic.a11, multiply(X, Y));
  accumulate(quartic, conic.a02, multiply(Y, Y));
  accumulate(quartic, conic.a10, multiply(X, W));
  accumulate(quartic, conic.a01, multiply(Y, W));
  accumulate(quartic, conic.a00, multiply(W, W));
  const Poly dq = derivative(quartic);

  std::vector<Point> found;
  for (Complex z : roots(deflate_unit_root(quartic))) {
    if (std::abs(std::abs(z) - 1.0) > 1e-6) continue;
    z /= std::abs(z);
    for (int it = 0; it < 8; ++it) {
      const Complex d = dq.empty() ? Complex{} : horner(dq, z);
      if (std::abs(d) < 1e-300) break;
      const Complex step = horner(quartic, z) / d;
      z -= step;
      z /= std::abs(z);
      if (std::abs(step) < 1e-16) break;
    }
    const Point p = on_circle(std::arg(z));
    if (distance(p, known) <= 1e-7 * r) continue;
    const bool duplicate =
        std::any_of(found.begin(), found.end(), [&](Point q) { return distance(p, q) <= 1e-7 * r; });
    if (!duplicate) found.push_back(p);
  }
  return found;
}

Point circle_conic_intersect(const Ellipse& circle, const ConicImplicit& conic, Point known) {
  const std::vector<Point> found = circle_conic_intersections(circle, conic, known);
  if (found.empty()) throw GeometryError(ErrorCode::NoSecondRealIntersection, "no second real intersection");
  return *std::max_element(found.begin(), found.end(),
                           [&](Point p, Point q) { return distance(p, known) < distance(q, known); });
}

MosesResult moses_construct(Point omega1, Point omega2, Point A, const MosesOptions& options) {
  const double span = distance(omega1, omega2);
  if (!(span > 0.0)) throw GeometryError(ErrorCode::DegenerateConfiguration, "Brocard points coincide");
  if (std::abs(cross(omega2 - omega1, A - omega1)) <= 1e-12 * span * std::max(span, distance(A, omega1))) {
    throw GeometryError(ErrorCode::DegenerateConfiguration, "A lies on the line through the Brocard points");
  }

  MosesResult out;
  try {
    out.Oa = circumcenter3(A, omega1, omega2);
    out.Aprime = 2.0 * midpoint(omega1, omega2) - A;
    const Line ell = Line::through_direction(out.Aprime, perp(out.Oa - A));
    out.P = intersect(ell, Line::through(A, omega1));
    out.Q = intersect(ell, Line::through(A, omega2));
    const HomogeneousPoint r = meet(ell, Line::through(omega1, omega2));
    out.R_at_infinity = r.at_infinity();
    out.R = out.R_at_infinity ? unit(r.direction()) : r.affine();
    out.Adp = out.Q + omega1 - A;
    out.Atp = out.P + omega2 - A;

    using H = HomogeneousPoint;
    const std::array<H, 5> five1{H::from(A), H::from(omega1), r, H::from(out.Q), H::from(out.Adp)};
    const std::array<H, 5> five2{H::from(A), H::from(omega2), r, H::from(out.P), H::from(out.Atp)};
    out.conic1 = conic_through_five_points(std::span<const H, 5>(five1));
    out.conic2 = conic_through_five_points(std::span<const H, 5>(five2));

    out.c_candidates =
        circle_conic_intersections(Ellipse::circle(out.Q, distance(out.Q, out.Adp)), out.conic1, out.Adp);
    out.b_candidates =
        circle_conic_intersections(Ellipse::circle(out.P, distance(out.P, out.Atp)), out.conic2, out.Atp);
  } catch (const GeometryError& e) {
    if (e.code() == ErrorCode::NoSecondRealIntersection) throw;
    throw GeometryError(ErrorCode::DegenerateConfiguration, std::string("construction degenerates: ") + e.what());
  }
  if (out.b_candidates.empty() || out.c_candidates.empty()) {
    throw GeometryError(ErrorCode::NoSecondRealIntersection, "circle misses its conic away from the seed point");
  }

  for (Point B : out.b_candidates) {
    for (Point C : out.c_candidates) {
      MosesCandidate cand;
      cand.triangle = {A, B, C};
      cand.area = area(cand.triangle);
      if (cand.area <= 1e-12 * span * span) {
        cand.brocard_residual = std::numeric_limits<double>::infinity();
        out.candidates.push_back(cand);
        continue;
      }
      const auto [w1, w2] = brocard_points(cand.triangle);
      const double direct = std::max(distance(w1, omega1), distance(w2, omega2));
      const double swapped = std::max(distance(w1, omega2), distance(w2, omega1));
      cand.omega_swapped = swapped < direct;
      cand.brocard_residual = std::min(direct, swapped);
      cand.cot_omega = brocard_angle_cot(cand.triangle);
      cand.valid = cand.brocard_residual <= options.verify_tol * span;
      out.candidates.push_back(cand);
    }
  }

  auto better = [&](const MosesCandidate& x, const MosesCandidate& y) {
    if (options.target_cot_omega) {
      if (x.valid != y.valid) return x.valid;
      return std::abs(x.cot_omega - *options.target_cot_omega) < std::abs(y.cot_omega - *options.target_cot_omega);
    }
    return x.area > y.area;
  };
  for (std::size_t k = 1; k < out.candidates.size(); ++k) {
    if (better(out.candidates[k], out.candidates[out.selected])) out.selected = k;
  }
  const MosesCandidate& pick = out.candidates[out.selected];
  out.triangle = pick.triangle;
  out.brocard_residual = pick.brocard_residual;
  out.omega_swapped = pick.omega_swapped;
  if (!pick.valid) {
    throw MosesVerificationError(
        "constructed triangle misses the prescribed Brocard points (residual " + std::to_string(pick.brocard_residual) +
            ")",
        out);
  }
  return out;
}

}  // namespace poncelet
