#include "poncelet/similarity.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>

#include "poncelet/centers.hpp"
#include "poncelet/families.hpp"

namespace poncelet {

namespace {

void require_scale(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw GeometryError(ErrorCode::InvalidArgument, "similarity scale must be positive");
  }
}

Similarity normalizing(Point center, double rotation, double minor, double k) {
  return {k / minor, -rotation, -center};
}

}  // namespace

SimilarityFrame normalize_brocard_inellipse(const Triangle& tri, double k) {
  require_scale(k);
  SimilarityFrame f;
  f.source_tri = tri;
  f.source_conic = brocard_inellipse(tri);
  const auto [o1, o2] = brocard_points(tri);
  double focal = 0.0;
  if (f.source_conic.focal_half_distance() > 1e-12 * f.source_conic.a) {
    const Point axis = o2 - o1;
    focal = std::atan2(axis.y, axis.x);
  } else {
    f.circular_degeneracy = true;
  }
  f.minor_axis_angle = wrap_half_turn(focal + 0.5 * kPi);
  f.transform = normalizing(f.source_conic.center, focal, f.source_conic.b, k);
  f.image_tri = apply_similarity(f.transform, tri);
  return f;
}

SimilarityFrame normalize_steiner_circumellipse(const Triangle& tri, double k, std::optional<double> previous_angle) {
  require_scale(k);
  SimilarityFrame f;
  f.source_tri = tri;
  f.source_conic = to_ellipse(steiner_circumellipse(tri));
  double major = wrap_half_turn(f.source_conic.theta);
  if (f.source_conic.a - f.source_conic.b <= 1e-12 * f.source_conic.a) {
    f.circular_degeneracy = true;
    major = 0.0;
  } else if (previous_angle) {
    major += kPi * std::round((*previous_angle - major) / kPi);
  }
  f.minor_axis_angle = wrap_half_turn(major + 0.5 * kPi);
  f.transform = normalizing(f.source_conic.center, major, f.source_conic.b, k);
  f.image_tri = apply_similarity(f.transform, tri);
  return f;
}

SimilarityFrame homothetic_to_brocard(double a, double b, double k, double t) {
  SimilarityFrame f = normalize_brocard_inellipse(homothetic_triangle(a, b, t), k);
  f.t = t;
  return f;
}

SimilarityFrame brocard_to_homothetic(double a, double b, double k_prime, double t) {
  SimilarityFrame f = normalize_steiner_circumellipse(brocard_triangle(a, b, t), k_prime);
  f.t = t;
  return f;
}

std::vector<SimilarityFrame> homothetic_to_brocard_sweep(double a, double b, double k, int n) {
  std::vector<SimilarityFrame> frames;
  for (double t : parameter_grid(n)) frames.push_back(homothetic_to_brocard(a, b, k, t));
  return frames;
}

std::vector<SimilarityFrame> brocard_to_homothetic_sweep(double a, double b, double k_prime, int n) {
  std::vector<SimilarityFrame> frames;
  std::optional<double> previous;
  for (double t : parameter_grid(n)) {
    SimilarityFrame f = normalize_steiner_circumellipse(brocard_triangle(a, b, t), k_prime, previous);
    f.t = t;
    previous = -f.transform.rot;
    frames.push_back(f);
  }
  return frames;
}

double direct_similarity_residual(const Triangle& source, const Triangle& image) {
  using C = std::complex<double>;
  auto z = [](Point p) { return C{p.x, p.y}; };
  const C r1 = (z(source.v2) - z(source.v1)) / (z(source.v3) - z(source.v1));
  const C r2 = (z(image.v2) - z(image.v1)) / (z(image.v3) - z(image.v1));
  return std::abs(r1 - r2);
}

HomotheticFit fit_homothetic_pair(const Triangle& tri) {
  require_nondegenerate(tri);
  HomotheticFit fit;

  // Outer: u x² + v y² = 1 through the three vertices.
  Eigen::Matrix<double, 3, 2> m;
  Eigen::Vector3d rhs = Eigen::Vector3d::Ones();
  for (int i = 0; i < 3; ++i) m.row(i) << tri[i].x * tri[i].x, tri[i].y * tri[i].y;
  const Eigen::Vector2d uv = m.colPivHouseholderQr().solve(rhs);
  if (!(uv(0) > 0.0) || !(uv(1) > 0.0)) {
    throw GeometryError(ErrorCode::NotAnEllipse, "vertices are not on an origin-centered ellipse");
  }
  fit.outer_a = 1.0 / std::sqrt(uv(0));
  fit.outer_b = 1.0 / std::sqrt(uv(1));
  fit.incidence_residual = (m * uv - rhs).cwiseAbs().maxCoeff();

  // Inner: line n·x = d is tangent to x²/p² + y²/q² = 1 iff p² nx² + q² ny² = d².
  Eigen::Matrix<double, 3, 2> t;
  Eigen::Vector3d d2;
  for (int i = 0; i < 3; ++i) {
    const Line side = Line::through(tri[i], tri[(i + 1) % 3]);
    t.row(i) << side.n.x * side.n.x, side.n.y * side.n.y;
    d2(i) = side.d * side.d;
  }
  const Eigen::Vector2d pq = t.colPivHouseholderQr().solve(d2);
  if (!(pq(0) > 0.0) || !(pq(1) > 0.0)) {
    throw GeometryError(ErrorCode::NotAnEllipse, "sides have no common origin-centered inellipse");
  }
  fit.inner_a = std::sqrt(pq(0));
  fit.inner_b = std::sqrt(pq(1));
  fit.tangency_residual = ((t * pq - d2).array() / d2.array()).abs().maxCoeff();
  fit.pair_condition_residual = std::abs(fit.inner_a / fit.outer_a + fit.inner_b / fit.outer_b - 1.0);
  return fit;
}

}  // namespace poncelet
