#pragma once

#include <optional>
#include <vector>

#include "poncelet/geometry.hpp"

namespace poncelet {

/// One sample of the variable similarity between the two families.
struct SimilarityFrame {
  double t = 0.0;
  Similarity transform;
  Triangle source_tri;
  Triangle image_tri;
  /// The conic being normalized (Brocard inellipse or Steiner circumellipse),
  /// before mapping.
  Ellipse source_conic;
  /// Angle of that conic's minor axis from the horizontal, in (-pi/2, pi/2].
  double minor_axis_angle = 0.0;
  /// Set when the conic is a circle and the rotation was fixed to zero.
  bool circular_degeneracy = false;
};

/// Similarity taking the triangle's Brocard inellipse to the origin, focal
/// axis Omega1 -> Omega2 along +x, minor semi-axis k.
SimilarityFrame normalize_brocard_inellipse(const Triangle& tri, double k);

/// Similarity taking the triangle's Steiner circumellipse to the origin,
/// major axis along x, minor semi-axis k. `previous_angle` picks the
/// major-axis representative closest to it (sweep continuity).
SimilarityFrame normalize_steiner_circumellipse(const Triangle& tri, double k,
                                                std::optional<double> previous_angle = std::nullopt);

/// Homothetic triangle at t mapped into a Brocard porism with caustic (k beta, k).
SimilarityFrame homothetic_to_brocard(double a, double b, double k, double t);

/// Brocard-porism triangle at t mapped into a homothetic pair with outer
/// ellipse (k' sigma, k').
SimilarityFrame brocard_to_homothetic(double a, double b, double k_prime, double t);

/// Frames over the n-point grid, in t order. The reverse direction applies the
/// axis-continuity pass over the major-axis angle.
std::vector<SimilarityFrame> homothetic_to_brocard_sweep(double a, double b, double k, int n);
std::vector<SimilarityFrame> brocard_to_homothetic_sweep(double a, double b, double k_prime, int n);

/// |(v2-v1)/(v3-v1) - (w2-w1)/(w3-w1)| as complex numbers: zero iff the two
/// triangles are directly similar with vertices in correspondence.
double direct_similarity_residual(const Triangle& source, const Triangle& image);

/// Origin-centered, axis-aligned ellipses through the vertices and tangent to
/// the sides, fitted independently.
struct HomotheticFit {
  double outer_a = 0.0, outer_b = 0.0;
  double inner_a = 0.0, inner_b = 0.0;
  double incidence_residual = 0.0;  // max |x²/A² + y²/B² - 1| over vertices
  double tangency_residual = 0.0;   // max relative tangency defect over sides
  /// |a'/a + b'/b - 1|, the 3-periodic existence condition for the pair.
  double pair_condition_residual = 0.0;
};

HomotheticFit fit_homothetic_pair(const Triangle& tri);

}  // namespace poncelet
