#pragma once

#include <optional>
#include <string_view>

#include "poncelet/geometry.hpp"

namespace poncelet {

/// Triangle centers used here, in encyclopedia numbering.
enum class CenterId { X2, X3, X6, X39, X182 };

std::string_view to_string(CenterId id) noexcept;
std::optional<CenterId> parse_center_id(std::string_view name);

struct BrocardData {
  double omega = 0.0;
  Point omega1;  // counterclockwise Brocard point
  Point omega2;
};

/// Brocard angle from cot(omega) = sum(s_i²) / (4 area).
double brocard_angle(const Triangle& tri);

/// Both routes to cot(omega): sidelengths/area and the cotangent sum.
struct BrocardAngleCheck {
  double cot_from_sides = 0.0;
  double cot_from_angles = 0.0;
  double discrepancy = 0.0;  // relative
};
BrocardAngleCheck brocard_angle_check(const Triangle& tri);

/// (Omega1, Omega2) for a counterclockwise triangle: trilinears
/// c/b : a/c : b/a and b/c : c/a : a/b.
std::pair<Point, Point> brocard_points(const Triangle& tri);

BrocardData brocard_data(const Triangle& tri);

/// Rotating side v_i v_{i+1} about v_i by omega toward the interior gives three
/// lines; returns the max distance from `omega1` to them, relative to the
/// triangle's length scale.
double brocard_concurrence_residual(const Triangle& tri, double omega, Point omega1);

Point triangle_center(const Triangle& tri, CenterId id);

/// Unique circumconic centered at the centroid.
ConicImplicit steiner_circumellipse(const Triangle& tri);

/// Inellipse with foci at the Brocard points. Throws InconsistentTangency if
/// the three sidelines disagree on b² beyond the tolerance.
Ellipse brocard_inellipse(const Triangle& tri, Tolerance tol = {});

/// Per-sideline estimates of the inellipse's b² = d(Omega1, l)·d(Omega2, l).
std::array<double, 3> brocard_inellipse_b2(const Triangle& tri);

/// | |Omega1 - Omega2|² - 4R² sin²w (1 - 4 sin²w) | / R².
double shail_check(const Triangle& tri);

/// |4 area / sqrt(Gamma) - 2 sin w| with Gamma = a²b² + a²c² + b²c².
double brocard_sine_diagnostic(const Triangle& tri);

}  // namespace poncelet
