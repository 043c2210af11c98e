#pragma once

#include <span>
#include <vector>

#include "poncelet/centers.hpp"
#include "poncelet/families.hpp"

namespace poncelet {

struct LocusSample {
  double t = 0.0;
  Point p;
  CenterId center_id = CenterId::X2;
};

enum class LocusKind { Circle, AxisAlignedEllipse, GeneralConic, PointLocus };

struct FittedConic {
  LocusKind kind = LocusKind::Circle;
  Point center;
  /// (x, y) semi-axes for AxisAlignedEllipse, (r, r) for Circle, (0, 0) for PointLocus.
  double semi_x = 0.0;
  double semi_y = 0.0;
  double rms_residual = 0.0;
};

/// Elliptic locus of X39 over the homothetic family.
struct X39Locus {
  double a = 0.0, b = 0.0;
  double a39 = 0.0, b39 = 0.0;
  /// Closed-form position at family parameter t; note the 3t frequency.
  Point at(double t) const;
};

X39Locus x39_locus_closed_form(double a, double b);

/// Circular locus of X2 over the Brocard porism.
struct X2Locus {
  Point center;
  double radius = 0.0;
  double radius_moses = 0.0;  // R (2 cos 2w - 1) / 3
};

X2Locus x2_locus_brocard(double a, double b);

std::vector<LocusSample> sample_locus(const FamilySpec& spec, CenterId id, int n);
std::vector<Point> locus_points(const std::vector<LocusSample>& samples);

/// Algebraic (Kasa) least-squares circle. Throws CollinearSamples.
FittedConic fit_circle(std::span<const Point> samples);

/// Least-squares A x² + C y² + D x + E y + F = 0. Throws DegenerateSamples.
FittedConic fit_axis_aligned_ellipse(std::span<const Point> samples);

/// Signed number of turns of the closed polyline around `center`.
int winding_number(std::span<const Point> samples, Point center);

struct AxisIntersection {
  double residual = 0.0;  // Hausdorff distance between the two pairs of y-intercepts
  bool point_locus = false;
  double circle_y[2] = {0.0, 0.0};
  double axes_y[2] = {0.0, 0.0};
};

/// Steiner-circumellipse axes and the X2 locus circle meet the y-axis (the
/// caustic's minor axis) at the same two points.
AxisIntersection axis_intersection_check(double a, double b, double t);

}  // namespace poncelet
