#pragma once

#include <string_view>
#include <vector>

#include "poncelet/geometry.hpp"

namespace poncelet {

enum class FamilyKind { Homothetic, BrocardPorism, ConfocalLambda };

std::string_view to_string(FamilyKind kind) noexcept;

/// Which Poncelet family to generate and its parameters. `lambda` is only read
/// for ConfocalLambda.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Homothetic;
  double a = 1.0;
  double b = 1.0;
  double lambda = 0.0;

  static FamilySpec homothetic(double a, double b) { return {FamilyKind::Homothetic, a, b, 0.0}; }
  static FamilySpec brocard(double a, double b) { return {FamilyKind::BrocardPorism, a, b, 0.0}; }
  static FamilySpec confocal(double a, double b, double lambda) {
    return {FamilyKind::ConfocalLambda, a, b, lambda};
  }

  /// Throws InvalidAxes / InvalidLambda, or DegenerateConfiguration when the
  /// circumradius bound R >= 2c fails.
  void validate() const;
};

/// Circumcircle and Brocard angle of a porism whose caustic is the
/// origin-centered, x-aligned ellipse `caustic`.
struct PorismParams {
  Point circumcenter;
  double R = 0.0;
  double cot_omega = 0.0;
  double c = 0.0;      // focal half-distance of the caustic
  double delta = 0.0;  // sqrt(4a² - b²), or its confocal generalization
  Ellipse caustic;
};

struct HomotheticPair {
  Ellipse outer, inner;
};

HomotheticPair homothetic_pair(double a, double b);

/// Vertices at parameters t, t + 2pi/3, t + 4pi/3 of the (a, b) ellipse.
Triangle homothetic_triangle(double a, double b, double t);

PorismParams brocard_porism_params(double a, double b);

/// R >= 2c, with equality accepted within the relative tolerance.
bool porism_feasible(const PorismParams& p, Tolerance tol = {});

/// Geometric construction: P1 on the circumcircle at angle t, the other two
/// vertices where the tangents from P1 to the caustic meet the circle again.
/// Returned counterclockwise with P1 first.
Triangle brocard_triangle(double a, double b, double t);

/// Polynomial closed form for the same vertices. Used only to cross-check
/// brocard_triangle. Throws SingularDenominator when q(t) vanishes.
Triangle brocard_triangle_closed_form(double a, double b, double t);

/// Denominator q(t) shared by the closed-form vertices.
double brocard_closed_form_denominator(double a, double b, double t);

/// Porism over the confocal caustic with semi-axes sqrt(a² - lambda), sqrt(b² - lambda).
PorismParams confocal_lambda_params(double a, double b, double lambda);
Triangle confocal_lambda_triangle(double a, double b, double lambda, double t);

/// Porism triangle for an arbitrary circle and caustic (shared construction).
Triangle porism_triangle(const PorismParams& params, double t);

Triangle family_triangle(const FamilySpec& spec, double t);
/// Outer conic (ellipse for Homothetic, circumcircle otherwise).
Ellipse family_outer(const FamilySpec& spec);
Ellipse family_caustic(const FamilySpec& spec);
/// Circumcircle parameters for porism families; throws InvalidArgument for Homothetic.
PorismParams family_porism(const FamilySpec& spec);

/// n uniformly spaced parameters in [0, 2pi).
std::vector<double> parameter_grid(int n);

/// Max vertex distance after the best matching of vertices (unordered sets).
double vertex_set_distance(const Triangle& t1, const Triangle& t2);

struct ClosedFormReport {
  int samples = 0;
  int singular = 0;  // samples skipped because q(t) vanished
  double max_discrepancy = 0.0;
  double worst_t = 0.0;
};

/// Sweeps brocard_triangle_closed_form against brocard_triangle.
ClosedFormReport closed_form_discrepancy(double a, double b, int n);

}  // namespace poncelet
