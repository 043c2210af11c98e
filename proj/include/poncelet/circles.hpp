#pragma once

#include <optional>
#include <string>
#include <vector>

#include "poncelet/centers.hpp"
#include "poncelet/families.hpp"

namespace poncelet {

/// A circle whose center and radius stay fixed over the Brocard porism with
/// caustic semi-axes (a, b).
struct NamedCircle {
  std::string name;
  std::string center_label;  // "X3", "X6", "X39", "X182" or "X6407"
  Point center;
  double radius = 0.0;
  bool center_verifiable = true;
  std::string note;
};

/// sqrt(1 - 4 sin²w) for the porism with caustic (a, b).
double brocard_eccentricity(double a, double b);

/// (0, -c (2a² - b²) / (b sqrt(4a² - b²))), the midpoint of X3 and X6.
Point x182_closed_form(double a, double b);
/// The variant with sqrt(2a² - b²) in the numerator. It is not at distance
/// R182 from the Brocard points, so it is kept only for the erratum report.
Point x182_printed(double a, double b);
std::string x182_erratum(double a, double b);
/// 2a²c / (b sqrt(4a² - b²)), equal to (R/2) e / cos w.
double r182_closed_form(double a, double b);
/// e (R/2) cos w: the tabulated variant, which disagrees with the geometry.
double r182_tabulated(double a, double b);
std::string brocard_circle_erratum(double a, double b);

std::vector<NamedCircle> stationary_circles(double a, double b);

struct CircleStationarity {
  std::string name;
  int samples = 0;
  Point mean_center;
  double mean_radius = 0.0;
  double max_center_drift = 0.0;
  double max_radius_dev = 0.0;
  NamedCircle expected;
  /// Brocard circle only: max distance of X6 from the circle through X3, Omega1, Omega2.
  std::optional<double> concyclic_residual;

  bool pass(Tolerance tol) const;
};

/// Recomputes every registry circle from each sampled triangle.
std::vector<CircleStationarity> verify_stationarity(double a, double b, int n);

/// The Brocard-circle radius by three independent routes at one triangle.
struct BrocardCircleRoutes {
  double closed_form = 0.0;
  double midpoint_route = 0.0;   // |X3 X6| / 2 around X182
  double concyclic_route = 0.0;  // circle through X3, Omega1, Omega2
  double x6_residual = 0.0;      // | |X6 - center| - radius | of the concyclic circle
  Point concyclic_center;
};

BrocardCircleRoutes brocard_circle_routes(double a, double b, double t);

}  // namespace poncelet
