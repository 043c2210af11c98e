#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "poncelet/families.hpp"

namespace poncelet {

/// How a report is judged.
enum class Expectation {
  Constant,  // max deviation from the mean within tolerance
  Varies,    // negative control: relative deviation must exceed 1e-6
  Bounded,   // every sample's magnitude within tolerance (residual statistics)
};

struct InvariantReport {
  std::string name;
  std::optional<double> closed_form;
  int samples = 0;
  int degenerate = 0;
  double mean = 0.0;
  double max_abs_dev = 0.0;
  std::optional<double> rel_dev;  // only when |mean| > 1e-300
  /// Absolute floor for relative comparisons of near-zero quantities.
  double scale = 1.0;
  Expectation expectation = Expectation::Constant;
  std::string note;

  bool pass(Tolerance tol) const;
};

/// Stationarity of a point-valued statistic.
struct PointInvariantReport {
  std::string name;
  std::optional<Point> closed_form;
  int samples = 0;
  Point mean;
  double max_drift = 0.0;  // max distance of a sample from the mean
  double scale = 1.0;
  std::string note;

  double closed_form_error() const { return closed_form ? distance(mean, *closed_form) : 0.0; }
  bool pass(Tolerance tol) const;
};

struct Statistic {
  std::string name;
  std::function<double(const Triangle&)> measure;
};

/// area, sum_sq, perimeter, omega, cot_omega, circumradius, shail.
Statistic statistic_by_name(const std::string& name);

struct SweepOptions {
  /// Samples with area below this times a·b are excluded.
  double degenerate_area = 1e-10;
  /// Allowed fraction of excluded samples.
  double max_degenerate_fraction = 0.1;
};

/// Evaluates `statistic` at n uniformly spaced parameters. Throws
/// TooFewValidSamples when too many samples are degenerate.
InvariantReport sweep(const FamilySpec& spec, const Statistic& statistic, int n, SweepOptions opts = {});

PointInvariantReport sweep_point(const FamilySpec& spec, const std::string& name,
                                 const std::function<Point(const Triangle&)>& measure, int n,
                                 SweepOptions opts = {});

struct HomotheticInvariants {
  double area = 0.0;          // 3√3ab/4
  double area_printed = 0.0;  // 3√3ab/2, kept for the erratum annotation
  double sum_sq = 0.0;        // 9(a² + b²)/2
  double cot_omega = 0.0;     // √3(a² + b²)/(2ab)
};

HomotheticInvariants homothetic_invariants(double a, double b);

/// cot(omega) of a tilted equilateral projected onto the horizontal plane.
double johnson_cot_omega(double phi);

/// Aspect ratio of the Brocard inellipse over the homothetic family.
double beta_closed_form(double a, double b);
/// Aspect ratio of the Steiner circumellipse over the Brocard porism.
double sigma_closed_form(double a, double b);

enum class AspectConic { BrocardInellipse, SteinerCircumellipse };

InvariantReport aspect_ratio_sweep(const FamilySpec& spec, AspectConic which, int n, SweepOptions opts = {});

/// The standard battery of reports for a family (used by the CLI).
struct InvariantSuite {
  std::vector<InvariantReport> scalars;
  std::vector<PointInvariantReport> points;

  bool all_pass(Tolerance tol) const;
};

InvariantSuite invariant_suite(const FamilySpec& spec, int n);

}  // namespace poncelet
