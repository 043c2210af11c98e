#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "poncelet/centers.hpp"
#include "poncelet/families.hpp"

namespace poncelet::cli {

enum ExitCode : int { kPass = 0, kInvariantFailure = 1, kInvalidInput = 2, kInternal = 3 };

enum class Command { Sample, Invariants, Svg, Loci, Similarity, Circles, Moses, ClosedForm };

struct RunConfig {
  Command command = Command::Sample;
  FamilySpec family;
  int n = 1000;
  double tol = 1e-9;
  double k = 1.0;
  int snapshots = 9;
  std::vector<CenterId> centers;
  std::uint64_t seed = 1;
  std::string format;  // empty: the command's default
  std::string model = "auto";  // loci: circle | ellipse | auto
  std::optional<Point> seed_point;          // moses: explicit vertex A
  std::optional<double> target_cot_omega;   // moses: pick a specific family member
};

/// Runs one command, writing the artifact to `out` and diagnostics to `err`.
/// Returns an ExitCode.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// "%.17g".
std::string format_real(double v);

/// CSV rows for `sample`: header t,x1,y1,x2,y2,x3,y3 then <center>_x,<center>_y.
void write_sample_csv(const FamilySpec& spec, int n, const std::vector<CenterId>& centers, std::ostream& out);

struct SampleRow {
  double t = 0.0;
  Triangle tri;
  std::vector<Point> centers;
};

/// Parses what write_sample_csv emits. Throws std::runtime_error on malformed input.
std::vector<SampleRow> read_sample_csv(std::istream& in);

}  // namespace poncelet::cli
