#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poncelet/geometry.hpp"

namespace poncelet {

/// Circumcenter of three points; throws CollinearPoints.
Point circumcenter3(Point p1, Point p2, Point p3);

/// Real intersections of a circle (an Ellipse with a == b) and a conic,
/// other than `known`, which must lie on both. Coincident intersections are
/// merged. Throws NoSecondRealIntersection when the curves coincide.
std::vector<Point> circle_conic_intersections(const Ellipse& circle, const ConicImplicit& conic, Point known);

/// The candidate farthest from `known`. Throws NoSecondRealIntersection.
Point circle_conic_intersect(const Ellipse& circle, const ConicImplicit& conic, Point known);

struct MosesOptions {
  /// When set, choose the valid (B, C) pair whose cot of the Brocard angle is
  /// closest to this value instead of the largest-area pair.
  std::optional<double> target_cot_omega;
  /// Brocard-point check, relative to |Omega1 Omega2|.
  double verify_tol = 1e-7;
};

struct MosesCandidate {
  Triangle triangle;
  double area = 0.0;
  double cot_omega = 0.0;
  double brocard_residual = 0.0;  // best of the two orderings
  bool omega_swapped = false;
  bool valid = false;
};

struct MosesResult {
  Triangle triangle;  // (A, B, C)
  Point Oa, Aprime, P, Q, R, Adp, Atp;
  /// l is parallel to Omega1 Omega2 (e.g. A on the perpendicular bisector);
  /// R then holds the unit direction of the point at infinity.
  bool R_at_infinity = false;
  ConicImplicit conic1;  // through A, Omega1, R, Q, A''
  ConicImplicit conic2;  // through A, Omega2, R, P, A'''
  std::vector<Point> b_candidates;
  std::vector<Point> c_candidates;
  /// Every (B, C) combination; `selected` indexes this list.
  std::vector<MosesCandidate> candidates;
  std::size_t selected = 0;
  double brocard_residual = 0.0;
  /// The constructed triangle has the Brocard points in the opposite roles.
  bool omega_swapped = false;
};

/// Thrown by moses_construct when the selected triangle fails the Brocard
/// point check; carries every intermediate for diagnosis.
class MosesVerificationError : public GeometryError {
 public:
  MosesVerificationError(const std::string& what, MosesResult result)
      : GeometryError(ErrorCode::VerificationFailed, what), result_(std::move(result)) {}
  const MosesResult& result() const { return result_; }

 private:
  MosesResult result_;
};

/// Builds a triangle with vertex A and Brocard points Omega1, Omega2.
/// Throws DegenerateConfiguration or VerificationFailed.
MosesResult moses_construct(Point omega1, Point omega2, Point A, const MosesOptions& options = {});

}  // namespace poncelet
