#pragma once

#include <array>
#include <span>
#include <vector>

#include "kappachain/geom_kernel.hpp"

namespace kappachain {

/// Geodesic distance between the midpoints of the two sides meeting at
/// vertex a (sides C = |ab| and B = |ac|). Equals A/2 on the plane and
/// exceeds it on every sphere.
double midchord_length(const Triangle& tri);

struct MidchordStep {
  int level = 0;              ///< i >= 1
  double chord = 0.0;         ///< s_i
  double scaled_gain = 0.0;   ///< s_i * 2^i - A, evaluated in extended precision
  double angle_estimate = 0.0;
};

struct MidchordSequence {
  std::vector<MidchordStep> steps;
  /// Set when the sequence stopped early because the sides left the range in
  /// which extended precision still resolves the curvature effect.
  bool truncated = false;
};

/// Repeatedly takes the midchord triangle at vertex a. Step i reports s_i and
/// the planar law-of-cosines reading
///   arccos[(B_i/C_i + C_i/B_i - s_i^2 / (B_i C_i)) / 2],  B_i = B/2^i, C_i = C/2^i,
/// which converges to the spherical angle at a.
MidchordSequence iterated_midchord(const Triangle& tri, int iters);

struct LegendreApproximation {
  Angles curved;     ///< angles on the triangle's own surface
  double excess = 0.0;
  Angles approx;     ///< curved - excess / 3
  Angles planar;     ///< exact planar angles for the same sides
  Angles residuals;  ///< planar - approx
};

LegendreApproximation legendre_planar_angles(const Triangle& tri);

struct OrderFit {
  double slope = 0.0;
  std::vector<double> scales;
  std::vector<double> max_residuals;
  /// Residuals at or below 1e-12: the fit carries no information.
  bool inconclusive = false;
};

/// Least-squares slope of log(max |residual|) against log(scale) for the
/// triangle with every side multiplied by each scale (curvature fixed).
/// Scales must be positive and span at least one decade.
OrderFit legendre_order_fit(const Triangle& tri, std::span<const double> scales);

struct AngleComparison {
  Angles source_angles;   ///< on kappa_hi
  Angles target_angles;   ///< on kappa_lo
  Angles deltas;          ///< source - target
  std::array<double, 2> excess_pair{};  ///< (excess on kappa_hi, excess on kappa_lo)
};

/// Requires kappa_hi > kappa_lo >= 0 and the sides feasible on both.
AngleComparison compare_angles_two_spheres(const std::array<double, 3>& sides,
                                           const Curvature& kappa_hi, const Curvature& kappa_lo);

struct ThinTriangleReport {
  bool apex_decreases = false;
  int apex_index = 0;          ///< vertex carrying the smallest angle
  double apex_source = 0.0;    ///< on tri's surface
  double apex_target = 0.0;    ///< on kappa_lo
  double margin = 0.0;         ///< apex_source - apex_target
};

/// Compares the smallest angle of `tri` with its counterpart on the flatter
/// surface kappa_lo. Requires that angle to be below `epsilon` and
/// kappa_lo < tri.curvature().
ThinTriangleReport thin_triangle_check(double epsilon, const Triangle& tri, const Curvature& kappa_lo);

}  // namespace kappachain
