#pragma once

// Test-only reference computations. These deliberately avoid the library's
// half-angle formulas and walk/turn machinery: law of cosines through acos,
// bisection, and explicit coordinates.

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace oracle {

constexpr double pi = std::numbers::pi;

struct P3 {
  double x, y, z;
};

inline double dot(P3 a, P3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline P3 unit(P3 a) {
  const double n = std::sqrt(dot(a, a));
  return {a.x / n, a.y / n, a.z / n};
}

/// Third side from the plain law of cosines.
inline double cos_law_side(double b, double c, double alpha, double kappa) {
  if (kappa == 0.0) return std::sqrt(b * b + c * c - 2.0 * b * c * std::cos(alpha));
  const double r = std::sqrt(kappa);
  const double v = std::cos(r * b) * std::cos(r * c) + std::sin(r * b) * std::sin(r * c) * std::cos(alpha);
  return std::acos(std::fmax(-1.0, std::fmin(1.0, v))) / r;
}

/// Angle opposite `a` found by bisection on cos_law_side.
inline double bisect_angle(double a, double b, double c, double kappa) {
  double lo = 0.0;
  double hi = pi;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (cos_law_side(b, c, mid, kappa) < a) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Unit-sphere triangle with vertex a at the north pole, b on meridian 0 at
/// arc C, c on meridian alpha at arc B (radius-1 units).
inline std::array<P3, 3> sphere_triangle(double b_arc, double c_arc, double alpha) {
  const P3 a{0.0, 0.0, 1.0};
  const P3 pb{std::sin(c_arc), 0.0, std::cos(c_arc)};
  const P3 pc{std::sin(b_arc) * std::cos(alpha), std::sin(b_arc) * std::sin(alpha), std::cos(b_arc)};
  return {a, pb, pc};
}

inline double arc(P3 p, P3 q) { return std::acos(std::fmax(-1.0, std::fmin(1.0, dot(p, q)))); }

/// Midchord at vertex a using explicit midpoints (normalized sums).
inline double vector_midchord(double a, double b, double c, double kappa) {
  const double alpha = bisect_angle(a, b, c, kappa);
  if (kappa == 0.0) {
    const double bx = c, by = 0.0;
    const double cx = b * std::cos(alpha), cy = b * std::sin(alpha);
    return std::hypot(0.5 * (bx - cx), 0.5 * (by - cy));
  }
  const double r = std::sqrt(kappa);
  const auto t = sphere_triangle(b * r, c * r, alpha);
  const P3 mb = unit({t[0].x + t[1].x, t[0].y + t[1].y, t[0].z + t[1].z});
  const P3 mc = unit({t[0].x + t[2].x, t[0].y + t[2].y, t[0].z + t[2].z});
  return arc(mb, mc) / r;
}

/// Planar chain vertices by accumulating heading angles (left turns by pi - theta).
inline std::vector<std::array<double, 2>> planar_chain(const std::vector<double>& lengths,
                                                       const std::vector<double>& angles) {
  std::vector<std::array<double, 2>> v{{0.0, 0.0}};
  double heading = 0.0;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    const auto& p = v.back();
    v.push_back({p[0] + lengths[i] * std::cos(heading), p[1] + lengths[i] * std::sin(heading)});
    if (i < angles.size()) heading += pi - angles[i];
  }
  return v;
}

inline double planar_endpoint_distance(const std::vector<double>& lengths, const std::vector<double>& angles) {
  const auto v = planar_chain(lengths, angles);
  return std::hypot(v.back()[0] - v.front()[0], v.back()[1] - v.front()[1]);
}

}  // namespace oracle
