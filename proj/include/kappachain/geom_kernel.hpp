#pragma once

// Constant-curvature trigonometry on the model surfaces M_k, k >= 0: the sphere
// of radius 1/sqrt(k) for k > 0 and the Euclidean plane for k = 0.
//
// Sphere points are stored as unit vectors; arc lengths are scaled by
// 1/sqrt(k) at the API boundary. Plane points live in the z = 0 slice of R^3
// so both cases share one vector type.

#include <array>
#include <limits>

#include "kappachain/vec3.hpp"

namespace kappachain {

/// Gaussian curvature of a model surface.
class Curvature {
 public:
  constexpr Curvature() = default;
  explicit Curvature(double kappa);

  static Curvature plane() { return Curvature(0.0); }
  static Curvature from_radius(double radius);

  double kappa() const { return kappa_; }
  bool is_flat() const { return kappa_ == 0.0; }
  /// Sphere radius, +inf for the plane.
  double radius() const;
  /// pi / sqrt(kappa): length of a half great circle, +inf for the plane.
  double half_circumference() const;

  friend bool operator==(const Curvature&, const Curvature&) = default;

 private:
  double kappa_ = 0.0;
};

struct SurfacePoint {
  Vec3 coords;
  Curvature curvature;

  /// Validates `coords` against the surface: unit norm on spheres, z = 0 on
  /// the plane (both within 1e-12).
  static SurfacePoint on(const Curvature& curv, const Vec3& coords);
};

/// Unit tangent direction together with the normal of the tangent plane it
/// lives in (the base point itself on a sphere, +z on the plane).
struct Heading {
  Vec3 dir;
  Vec3 normal;
};

/// Side lengths (A, B, C) opposite vertices (a, b, c), bound to a surface.
class Triangle {
 public:
  /// Throws DomainError when the strict triangle inequality fails, or, on a
  /// sphere, when a side reaches pi/sqrt(k) or the perimeter reaches
  /// 2 pi/sqrt(k).
  Triangle(double a, double b, double c, Curvature curv);

  const std::array<double, 3>& sides() const { return sides_; }
  double side(int i) const { return sides_[static_cast<std::size_t>(i)]; }
  const Curvature& curvature() const { return curv_; }
  double perimeter() const { return sides_[0] + sides_[1] + sides_[2]; }
  /// Same side lengths on another surface; validates feasibility there.
  Triangle rebound(const Curvature& curv) const { return {sides_[0], sides_[1], sides_[2], curv}; }

 private:
  std::array<double, 3> sides_;
  Curvature curv_;
};

/// Interior angles (alpha, beta, gamma) opposite sides (A, B, C).
using Angles = std::array<double, 3>;

Angles solve_sss(const Triangle& tri);

/// Third side opposite the included angle `alpha` between sides b and c.
double solve_sas(double b, double c, double alpha, const Curvature& curv);

/// alpha + beta + gamma - pi.
double spherical_excess(const Triangle& tri);

/// Excess from L'Huilier's formula; independent of solve_sss.
double lhuilier_excess(const Triangle& tri);

double geodesic_distance(const SurfacePoint& p, const SurfacePoint& q, const Curvature& curv);

struct Placement {
  SurfacePoint point;
  Heading heading;
};

/// Follows the geodesic leaving p along h for `dist`; the heading is parallel
/// transported.
Placement walk(const SurfacePoint& p, const Heading& h, double dist, const Curvature& curv);

/// Rotates the heading counterclockwise (about its normal) by `angle`.
Heading rotate(const Heading& h, double angle);

/// Applies the exterior angle pi - interior_angle as a left turn.
/// Accepts interior_angle in (0, 2 pi); chains restrict themselves to (0, pi).
Heading turn(const Heading& h, double interior_angle);

/// Unit tangent at `from` pointing along the minimal geodesic to `to`.
Heading heading_towards(const SurfacePoint& from, const SurfacePoint& to);

/// Canonical origin: (1,0,0) heading +y on spheres, (0,0) heading +x on the plane.
Placement canonical_frame(const Curvature& curv);

/// Geodesic midpoint: normalized vector sum on spheres, average on the plane.
SurfacePoint midpoint(const SurfacePoint& p, const SurfacePoint& q);

/// Tolerance for "strictly greater" assertions: 1e-9 * max(1, scale).
inline double strict_tolerance(double scale) { return 1e-9 * (scale > 1.0 ? scale : 1.0); }

}  // namespace kappachain
