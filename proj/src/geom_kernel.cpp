#include "kappachain/geom_kernel.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "kappachain/detail/ktrig.hpp"
#include "kappachain/errors.hpp"

namespace kappachain {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kUnitTol = 1e-12;

std::string describe(double a, double b, double c) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

void require_same(const Curvature& a, const Curvature& b) {
  if (!(a == b)) throw UsageError("points belong to surfaces of different curvature");
}

}  // namespace

Curvature::Curvature(double kappa) : kappa_(kappa) {
  if (!std::isfinite(kappa) || kappa < 0.0) {
    throw DomainError("curvature must be finite and nonnegative, got " + std::to_string(kappa));
  }
}

Curvature Curvature::from_radius(double radius) {
  if (!(radius > 0.0)) throw DomainError("sphere radius must be positive");
  if (std::isinf(radius)) return plane();
  return Curvature(1.0 / (radius * radius));
}

double Curvature::radius() const {
  return is_flat() ? std::numeric_limits<double>::infinity() : 1.0 / std::sqrt(kappa_);
}

double Curvature::half_circumference() const {
  return is_flat() ? std::numeric_limits<double>::infinity() : kPi / std::sqrt(kappa_);
}

SurfacePoint SurfacePoint::on(const Curvature& curv, const Vec3& coords) {
  if (curv.is_flat()) {
    if (std::abs(coords.z) > kUnitTol) throw DomainError("plane points must have z = 0");
  } else if (std::abs(norm(coords) - 1.0) > kUnitTol) {
    throw DomainError("sphere points must be unit vectors");
  }
  return {coords, curv};
}

Triangle::Triangle(double a, double b, double c, Curvature curv) : sides_{a, b, c}, curv_(curv) {
  for (double s : sides_) {
    if (!std::isfinite(s) || !(s > 0.0)) {
      throw DomainError("triangle sides must be positive and finite: " + describe(a, b, c));
    }
  }
  if (!(a < b + c) || !(b < a + c) || !(c < a + b)) {
    throw DomainError("strict triangle inequality violated: " + describe(a, b, c));
  }
  if (!curv.is_flat()) {
    const double half = curv.half_circumference();
    if (!(a < half) || !(b < half) || !(c < half)) {
      throw DomainError("side reaches pi/sqrt(kappa) on kappa=" + std::to_string(curv.kappa()) +
                        ": " + describe(a, b, c));
    }
    if (!(a + b + c < 2.0 * half)) {
      throw DomainError("perimeter reaches 2 pi/sqrt(kappa) on kappa=" +
                        std::to_string(curv.kappa()) + ": " + describe(a, b, c));
    }
  }
}

Angles solve_sss(const Triangle& tri) {
  const auto& s = tri.sides();
  return detail::sss_angles(s[0], s[1], s[2], tri.curvature().kappa());
}

double solve_sas(double b, double c, double alpha, const Curvature& curv) {
  if (!(b > 0.0) || !(c > 0.0) || !std::isfinite(b) || !std::isfinite(c)) {
    throw DomainError("SAS sides must be positive and finite");
  }
  if (!(alpha > 0.0) || !(alpha < kPi)) throw DomainError("SAS angle must lie in (0, pi)");
  const double half = curv.half_circumference();
  if (!(b < half) || !(c < half)) throw DomainError("SAS side reaches pi/sqrt(kappa)");
  return detail::sas_side(b, c, alpha, curv.kappa());
}

double spherical_excess(const Triangle& tri) {
  const Angles ang = solve_sss(tri);
  if (tri.curvature().is_flat()) return 0.0;
  return ang[0] + ang[1] + ang[2] - kPi;
}

double lhuilier_excess(const Triangle& tri) {
  if (tri.curvature().is_flat()) return 0.0;
  const double root = std::sqrt(tri.curvature().kappa());
  const double a = tri.side(0) * root;
  const double b = tri.side(1) * root;
  const double c = tri.side(2) * root;
  const double s = 0.5 * (a + b + c);
  const double prod = std::tan(0.5 * s) * std::tan(0.5 * (s - a)) * std::tan(0.5 * (s - b)) *
                      std::tan(0.5 * (s - c));
  return 4.0 * std::atan(std::sqrt(prod));
}

double geodesic_distance(const SurfacePoint& p, const SurfacePoint& q, const Curvature& curv) {
  require_same(p.curvature, curv);
  require_same(q.curvature, curv);
  if (curv.is_flat()) return norm(q.coords - p.coords);
  const double arc = std::atan2(norm(cross(p.coords, q.coords)), dot(p.coords, q.coords));
  return arc / std::sqrt(curv.kappa());
}

Placement walk(const SurfacePoint& p, const Heading& h, double dist, const Curvature& curv) {
  require_same(p.curvature, curv);
  if (!(dist >= 0.0) || !std::isfinite(dist)) throw DomainError("walk distance must be >= 0");
  if (curv.is_flat()) {
    return {SurfacePoint{p.coords + dist * h.dir, curv}, h};
  }
  if (!(dist < 2.0 * curv.half_circumference())) {
    throw DomainError("walk distance must be below 2 pi/sqrt(kappa)");
  }
  const double arc = dist * std::sqrt(curv.kappa());
  const double c = std::cos(arc);
  const double s = std::sin(arc);
  const Vec3 pos = normalized(c * p.coords + s * h.dir);
  Vec3 dir = c * h.dir - s * p.coords;
  // Re-project onto the tangent plane to keep the heading invariants tight.
  dir = normalized(dir - dot(dir, pos) * pos);
  return {SurfacePoint{pos, curv}, Heading{dir, pos}};
}

Heading rotate(const Heading& h, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {normalized(c * h.dir + s * cross(h.normal, h.dir)), h.normal};
}

Heading turn(const Heading& h, double interior_angle) {
  if (!(interior_angle > 0.0) || !(interior_angle < 2.0 * kPi)) {
    throw DomainError("turn angle must lie in (0, 2 pi)");
  }
  return rotate(h, kPi - interior_angle);
}

Heading heading_towards(const SurfacePoint& from, const SurfacePoint& to) {
  require_same(from.curvature, to.curvature);
  if (from.curvature.is_flat()) {
    const Vec3 d = to.coords - from.coords;
    if (norm(d) == 0.0) throw DomainError("heading towards a coincident point");
    return {normalized(d), Vec3{0.0, 0.0, 1.0}};
  }
  const Vec3& p = from.coords;
  const Vec3 t = to.coords - dot(to.coords, p) * p;
  if (norm(t) == 0.0) throw DomainError("heading towards a coincident or antipodal point");
  return {normalized(t), p};
}

Placement canonical_frame(const Curvature& curv) {
  if (curv.is_flat()) {
    return {SurfacePoint{Vec3{0.0, 0.0, 0.0}, curv},
            Heading{Vec3{1.0, 0.0, 0.0}, Vec3{0.0, 0.0, 1.0}}};
  }
  return {SurfacePoint{Vec3{1.0, 0.0, 0.0}, curv},
          Heading{Vec3{0.0, 1.0, 0.0}, Vec3{1.0, 0.0, 0.0}}};
}

SurfacePoint midpoint(const SurfacePoint& p, const SurfacePoint& q) {
  require_same(p.curvature, q.curvature);
  if (p.curvature.is_flat()) return {0.5 * (p.coords + q.coords), p.curvature};
  const Vec3 sum = p.coords + q.coords;
  if (norm(sum) == 0.0) throw DomainError("midpoint of antipodal points is undefined");
  return {normalized(sum), p.curvature};
}

}  // namespace kappachain
