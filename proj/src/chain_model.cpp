#include "kappachain/chain_model.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "kappachain/errors.hpp"

namespace kappachain {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleEps = 1e-12;

/// Signed counterclockwise angle from `from` to `to` about `normal`, in [0, 2 pi).
double ccw_angle(const Vec3& from, const Vec3& to, const Vec3& normal) {
  double a = std::atan2(dot(normal, cross(from, to)), dot(from, to));
  if (a < 0.0) a += 2.0 * kPi;
  return a;
}

double corner_angle(const SurfacePoint& prev, const SurfacePoint& at, const SurfacePoint& next) {
  const Heading out = heading_towards(at, next);
  const Heading in = heading_towards(at, prev);
  return ccw_angle(out.dir, in.dir, out.normal);
}

}  // namespace

ConvexChain::ConvexChain(std::vector<double> edge_lengths, std::vector<double> interior_angles)
    : lengths_(std::move(edge_lengths)), angles_(std::move(interior_angles)) {
  if (lengths_.empty()) throw DomainError("a chain needs at least one edge");
  if (angles_.size() + 1 != lengths_.size()) {
    throw DomainError("a chain with n edges needs n-1 interior angles (got " +
                      std::to_string(lengths_.size()) + " edges, " +
                      std::to_string(angles_.size()) + " angles)");
  }
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (!std::isfinite(lengths_[i]) || !(lengths_[i] > 0.0)) {
      throw DomainError("edge " + std::to_string(i + 1) + " length must be positive and finite");
    }
  }
  for (std::size_t i = 0; i < angles_.size(); ++i) {
    if (!(angles_[i] > 0.0) || !(angles_[i] < kPi)) {
      throw DomainError("interior angle " + std::to_string(i + 1) + " must lie in (0, pi)");
    }
  }
}

double ConvexChain::total_length() const {
  return std::accumulate(lengths_.begin(), lengths_.end(), 0.0);
}

void ConvexChain::check_budget(const Curvature& curv) const {
  if (curv.is_flat()) return;
  if (!(total_length() <= curv.half_circumference())) {
    throw EmbeddabilityError("chain length " + std::to_string(total_length()) +
                             " exceeds the pi/sqrt(kappa) budget on kappa=" +
                             std::to_string(curv.kappa()));
  }
}

EmbeddedChain embed(const ConvexChain& chain, const Curvature& curv) {
  return embed(chain, curv, canonical_frame(curv));
}

EmbeddedChain embed(const ConvexChain& chain, const Curvature& curv, const Placement& start) {
  chain.check_budget(curv);
  if (!(start.point.curvature == curv)) throw UsageError("start frame lives on another surface");
  EmbeddedChain out{{start.point}, curv, chain};
  out.vertices.reserve(chain.edge_count() + 1);
  Placement cur = start;
  const auto lengths = chain.edge_lengths();
  const auto angles = chain.interior_angles();
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    cur = walk(cur.point, cur.heading, lengths[i], curv);
    out.vertices.push_back(cur.point);
    if (i < angles.size()) cur.heading = turn(cur.heading, angles[i]);
  }
  return out;
}

double endpoint_distance(const ConvexChain& chain, const Curvature& curv) {
  const EmbeddedChain emb = embed(chain, curv);
  return geodesic_distance(emb.vertices.front(), emb.vertices.back(), curv);
}

std::vector<double> closed_polygon_angles(const EmbeddedChain& emb) {
  const auto& v = emb.vertices;
  const std::size_t n = v.size() - 1;
  std::vector<double> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const SurfacePoint& prev = v[k == 0 ? n : k - 1];
    const SurfacePoint& next = v[k == n ? 0 : k + 1];
    out[k] = corner_angle(prev, v[k], next);
  }
  return out;
}

std::vector<double> measured_interior_angles(const EmbeddedChain& emb) {
  const auto& v = emb.vertices;
  std::vector<double> out;
  for (std::size_t k = 1; k + 1 < v.size(); ++k) out.push_back(corner_angle(v[k - 1], v[k], v[k + 1]));
  return out;
}

bool is_convex(const ConvexChain& chain, const Curvature& curv) {
  const EmbeddedChain emb = embed(chain, curv);
  if (chain.edge_count() == 1) return true;
  const double closing = geodesic_distance(emb.vertices.front(), emb.vertices.back(), curv);
  if (!(closing > 1e-12 * chain.total_length())) return false;
  double turning = 0.0;
  for (double a : closed_polygon_angles(emb)) {
    if (!(a > kAngleEps) || !(a < kPi - kAngleEps)) return false;
    turning += kPi - a;
  }
  // A convex polygon turns once; a star polygon turns twice or more.
  return turning <= 2.0 * kPi + 1e-9;
}

ConvexChain open_arm(const ConvexChain& chain, std::span<const double> increments) {
  const auto angles = chain.interior_angles();
  if (increments.size() != angles.size()) {
    throw DomainError("open_arm needs one increment per interior angle");
  }
  bool any = false;
  for (std::size_t i = 0; i < increments.size(); ++i) {
    if (!(increments[i] >= 0.0) || !std::isfinite(increments[i])) {
      throw DomainError("angle increments must be nonnegative");
    }
    if (angles[i] + increments[i] > kPi) {
      throw DomainError("increment " + std::to_string(i + 1) + " pushes the angle past pi");
    }
    any = any || increments[i] > 0.0;
  }
  if (!any) throw DomainError("open_arm needs a nonempty set of positive increments");

  const auto lengths = chain.edge_lengths();
  std::vector<double> new_lengths{lengths[0]};
  std::vector<double> new_angles;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const double a = angles[i] + increments[i];
    if (a >= kPi) {
      new_lengths.back() += lengths[i + 1];
    } else {
      new_angles.push_back(a);
      new_lengths.push_back(lengths[i + 1]);
    }
  }
  return {std::move(new_lengths), std::move(new_angles)};
}

}  // namespace kappachain
