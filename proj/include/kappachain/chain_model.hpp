#pragma once

#include <span>
#include <vector>

#include "kappachain/geom_kernel.hpp"

namespace kappachain {

/// Intrinsic open chain v0..vn: n edge lengths and the n-1 interior angles at
/// v1..v(n-1). The interior lies to the left of the direction of travel.
class ConvexChain {
 public:
  /// Throws DomainError unless n >= 1, every length is positive and finite,
  /// and every angle lies strictly inside (0, pi).
  ConvexChain(std::vector<double> edge_lengths, std::vector<double> interior_angles);

  std::span<const double> edge_lengths() const { return lengths_; }
  std::span<const double> interior_angles() const { return angles_; }
  std::size_t edge_count() const { return lengths_.size(); }
  double total_length() const;

  /// Throws EmbeddabilityError unless total length <= pi/sqrt(kappa).
  void check_budget(const Curvature& curv) const;

  friend bool operator==(const ConvexChain&, const ConvexChain&) = default;

 private:
  std::vector<double> lengths_;
  std::vector<double> angles_;
};

struct EmbeddedChain {
  std::vector<SurfacePoint> vertices;
  Curvature curvature;
  ConvexChain source;
};

/// Lays the chain out by alternating walks and left turns from the canonical
/// frame, or from `start` when given.
EmbeddedChain embed(const ConvexChain& chain, const Curvature& curv);
EmbeddedChain embed(const ConvexChain& chain, const Curvature& curv, const Placement& start);

double endpoint_distance(const ConvexChain& chain, const Curvature& curv);

/// Interior angles of the closed polygon v0..vn measured counterclockwise from
/// the outgoing to the incoming edge, in [0, 2 pi). Index 0 is v0, index n is
/// vn. Requires v0 != vn.
std::vector<double> closed_polygon_angles(const EmbeddedChain& emb);

/// Interior angles measured at the embedded vertices v1..v(n-1).
std::vector<double> measured_interior_angles(const EmbeddedChain& emb);

/// True iff closing the chain with the geodesic v0 vn yields a convex polygon:
/// all n+1 interior angles in (0, pi) and total turning at most one revolution.
bool is_convex(const ConvexChain& chain, const Curvature& curv);

/// Increases the interior angles by `increments` (size n-1, all >= 0, at least
/// one > 0, every result <= pi). Vertices that reach exactly pi are
/// straightened by merging their two incident edges.
ConvexChain open_arm(const ConvexChain& chain, std::span<const double> increments);

}  // namespace kappachain
