#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "kappachain/chain_model.hpp"
#include "kappachain/geom_kernel.hpp"

namespace kappachain {

/// A face of a triangulation. `v` is counterclockwise; `tri.side(i)` is the
/// length of the edge opposite `v[i]`.
struct Face {
  std::array<std::size_t, 3> v;
  Triangle tri;
};

/// Dual-tree edge: `child` is attached to `parent` across the edge (u, w).
struct DualEdge {
  std::size_t parent;
  std::size_t child;
  std::size_t u;
  std::size_t w;
};

/// Intrinsic triangulation: faces carry side lengths only, so the same object
/// can be re-tagged with any curvature on which every face is feasible.
struct Triangulation {
  std::vector<Face> faces;
  /// Spanning tree of face adjacency rooted at face 0, in BFS order.
  std::vector<DualEdge> dual_tree;
  /// Closed counterclockwise boundary cycle (first vertex not repeated).
  std::vector<std::size_t> boundary;
  /// Designated boundary chain: from chain_start forward along `boundary` to chain_end.
  std::size_t chain_start = 0;
  std::size_t chain_end = 0;
  std::size_t vertex_count = 0;
  Curvature curvature;
};

/// Throws DomainError if faces share edges of unequal length, the dual tree is
/// not a spanning tree of face adjacency, or the boundary is not one closed cycle.
void validate(const Triangulation& t);

/// Fan from the chain's first vertex over its embedding on `curv`.
/// Throws DomainError when the chain is not convex on `curv`.
Triangulation fan_triangulate(const ConvexChain& chain, const Curvature& curv);

/// Fan from polygon[0] over an explicit counterclockwise vertex list. Straight
/// boundary vertices are allowed. The designated chain runs polygon[0] .. back().
Triangulation fan_triangulate(std::span<const SurfacePoint> polygon, const Curvature& curv);

/// Longest-edge midpoint bisection of `tri` (laid out at the canonical frame,
/// corners are vertices 0, 1, 2) until every edge is at most 2 * ell.
/// The designated chain runs 1 -> 2 -> 0, i.e. everything but the side C.
Triangulation steiner_subdivide(const Triangle& tri, double ell);

/// Same side lengths and dual tree on `target`. Lengths are copied, never
/// recomputed. Throws EmbeddabilityError naming the first infeasible face.
Triangulation redraw(const Triangulation& t, const Curvature& target);

struct Layout {
  std::vector<SurfacePoint> positions;
  /// Largest disagreement between two placements of the same vertex reached
  /// along different dual-tree paths (nonzero only around interior vertices
  /// whose angle sum is not 2 pi on this surface).
  double closure_gap = 0.0;
};

/// Places faces edge to edge along the dual tree, root at the canonical frame.
Layout layout(const Triangulation& t);

/// Sum of incident face angles at every vertex.
std::vector<double> vertex_angle_sums(const Triangulation& t);

/// Boundary path between two vertices with the accumulated angles at its
/// interior vertices. `convex` is false when some accumulated angle leaves (0, pi).
struct BoundaryChain {
  std::vector<std::size_t> vertices;
  std::vector<double> edge_lengths;
  std::vector<double> interior_angles;
  bool convex = true;

  /// Throws DomainError for a flagged, non-convex extraction.
  ConvexChain to_chain() const;
};

BoundaryChain boundary_chain(const Triangulation& t);
BoundaryChain boundary_chain(const Triangulation& t, std::size_t start, std::size_t end);

}  // namespace kappachain
