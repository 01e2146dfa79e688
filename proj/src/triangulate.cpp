#include "kappachain/triangulate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <queue>
#include <string>
#include <utility>

#include "kappachain/errors.hpp"

namespace kappachain {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleEps = 1e-12;

using EdgeKey = std::pair<std::size_t, std::size_t>;

EdgeKey key(std::size_t a, std::size_t b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

struct EdgeInfo {
  double length = 0.0;
  std::vector<std::size_t> faces;
};

std::map<EdgeKey, EdgeInfo> edge_table(const Triangulation& t) {
  std::map<EdgeKey, EdgeInfo> edges;
  for (std::size_t f = 0; f < t.faces.size(); ++f) {
    const Face& face = t.faces[f];
    for (int i = 0; i < 3; ++i) {
      const std::size_t a = face.v[static_cast<std::size_t>((i + 1) % 3)];
      const std::size_t b = face.v[static_cast<std::size_t>((i + 2) % 3)];
      EdgeInfo& info = edges[key(a, b)];
      if (info.faces.empty()) {
        info.length = face.tri.side(i);
      } else if (std::abs(info.length - face.tri.side(i)) >
                 1e-12 * std::max(1.0, info.length)) {
        throw DomainError("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                          ") has different lengths in faces " + std::to_string(info.faces[0]) +
                          " and " + std::to_string(f));
      }
      info.faces.push_back(f);
    }
  }
  return edges;
}

/// Local index i such that (v[i], v[i+1]) is the undirected edge {a, b}.
int edge_slot(const Face& face, std::size_t a, std::size_t b) {
  for (int i = 0; i < 3; ++i) {
    const std::size_t u = face.v[static_cast<std::size_t>(i)];
    const std::size_t w = face.v[static_cast<std::size_t>((i + 1) % 3)];
    if ((u == a && w == b) || (u == b && w == a)) return i;
  }
  return -1;
}

std::vector<DualEdge> build_dual_tree(const std::vector<Face>& faces,
                                      const std::map<EdgeKey, EdgeInfo>& edges) {
  std::vector<DualEdge> tree;
  if (faces.empty()) return tree;
  std::vector<std::vector<std::pair<std::size_t, EdgeKey>>> adj(faces.size());
  for (const auto& [k, info] : edges) {
    if (info.faces.size() == 2) {
      adj[info.faces[0]].push_back({info.faces[1], k});
      adj[info.faces[1]].push_back({info.faces[0], k});
    }
  }
  std::vector<bool> seen(faces.size(), false);
  std::queue<std::size_t> queue;
  queue.push(0);
  seen[0] = true;
  while (!queue.empty()) {
    const std::size_t f = queue.front();
    queue.pop();
    for (const auto& [g, k] : adj[f]) {
      if (seen[g]) continue;
      seen[g] = true;
      tree.push_back({f, g, k.first, k.second});
      queue.push(g);
    }
  }
  if (tree.size() + 1 != faces.size()) throw DomainError("face adjacency is disconnected");
  return tree;
}

/// Places face.v[slot + 2] to the left of v[slot] -> v[slot + 1].
SurfacePoint place_third(const Face& face, int slot, const Angles& angles, const SurfacePoint& u,
                         const SurfacePoint& w, const Curvature& curv) {
  const Heading toward = heading_towards(u, w);
  const Heading h = rotate(toward, angles[static_cast<std::size_t>(slot)]);
  const double dist = face.tri.side((slot + 1) % 3);
  return walk(u, h, dist, curv).point;
}

}  // namespace

void validate(const Triangulation& t) {
  const auto edges = edge_table(t);
  for (const auto& [k, info] : edges) {
    if (info.faces.size() > 2) {
      throw DomainError("edge (" + std::to_string(k.first) + ", " + std::to_string(k.second) +
                        ") is shared by more than two faces");
    }
  }
  if (!t.faces.empty() && t.dual_tree.size() + 1 != t.faces.size()) {
    throw DomainError("dual tree must have faces - 1 edges");
  }
  std::vector<bool> reached(t.faces.size(), false);
  if (!t.faces.empty()) reached[0] = true;
  for (const DualEdge& e : t.dual_tree) {
    if (e.parent >= t.faces.size() || e.child >= t.faces.size() || !reached[e.parent] ||
        reached[e.child]) {
      throw DomainError("dual tree is not a BFS spanning tree rooted at face 0");
    }
    if (edge_slot(t.faces[e.parent], e.u, e.w) < 0 || edge_slot(t.faces[e.child], e.u, e.w) < 0) {
      throw DomainError("dual edge does not name a shared edge");
    }
    reached[e.child] = true;
  }

  std::size_t boundary_edges = 0;
  for (const auto& [k, info] : edges) boundary_edges += info.faces.size() == 1 ? 1 : 0;
  if (t.boundary.size() != boundary_edges) throw DomainError("boundary cycle misses boundary edges");
  std::vector<bool> on_cycle(t.vertex_count, false);
  for (std::size_t i = 0; i < t.boundary.size(); ++i) {
    const std::size_t a = t.boundary[i];
    const std::size_t b = t.boundary[(i + 1) % t.boundary.size()];
    if (a >= t.vertex_count || on_cycle[a]) throw DomainError("boundary cycle repeats a vertex");
    on_cycle[a] = true;
    const auto it = edges.find(key(a, b));
    if (it == edges.end() || it->second.faces.size() != 1) {
      throw DomainError("boundary step is not a boundary edge");
    }
    const Face& face = t.faces[it->second.faces[0]];
    const int slot = edge_slot(face, a, b);
    if (face.v[static_cast<std::size_t>(slot)] != a) {
      throw DomainError("boundary cycle is not counterclockwise");
    }
  }
}

Triangulation fan_triangulate(std::span<const SurfacePoint> polygon, const Curvature& curv) {
  if (polygon.size() < 3) throw DomainError("a fan needs at least three vertices");
  const std::size_t m = polygon.size();
  std::vector<double> diag(m);
  for (std::size_t i = 1; i < m; ++i) diag[i] = geodesic_distance(polygon[0], polygon[i], curv);

  Triangulation t;
  t.curvature = curv;
  t.vertex_count = m;
  for (std::size_t i = 1; i + 1 < m; ++i) {
    const double rim = geodesic_distance(polygon[i], polygon[i + 1], curv);
    t.faces.push_back({{0, i, i + 1}, Triangle(rim, diag[i + 1], diag[i], curv)});
  }
  for (std::size_t k = 0; k + 1 < t.faces.size(); ++k) t.dual_tree.push_back({k, k + 1, 0, k + 2});
  for (std::size_t i = 0; i < m; ++i) t.boundary.push_back(i);
  t.chain_start = 0;
  t.chain_end = m - 1;
  return t;
}

Triangulation fan_triangulate(const ConvexChain& chain, const Curvature& curv) {
  if (chain.edge_count() < 2) throw DomainError("fan triangulation needs at least two edges");
  if (!is_convex(chain, curv)) throw DomainError("fan triangulation requires a convex chain");
  const EmbeddedChain emb = embed(chain, curv);
  return fan_triangulate(std::span<const SurfacePoint>(emb.vertices), curv);
}

Triangulation steiner_subdivide(const Triangle& tri, double ell) {
  if (!(ell > 0.0) || !std::isfinite(ell)) throw DomainError("Steiner spacing must be positive");
  const Curvature& curv = tri.curvature();
  const Angles ang = solve_sss(tri);
  const Placement origin = canonical_frame(curv);

  std::vector<SurfacePoint> pos{origin.point,
                                walk(origin.point, origin.heading, tri.side(2), curv).point,
                                walk(origin.point, rotate(origin.heading, ang[0]), tri.side(1),
                                     curv).point};
  std::vector<std::array<std::size_t, 3>> faces{{0, 1, 2}};
  std::map<EdgeKey, double> length{{key(1, 2), tri.side(0)},
                                   {key(0, 2), tri.side(1)},
                                   {key(0, 1), tri.side(2)}};
  std::vector<std::size_t> boundary{0, 1, 2};
  const double cap = 2.0 * ell;

  for (std::size_t iter = 0;; ++iter) {
    if (iter > 1000000) throw DomainError("Steiner subdivision did not converge");
    auto longest = length.begin();
    for (auto it = length.begin(); it != length.end(); ++it) {
      if (it->second > longest->second) longest = it;
    }
    if (longest->second <= cap) break;

    const auto [a, b] = longest->first;
    const double half = 0.5 * longest->second;
    const std::size_t m = pos.size();
    pos.push_back(midpoint(pos[a], pos[b]));
    length.erase(longest);
    length[key(a, m)] = half;
    length[key(m, b)] = half;

    const std::size_t face_count = faces.size();
    for (std::size_t f = 0; f < face_count; ++f) {
      auto& fv = faces[f];
      for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t u = fv[i];
        const std::size_t w = fv[(i + 1) % 3];
        if (key(u, w) != key(a, b)) continue;
        const std::size_t x = fv[(i + 2) % 3];
        length[key(x, m)] = geodesic_distance(pos[x], pos[m], curv);
        fv = {u, m, x};
        faces.push_back({m, w, x});
        break;
      }
    }
    for (std::size_t i = 0; i < boundary.size(); ++i) {
      const std::size_t u = boundary[i];
      const std::size_t w = boundary[(i + 1) % boundary.size()];
      if (key(u, w) == key(a, b)) {
        boundary.insert(boundary.begin() + static_cast<std::ptrdiff_t>(i + 1), m);
        break;
      }
    }
  }

  Triangulation t;
  t.curvature = curv;
  t.vertex_count = pos.size();
  for (const auto& fv : faces) {
    t.faces.push_back({fv, Triangle(length.at(key(fv[1], fv[2])), length.at(key(fv[0], fv[2])),
                                    length.at(key(fv[0], fv[1])), curv)});
  }
  t.dual_tree = build_dual_tree(t.faces, edge_table(t));
  t.boundary = std::move(boundary);
  t.chain_start = 1;
  t.chain_end = 0;
  return t;
}

Triangulation redraw(const Triangulation& t, const Curvature& target) {
  Triangulation out = t;
  out.curvature = target;
  for (std::size_t f = 0; f < t.faces.size(); ++f) {
    try {
      out.faces[f].tri = t.faces[f].tri.rebound(target);
    } catch (const DomainError& e) {
      throw EmbeddabilityError("triangle " + std::to_string(f) + " is infeasible on kappa=" +
                               std::to_string(target.kappa()) + ": " + e.what());
    }
  }
  (void)layout(out);
  return out;
}

Layout layout(const Triangulation& t) {
  Layout out;
  if (t.faces.empty()) return out;
  const Curvature& curv = t.curvature;
  std::vector<std::optional<SurfacePoint>> pos(t.vertex_count);
  auto place = [&](std::size_t v, const SurfacePoint& p) {
    if (pos[v]) {
      out.closure_gap = std::max(out.closure_gap, geodesic_distance(*pos[v], p, curv));
    } else {
      pos[v] = p;
    }
  };

  const Face& root = t.faces[0];
  const Placement origin = canonical_frame(curv);
  place(root.v[0], origin.point);
  place(root.v[1], walk(origin.point, origin.heading, root.tri.side(2), curv).point);
  place(root.v[2], place_third(root, 0, solve_sss(root.tri), *pos[root.v[0]], *pos[root.v[1]], curv));

  for (const DualEdge& e : t.dual_tree) {
    const Face& face = t.faces[e.child];
    const int slot = edge_slot(face, e.u, e.w);
    if (slot < 0) throw DomainError("dual edge does not belong to its child face");
    const std::size_t u = face.v[static_cast<std::size_t>(slot)];
    const std::size_t w = face.v[static_cast<std::size_t>((slot + 1) % 3)];
    const std::size_t x = face.v[static_cast<std::size_t>((slot + 2) % 3)];
    if (!pos[u] || !pos[w]) throw DomainError("dual tree visits a face before its parent");
    place(x, place_third(face, slot, solve_sss(face.tri), *pos[u], *pos[w], curv));
  }
  for (std::size_t v = 0; v < pos.size(); ++v) {
    if (!pos[v]) throw DomainError("vertex " + std::to_string(v) + " belongs to no face");
    out.positions.push_back(*pos[v]);
  }
  return out;
}

std::vector<double> vertex_angle_sums(const Triangulation& t) {
  std::vector<double> sums(t.vertex_count, 0.0);
  for (const Face& face : t.faces) {
    const Angles ang = solve_sss(face.tri);
    for (std::size_t i = 0; i < 3; ++i) sums[face.v[i]] += ang[i];
  }
  return sums;
}

ConvexChain BoundaryChain::to_chain() const {
  if (!convex) throw DomainError("boundary chain is not convex");
  return {edge_lengths, interior_angles};
}

BoundaryChain boundary_chain(const Triangulation& t) {
  return boundary_chain(t, t.chain_start, t.chain_end);
}

BoundaryChain boundary_chain(const Triangulation& t, std::size_t start, std::size_t end) {
  const auto& cyc = t.boundary;
  const auto first = std::find(cyc.begin(), cyc.end(), start);
  if (first == cyc.end() || std::find(cyc.begin(), cyc.end(), end) == cyc.end()) {
    throw DomainError("chain endpoints must lie on the boundary");
  }
  if (start == end) throw DomainError("chain endpoints must differ");
  const auto edges = edge_table(t);
  const auto sums = vertex_angle_sums(t);

  BoundaryChain out;
  std::size_t i = static_cast<std::size_t>(first - cyc.begin());
  out.vertices.push_back(start);
  while (out.vertices.back() != end) {
    const std::size_t a = cyc[i % cyc.size()];
    const std::size_t b = cyc[(i + 1) % cyc.size()];
    out.edge_lengths.push_back(edges.at(key(a, b)).length);
    out.vertices.push_back(b);
    if (b != end) {
      out.interior_angles.push_back(sums[b]);
      out.convex = out.convex && sums[b] > kAngleEps && sums[b] < kPi - kAngleEps;
    }
    ++i;
  }
  return out;
}

}  // namespace kappachain
