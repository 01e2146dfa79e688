#include "kappachain/verify_harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <thread>

#include "kappachain/errors.hpp"
#include "kappachain/lemma_lab.hpp"

namespace kappachain {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxAttempts = 10000;
constexpr double kAngleTol = 1e-9;

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double log_uniform(std::mt19937_64& rng, Range r) {
  return std::exp(uniform(rng, std::log(r.lo), std::log(r.hi)));
}

/// Shared body of the sphere-to-plane and growing-sphere replays.
TheoremReport redraw_pipeline(TheoremId id, const ConvexChain& chain, const Curvature& from,
                              const Curvature& to, std::uint64_t seed) {
  if (chain.edge_count() < 2) throw DomainError("the redraw pipeline needs at least two edges");
  TheoremReport r{id, seed, {}, false, 0.0};
  const double tol = strict_tolerance(chain.total_length());
  const auto angles = chain.interior_angles();

  const double d_source = endpoint_distance(chain, from);
  const Triangulation fan = fan_triangulate(chain, from);
  const Triangulation redrawn = redraw(fan, to);
  const BoundaryChain boundary = boundary_chain(redrawn);

  double min_drop = std::numeric_limits<double>::infinity();
  std::vector<double> increments(angles.size());
  for (std::size_t i = 0; i < angles.size(); ++i) {
    increments[i] = angles[i] - boundary.interior_angles[i];
    min_drop = std::min(min_drop, increments[i]);
  }
  const bool angles_drop = min_drop > kAngleTol;

  const Layout lay = layout(redrawn);
  const double d_boundary =
      geodesic_distance(lay.positions[fan.chain_start], lay.positions[fan.chain_end], to);
  double d_reembedded = std::nan("");
  bool boundary_convex = false;
  if (boundary.convex && angles_drop) {
    const ConvexChain flattened = boundary.to_chain();
    d_reembedded = endpoint_distance(flattened, to);
    boundary_convex = is_convex(flattened, to);
  }
  const double d_target = endpoint_distance(chain, to);

  const bool same_closure = std::abs(d_boundary - d_source) <= tol;
  const bool stage_consistent = std::abs(d_boundary - d_reembedded) <= tol;
  const double cauchy_gain = d_target - d_reembedded;

  r.add("d_source", d_source);
  r.add("d_boundary", d_boundary);
  r.add("d_boundary_reembedded", d_reembedded);
  r.add("d_target", d_target);
  r.add("min_angle_drop", min_drop);
  r.add("boundary_convex", boundary_convex ? 1.0 : 0.0);
  r.add("cauchy_gain", cauchy_gain);
  r.margin = d_target - d_source;
  r.pass = angles_drop && boundary_convex && same_closure && stage_consistent &&
           cauchy_gain > tol && r.margin > tol;
  return r;
}

}  // namespace

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::cauchy_arm: return "cauchy_arm";
    case TheoremId::sphere_to_plane: return "sphere_to_plane";
    case TheoremId::growing_sphere: return "growing_sphere";
    case TheoremId::thin_triangle: return "thin_triangle";
    case TheoremId::all_angles: return "all_angles";
    case TheoremId::midchord: return "midchord";
    case TheoremId::legendre_order: return "legendre_order";
  }
  return "unknown";
}

double TheoremReport::quantity(std::string_view name) const {
  for (const Quantity& q : quantities) {
    if (q.name == name) return q.value;
  }
  throw UsageError("report has no quantity named " + std::string(name));
}

std::string report_line(const TheoremReport& r) {
  char margin[64];
  std::snprintf(margin, sizeof margin, "%.12e", r.margin);
  return std::string(to_string(r.theorem)) + "," + std::to_string(r.instance_seed) + "," + margin +
         "," + (r.pass ? "pass" : "fail");
}

void GeneratorConfig::validate() const {
  if (n_edges.first < 1 || n_edges.second < n_edges.first) throw DomainError("bad edge-count range");
  if (!(length_scale.lo > 0.0) || !(length_scale.hi >= length_scale.lo)) {
    throw DomainError("bad length range");
  }
  if (!(kappa.kappa() > kappa_prime.kappa())) throw DomainError("generator needs kappa > kappa'");
}

std::uint64_t instance_seed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 finalizer
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

ConvexChain random_convex_chain(const GeneratorConfig& cfg) {
  cfg.validate();
  std::mt19937_64 rng(cfg.seed);
  const double budget = 0.98 * cfg.kappa.half_circumference();
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const int n = std::uniform_int_distribution<int>(cfg.n_edges.first, cfg.n_edges.second)(rng);
    std::vector<double> lengths(static_cast<std::size_t>(n));
    for (double& l : lengths) l = log_uniform(rng, cfg.length_scale);
    std::vector<double> angles(static_cast<std::size_t>(n - 1));
    const double max_turn = std::min(2.0 * kPi / (n + 1), kPi - 0.05);
    for (double& a : angles) a = kPi - uniform(rng, 0.05, max_turn);
    double total = 0.0;
    for (double l : lengths) total += l;
    if (!(total < budget)) continue;
    ConvexChain chain(std::move(lengths), std::move(angles));
    if (is_convex(chain, cfg.kappa)) return chain;
  }
  throw GeneratorError("no convex chain after " + std::to_string(kMaxAttempts) +
                       " attempts (seed " + std::to_string(cfg.seed) + ", edges " +
                       std::to_string(cfg.n_edges.first) + ".." + std::to_string(cfg.n_edges.second) +
                       ", kappa " + std::to_string(cfg.kappa.kappa()) + ")");
}

std::vector<double> random_increments(const ConvexChain& chain, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto angles = chain.interior_angles();
  std::vector<double> inc(angles.size(), 0.0);
  if (angles.empty()) return inc;
  std::vector<bool> chosen(angles.size());
  bool any = false;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    chosen[i] = std::bernoulli_distribution(0.5)(rng);
    any = any || chosen[i];
  }
  if (!any) chosen[std::uniform_int_distribution<std::size_t>(0, angles.size() - 1)(rng)] = true;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    if (chosen[i]) inc[i] = uniform(rng, 0.1, 1.0) * (kPi - angles[i]);
  }
  return inc;
}

std::array<double, 3> random_side_triple(std::uint64_t seed, Range sides, double min_angle,
                                         std::span<const Curvature> feasible_on) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const std::array<double, 3> s{uniform(rng, sides.lo, sides.hi), uniform(rng, sides.lo, sides.hi),
                                  uniform(rng, sides.lo, sides.hi)};
    bool ok = true;
    for (const Curvature& k : feasible_on) {
      try {
        const Angles ang = solve_sss(Triangle(s[0], s[1], s[2], k));
        ok = ok && *std::min_element(ang.begin(), ang.end()) > min_angle;
      } catch (const DomainError&) {
        ok = false;
      }
      if (!ok) break;
    }
    if (ok) return s;
  }
  throw GeneratorError("no feasible side triple after " + std::to_string(kMaxAttempts) +
                       " attempts (seed " + std::to_string(seed) + ")");
}

Triangle random_thin_triangle(std::uint64_t seed, const Curvature& curv, Range long_sides, Range apex) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const double b = uniform(rng, long_sides.lo, long_sides.hi);
    const double c = std::clamp(b * uniform(rng, 0.85, 1.15), long_sides.lo, long_sides.hi);
    const double angle = uniform(rng, apex.lo, apex.hi);
    try {
      return Triangle(solve_sas(b, c, angle, curv), b, c, curv);
    } catch (const DomainError&) {
    }
  }
  throw GeneratorError("no thin triangle after " + std::to_string(kMaxAttempts) + " attempts");
}

TheoremReport check_cauchy_arm(const ConvexChain& chain, const Curvature& curv,
                               std::span<const double> increments, std::uint64_t seed) {
  TheoremReport r{TheoremId::cauchy_arm, seed, {}, false, 0.0};
  const double tol = strict_tolerance(chain.total_length());
  const double before = endpoint_distance(chain, curv);
  const double after = endpoint_distance(open_arm(chain, increments), curv);

  // Straight-line homotopy of the increments, sampled at ten steps.
  double prev = before;
  double min_step = std::numeric_limits<double>::infinity();
  std::vector<double> partial(increments.size());
  for (int step = 1; step <= 10; ++step) {
    for (std::size_t i = 0; i < increments.size(); ++i) partial[i] = increments[i] * step / 10.0;
    const double d = step == 10 ? after : endpoint_distance(open_arm(chain, partial), curv);
    min_step = std::min(min_step, d - prev);
    prev = d;
  }
  r.add("d_before", before);
  r.add("d_after", after);
  r.add("min_homotopy_step", min_step);
  r.margin = after - before;
  r.pass = r.margin > tol && min_step > 0.0;
  return r;
}

TheoremReport check_sphere_to_plane(const ConvexChain& chain, const Curvature& kappa,
                                    std::uint64_t seed) {
  if (kappa.is_flat()) throw DomainError("sphere-to-plane needs a sphere as source");
  return redraw_pipeline(TheoremId::sphere_to_plane, chain, kappa, Curvature::plane(), seed);
}

std::vector<double> geometric_grid(double hi, double lo, int count) {
  if (!(hi > 0.0) || !(lo > 0.0) || count < 2) throw DomainError("bad geometric grid");
  std::vector<double> grid(static_cast<std::size_t>(count));
  const double ratio = std::log(lo / hi) / (count - 1);
  for (int i = 0; i < count; ++i) grid[static_cast<std::size_t>(i)] = hi * std::exp(ratio * i);
  grid.front() = hi;
  grid.back() = lo;
  return grid;
}

TheoremReport check_growing_sphere(const ConvexChain& chain, const Curvature& kappa,
                                   const Curvature& kappa_prime, std::uint64_t seed) {
  if (!(kappa.kappa() > kappa_prime.kappa())) {
    throw DomainError("growing sphere needs kappa > kappa'");
  }
  TheoremReport r = redraw_pipeline(TheoremId::growing_sphere, chain, kappa, kappa_prime, seed);

  const double low = kappa_prime.is_flat() ? kappa.kappa() * 1e-4 : kappa_prime.kappa();
  std::vector<double> grid = geometric_grid(kappa.kappa(), low, 16);
  if (kappa_prime.is_flat()) grid.push_back(0.0);
  double min_gain = std::numeric_limits<double>::infinity();
  const auto series = sweep_radius(chain, grid);
  for (std::size_t i = 1; i < series.size(); ++i) {
    if (!series[i].distance || !series[i - 1].distance) {
      min_gain = -std::numeric_limits<double>::infinity();
      break;
    }
    min_gain = std::min(min_gain, *series[i].distance - *series[i - 1].distance);
  }
  r.add("min_sweep_gain", min_gain);
  r.pass = r.pass && min_gain > 0.0;
  return r;
}

TheoremReport replay_thin_triangle_pipeline(const Triangle& tri, double epsilon,
                                            const Curvature& kappa_prime, double ell, std::uint64_t seed) {
  const Curvature& kappa = tri.curvature();
  if (kappa_prime.kappa() > kappa.kappa()) throw DomainError("thin-triangle replay needs kappa' <= kappa");
  const Angles src = solve_sss(tri);
  const auto apex = static_cast<std::size_t>(std::min_element(src.begin(), src.end()) - src.begin());
  if (!(src[apex] < epsilon)) throw DomainError("apex angle is not below epsilon");

  // Rotate labels so the apex is corner 2 and the short side is C = |p0 p1|.
  const Triangle oriented(tri.side(static_cast<int>((apex + 1) % 3)),
                          tri.side(static_cast<int>((apex + 2) % 3)),
                          tri.side(static_cast<int>(apex)), kappa);
  const double long_a = oriented.side(0);
  const double long_b = oriented.side(1);
  const double short_c = oriented.side(2);

  TheoremReport r{TheoremId::thin_triangle, seed, {}, false, 0.0};
  const Triangulation mesh = steiner_subdivide(oriented, ell);
  const Triangulation moved = redraw(mesh, kappa_prime);

  double min_drop = std::numeric_limits<double>::infinity();
  double max_change = 0.0;
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    const Angles a = solve_sss(mesh.faces[f].tri);
    const Angles b = solve_sss(moved.faces[f].tri);
    for (std::size_t i = 0; i < 3; ++i) {
      min_drop = std::min(min_drop, a[i] - b[i]);
      max_change = std::max(max_change, std::abs(a[i] - b[i]));
    }
  }

  // C' is the boundary path over the two long sides on the flatter surface.
  const BoundaryChain bent = boundary_chain(moved, 1, 0);
  const double apex_sum = vertex_angle_sums(moved)[2];
  double d_bent = std::nan("");
  if (bent.convex) d_bent = endpoint_distance(bent.to_chain(), kappa_prime);

  // L': the two long sides with the original apex angle, drawn on kappa'.
  const ConvexChain two_chain({long_a, long_b}, {src[apex]});
  const double d_two = endpoint_distance(two_chain, kappa_prime);
  const double tol = strict_tolerance(tri.perimeter());
  const bool mechanism_shrinks = d_two - short_c > tol;

  bool oracle_shrinks = false;
  double oracle_margin = 0.0;
  if (kappa_prime.kappa() < kappa.kappa()) {
    const ThinTriangleReport oracle = thin_triangle_check(epsilon, tri, kappa_prime);
    oracle_shrinks = oracle.apex_decreases;
    oracle_margin = oracle.margin;
  }

  r.add("faces", static_cast<double>(mesh.faces.size()));
  r.add("min_face_angle_drop", min_drop);
  r.add("max_face_angle_change", max_change);
  r.add("apex_source", src[apex]);
  r.add("apex_redrawn_sum", apex_sum);
  r.add("boundary_convex", bent.convex ? 1.0 : 0.0);
  r.add("d_boundary", d_bent);
  r.add("d_two_chain", d_two);
  r.add("cauchy_gain", d_two - d_bent);
  r.add("short_side", short_c);
  r.add("oracle_margin", oracle_margin);
  r.add("agreement", mechanism_shrinks == oracle_shrinks ? 1.0 : 0.0);
  r.margin = d_two - short_c;
  r.pass = mechanism_shrinks == oracle_shrinks && r.margin > tol;
  return r;
}

TheoremReport check_all_angles(const std::array<double, 3>& sides, const Curvature& kappa,
                               const Curvature& kappa_prime, int pieces, std::uint64_t seed) {
  if (!(kappa.kappa() > kappa_prime.kappa())) throw DomainError("all-angles needs kappa > kappa'");
  if (pieces < 2) throw DomainError("the opposite side needs at least two pieces");
  const AngleComparison oracle = compare_angles_two_spheres(sides, kappa, kappa_prime);
  const double tol = strict_tolerance(sides[0] + sides[1] + sides[2]);

  TheoremReport r{TheoremId::all_angles, seed, {}, true, std::numeric_limits<double>::infinity()};
  for (std::size_t j = 0; j < 3; ++j) {
    // T' on the flatter surface with the compared angle at the origin.
    const double opposite = sides[j];
    const double to_b = sides[(j + 2) % 3];
    const double to_c = sides[(j + 1) % 3];
    const double angle_flat = oracle.target_angles[j];
    const Placement origin = canonical_frame(kappa_prime);
    const SurfacePoint b = walk(origin.point, origin.heading, to_b, kappa_prime).point;
    const SurfacePoint c = walk(origin.point, rotate(origin.heading, angle_flat), to_c, kappa_prime).point;

    std::vector<SurfacePoint> polygon{origin.point, b};
    const Heading along = heading_towards(b, c);
    for (int k = 1; k < pieces; ++k) {
      polygon.push_back(walk(b, along, opposite * k / pieces, kappa_prime).point);
    }
    polygon.push_back(c);

    const Triangulation fan = fan_triangulate(std::span<const SurfacePoint>(polygon), kappa_prime);
    const Triangulation curved = redraw(fan, kappa);
    const double gamma = vertex_angle_sums(curved)[0];
    const BoundaryChain base = boundary_chain(curved, 1, polygon.size() - 1);
    double min_bend = std::numeric_limits<double>::infinity();
    for (double a : base.interior_angles) min_bend = std::min(min_bend, a - kPi);
    const Layout lay = layout(curved);
    const double d_base = geodesic_distance(lay.positions[1], lay.positions.back(), kappa);

    const bool gamma_grows = gamma - angle_flat > kAngleTol;
    const bool base_bent = min_bend > kAngleTol && !base.convex;
    const bool chord_shorter = opposite - d_base > tol;
    const bool mechanism = gamma_grows && chord_shorter;
    const bool oracle_grows = oracle.deltas[j] > kAngleTol;

    const std::string tag = std::to_string(j);
    r.add("gamma_gain_" + tag, gamma - angle_flat);
    r.add("min_bend_" + tag, min_bend);
    r.add("chord_deficit_" + tag, opposite - d_base);
    r.add("oracle_delta_" + tag, oracle.deltas[j]);
    r.pass = r.pass && mechanism && oracle_grows && base_bent;
    r.margin = std::min(r.margin, std::min(gamma - angle_flat, opposite - d_base));
  }
  return r;
}

std::vector<SweepPoint> sweep_radius(const ConvexChain& chain, std::span<const double> kappa_grid) {
  std::vector<SweepPoint> out;
  out.reserve(kappa_grid.size());
  for (double k : kappa_grid) {
    SweepPoint p{k, std::nullopt, {}};
    try {
      p.distance = endpoint_distance(chain, Curvature(k));
    } catch (const Error& e) {
      p.error = e.what();
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "cauchy") return Suite::cauchy;
  if (name == "sphere-to-plane") return Suite::sphere_to_plane;
  if (name == "growing-sphere") return Suite::growing_sphere;
  if (name == "thin-triangle") return Suite::thin_triangle;
  if (name == "all-angles") return Suite::all_angles;
  if (name == "midchord") return Suite::midchord;
  return std::nullopt;
}

namespace {

constexpr double kTargets[] = {0.5, 0.25, 0.1};

TheoremReport run_instance(Suite suite, const SuiteOptions& opts, int index) {
  const std::uint64_t seed = instance_seed(opts.seed, static_cast<std::uint64_t>(index));
  const double target = opts.kappa_to.value_or(kTargets[index % 3]);
  switch (suite) {
    case Suite::cauchy: {
      const Curvature k(opts.kappa.value_or(index % 2 == 0 ? 1.0 : 0.0));
      GeneratorConfig cfg;
      cfg.kappa = k.is_flat() ? Curvature(1.0) : k;
      cfg.seed = seed;
      const ConvexChain chain = random_convex_chain(cfg);
      return check_cauchy_arm(chain, k, random_increments(chain, seed ^ 0x5bd1e995ULL), seed);
    }
    case Suite::sphere_to_plane: {
      GeneratorConfig cfg;
      cfg.kappa = Curvature(opts.kappa.value_or(1.0));
      cfg.seed = seed;
      return check_sphere_to_plane(random_convex_chain(cfg), cfg.kappa, seed);
    }
    case Suite::growing_sphere: {
      GeneratorConfig cfg;
      cfg.kappa = Curvature(opts.kappa.value_or(1.0));
      cfg.kappa_prime = Curvature(target);
      cfg.seed = seed;
      return check_growing_sphere(random_convex_chain(cfg), cfg.kappa, cfg.kappa_prime, seed);
    }
    case Suite::thin_triangle: {
      const Curvature k(opts.kappa.value_or(1.0));
      const Triangle tri = random_thin_triangle(seed, k, {0.4, 1.2}, {0.02, 0.25});
      const double ell = std::min({tri.side(0), tri.side(1), tri.side(2)});
      return replay_thin_triangle_pipeline(tri, 0.3, Curvature(target), ell, seed);
    }
    case Suite::all_angles: {
      const Curvature k(opts.kappa.value_or(1.0));
      const Curvature kp(target);
      const Curvature surfaces[] = {k, kp};
      const auto sides = random_side_triple(seed, {0.1, 1.5}, 0.05, surfaces);
      return check_all_angles(sides, k, kp, 8, seed);
    }
    case Suite::midchord: {
      const Curvature k(opts.kappa.value_or(1.0));
      const Curvature surfaces[] = {k};
      const auto s = random_side_triple(seed, {0.1, 1.5}, 0.05, surfaces);
      const Triangle tri(s[0], s[1], s[2], k);
      TheoremReport r{TheoremId::midchord, seed, {}, false, 0.0};
      const double chord = midchord_length(tri);
      r.add("midchord", chord);
      r.add("half_side", 0.5 * s[0]);
      r.margin = chord - 0.5 * s[0];
      r.pass = k.is_flat() ? std::abs(r.margin) < 1e-12 : r.margin > strict_tolerance(tri.perimeter());
      return r;
    }
  }
  throw UsageError("unknown suite");
}

TheoremId suite_theorem(Suite s) {
  switch (s) {
    case Suite::cauchy: return TheoremId::cauchy_arm;
    case Suite::sphere_to_plane: return TheoremId::sphere_to_plane;
    case Suite::growing_sphere: return TheoremId::growing_sphere;
    case Suite::thin_triangle: return TheoremId::thin_triangle;
    case Suite::all_angles: return TheoremId::all_angles;
    case Suite::midchord: return TheoremId::midchord;
  }
  return TheoremId::cauchy_arm;
}

}  // namespace

std::vector<TheoremReport> run_suite(Suite suite, const SuiteOptions& opts) {
  if (opts.count < 0) throw DomainError("suite count must be nonnegative");
  std::vector<TheoremReport> reports(static_cast<std::size_t>(opts.count));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < opts.count; i = next++) {
      TheoremReport& slot = reports[static_cast<std::size_t>(i)];
      try {
        slot = run_instance(suite, opts, i);
      } catch (const Error& e) {
        slot = TheoremReport{suite_theorem(suite), instance_seed(opts.seed, static_cast<std::uint64_t>(i)),
                             {}, false, std::nan("")};
        slot.add("error", 1.0);
      }
    }
  };
  unsigned threads = opts.threads != 0 ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max(1, opts.count)));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  return reports;
}

}  // namespace kappachain
