#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "kappachain/errors.hpp"
#include "kappachain/lemma_lab.hpp"
#include "kappachain/verify_harness.hpp"
#include "oracles.hpp"

using namespace kappachain;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
const Curvature kSphere(1.0);
const Curvature kPlane(0.0);

ConvexChain octant() { return ConvexChain({kPi / 2, kPi / 2}, {kPi / 2}); }
}  // namespace

TEST_CASE("seeds and generators are deterministic") {
  CHECK(instance_seed(7, 0) != instance_seed(7, 1));
  CHECK(instance_seed(7, 3) == instance_seed(7, 3));
  GeneratorConfig cfg;
  cfg.seed = 99;
  CHECK(random_convex_chain(cfg) == random_convex_chain(cfg));
  const ConvexChain c = random_convex_chain(cfg);
  CHECK(random_increments(c, 5) == random_increments(c, 5));
}

TEST_CASE("generator self-check") {
  GeneratorConfig cfg;
  cfg.n_edges = {3, 8};
  for (std::uint64_t i = 0; i < 1000; ++i) {
    cfg.seed = instance_seed(2024, i);
    const ConvexChain c = random_convex_chain(cfg);
    CHECK(c.edge_count() >= 3);
    CHECK(c.edge_count() <= 8);
    CHECK(is_convex(c, kSphere));
    CHECK_NOTHROW(c.check_budget(kSphere));
  }
  cfg.n_edges = {2, 2};
  cfg.seed = 1;
  CHECK(is_convex(random_convex_chain(cfg), kSphere));
  cfg.length_scale = {-1.0, 0.5};
  CHECK_THROWS_AS(random_convex_chain(cfg), DomainError);
}

TEST_CASE("generator exhaustion") {
  GeneratorConfig cfg;
  cfg.n_edges = {8, 8};
  cfg.length_scale = {1.0, 1.2};  // eight edges of length >= 1 never fit under pi
  CHECK_THROWS_AS(random_convex_chain(cfg), GeneratorError);
}

TEST_CASE("side triples and thin triangles") {
  const std::vector<Curvature> grid{kSphere, Curvature(0.25), kPlane};
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto t = random_side_triple(s, {0.05, 1.5}, 0.01, grid);
    for (const Curvature& k : grid) {
      const Angles a = solve_sss(Triangle(t[0], t[1], t[2], k));
      for (double x : a) CHECK(x > 0.01);
    }
    const Triangle thin = random_thin_triangle(s, kSphere, {0.4, 1.2}, {0.02, 0.25});
    const Angles a = solve_sss(thin);
    CHECK(std::min({a[0], a[1], a[2]}) < 0.3);
  }
}

TEST_CASE("cauchy arm check") {
  const std::vector<double> inc{kPi / 4};
  const TheoremReport plane = check_cauchy_arm(ConvexChain({1, 1}, {kPi / 2}), kPlane, inc);
  CHECK(plane.pass);
  CHECK(plane.quantity("d_before") == Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(std::abs(plane.quantity("d_after") - 2 * std::cos(kPi / 8)) < 1e-9);
  const TheoremReport sphere = check_cauchy_arm(octant(), kSphere, inc);
  CHECK(sphere.pass);
  CHECK(sphere.margin == Approx(kPi / 4).epsilon(1e-12));
  CHECK_THROWS_AS(sphere.quantity("nonexistent"), UsageError);
  const std::vector<double> zero{0.0};
  CHECK_THROWS_AS(check_cauchy_arm(octant(), kSphere, zero), DomainError);
}

TEST_CASE("sphere to plane") {
  SUBCASE("octant 2-chain") {
    const TheoremReport r = check_sphere_to_plane(octant(), kSphere);
    CHECK(r.pass);
    CHECK(std::abs(r.quantity("d_source") - kPi / 2) < 1e-12);
    CHECK(std::abs(r.quantity("d_target") - 2.2214414690791831) < 1e-6);
    CHECK(r.quantity("d_boundary") == Approx(r.quantity("d_source")).epsilon(1e-12));
  }
  SUBCASE("near-degenerate chain") {
    const double l = 0.003;
    const TheoremReport r = check_sphere_to_plane(ConvexChain({l, l}, {kPi / 2}), kSphere);
    const double oracle_gain = l * std::sqrt(2.0) - oracle::cos_law_side(l, l, kPi / 2, 1.0);
    CHECK(r.margin < 1e-8);
    CHECK(r.margin > strict_tolerance(2 * l));
    CHECK(std::abs(r.margin - oracle_gain) < 1e-12);
    CHECK(r.pass);
  }
  SUBCASE("2-chain matches a single-triangle angle comparison") {
    const ConvexChain c({0.8, 0.6}, {1.4});
    const TheoremReport r = check_sphere_to_plane(c, kSphere);
    const double closing = endpoint_distance(c, kSphere);
    const AngleComparison cmp = compare_angles_two_spheres({closing, 0.6, 0.8}, kSphere, kPlane);
    CHECK(r.pass);
    CHECK(r.quantity("min_angle_drop") == Approx(cmp.deltas[0]).epsilon(1e-9));
  }
  CHECK_THROWS_AS(check_sphere_to_plane(octant(), kPlane), DomainError);
  CHECK_THROWS_AS(check_sphere_to_plane(ConvexChain({1.0}, {}), kSphere), DomainError);
}

TEST_CASE("growing sphere") {
  const TheoremReport r = check_growing_sphere(octant(), kSphere, Curvature(0.25));
  CHECK(r.pass);
  const double expect = oracle::cos_law_side(kPi / 2, kPi / 2, kPi / 2, 0.25);
  CHECK(r.quantity("d_target") == Approx(expect).epsilon(1e-12));
  CHECK(r.quantity("min_sweep_gain") > 0.0);
  const TheoremReport limit = check_growing_sphere(octant(), kSphere, Curvature(1e-9));
  CHECK(std::abs(limit.quantity("d_target") - check_sphere_to_plane(octant(), kSphere).quantity("d_target")) < 1e-6);
  CHECK_THROWS_AS(check_growing_sphere(octant(), kSphere, kSphere), DomainError);
}

TEST_CASE("thin triangle replay") {
  const Triangle tri(1, 1, 0.05, kSphere);
  SUBCASE("subdivided") {
    const TheoremReport r = replay_thin_triangle_pipeline(tri, 0.2, Curvature(0.25), 0.05);
    CHECK(r.pass);
    CHECK(r.quantity("agreement") == 1.0);
    CHECK(r.quantity("faces") > 1.0);
    CHECK(thin_triangle_check(0.2, tri, Curvature(0.25)).apex_decreases);
  }
  SUBCASE("coarse spacing") {
    const Triangle small(0.1, 0.1, 0.01, kSphere);
    const TheoremReport r = replay_thin_triangle_pipeline(small, 0.2, Curvature(0.25), 1.0);
    CHECK(r.quantity("faces") == 1.0);
    CHECK(r.quantity("agreement") == 1.0);
    CHECK(r.pass);
  }
  SUBCASE("identity curvature changes nothing") {
    const TheoremReport r = replay_thin_triangle_pipeline(tri, 0.2, kSphere, 0.05);
    CHECK(r.quantity("max_face_angle_change") < 1e-10);
    CHECK(r.quantity("agreement") == 1.0);
    CHECK_FALSE(r.pass);
  }
  CHECK_THROWS_AS(replay_thin_triangle_pipeline(tri, 0.01, Curvature(0.25), 0.05), DomainError);
  CHECK_THROWS_AS(replay_thin_triangle_pipeline(tri, 0.2, Curvature(2.0), 0.05), DomainError);
}

TEST_CASE("all angles shrink") {
  const TheoremReport r = check_all_angles({0.9, 1.0, 1.1}, kSphere, Curvature(0.25));
  CHECK(r.pass);
  CHECK(r.margin > 0.0);
  CHECK_THROWS_AS(check_all_angles({0.9, 1.0, 1.1}, kSphere, kSphere), DomainError);
}

TEST_CASE("sweeps") {
  SUBCASE("octant") {
    const std::vector<double> grid{1.0, 0.5, 0.25, 0.0};
    const auto s = sweep_radius(octant(), grid);
    REQUIRE(s.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
      REQUIRE(s[i].distance);
      CHECK(*s[i].distance == Approx(oracle::cos_law_side(kPi / 2, kPi / 2, kPi / 2, grid[i])).epsilon(1e-12));
      if (i > 0) CHECK(*s[i].distance > *s[i - 1].distance);
    }
  }
  SUBCASE("single edge is flat") {
    const std::vector<double> grid{1.0, 0.5, 0.0};
    for (const SweepPoint& p : sweep_radius(ConvexChain({0.7}, {}), grid)) CHECK(*p.distance == Approx(0.7));
  }
  SUBCASE("empty grid") { CHECK(sweep_radius(octant(), std::vector<double>{}).empty()); }
  SUBCASE("infeasible points are reported, not fatal") {
    const std::vector<double> grid{4.0, 1.0};
    const auto s = sweep_radius(octant(), grid);
    CHECK_FALSE(s[0].distance);
    CHECK_FALSE(s[0].error.empty());
    CHECK(s[1].distance);
  }
  const auto g = geometric_grid(1.0, 0.01, 3);
  CHECK(g[1] == Approx(0.1));
}

TEST_CASE("suites") {
  CHECK(parse_suite("cauchy") == Suite::cauchy);
  CHECK(parse_suite("growing-sphere") == Suite::growing_sphere);
  CHECK_FALSE(parse_suite("bogus"));
  SuiteOptions opts;
  opts.seed = 3;
  opts.count = 40;
  const auto a = run_suite(Suite::growing_sphere, opts);
  opts.threads = 1;
  const auto b = run_suite(Suite::growing_sphere, opts);
  REQUIRE(a.size() == 40);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(report_line(a[i]) == report_line(b[i]));
    CHECK(a[i].pass);
  }
  CHECK(report_line(a[0]).rfind("growing_sphere,", 0) == 0);
}
