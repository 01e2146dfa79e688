#pragma once

// Seeded generators and end-to-end replays of the comparison arguments:
// triangulate -> redraw -> compare -> open the arm.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kappachain/chain_model.hpp"
#include "kappachain/geom_kernel.hpp"
#include "kappachain/triangulate.hpp"

namespace kappachain {

enum class TheoremId {
  cauchy_arm,
  sphere_to_plane,
  growing_sphere,
  thin_triangle,
  all_angles,
  midchord,
  legendre_order,
};

std::string_view to_string(TheoremId id);

struct Quantity {
  std::string name;
  double value = 0.0;
};

struct TheoremReport {
  TheoremId theorem = TheoremId::cauchy_arm;
  std::uint64_t instance_seed = 0;
  std::vector<Quantity> quantities;
  bool pass = false;
  double margin = 0.0;

  /// Throws UsageError for an unknown name.
  double quantity(std::string_view name) const;
  void add(std::string name, double value) { quantities.push_back({std::move(name), value}); }
};

/// "theorem_id,seed,margin,verdict"
std::string report_line(const TheoremReport& r);
inline constexpr std::string_view kReportHeader = "theorem_id,seed,margin,verdict";

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

struct GeneratorConfig {
  std::pair<int, int> n_edges{2, 8};
  /// Edge lengths are log-uniform in this range.
  Range length_scale{0.05, 0.6};
  /// kappa > kappa_prime >= 0; chains are convex and within budget on kappa.
  Curvature kappa{1.0};
  Curvature kappa_prime{0.0};
  std::uint64_t seed = 1;

  void validate() const;
};

/// Mixes a suite seed with an instance index.
std::uint64_t instance_seed(std::uint64_t base, std::uint64_t index);

/// Rejection sampler: exterior angles uniform in [0.05, 2 pi/(n+1)], lengths
/// log-uniform. Throws GeneratorError after 10^4 rejected attempts.
ConvexChain random_convex_chain(const GeneratorConfig& cfg);

/// Nonempty random subset of vertices, each opened by a fraction in [0.1, 1]
/// of its remaining slack to pi.
std::vector<double> random_increments(const ConvexChain& chain, std::uint64_t seed);

/// Side triple whose angles all exceed `min_angle` on every listed surface.
std::array<double, 3> random_side_triple(std::uint64_t seed, Range sides, double min_angle,
                                         std::span<const Curvature> feasible_on);

/// Triangle with two long sides in `long_sides` and apex angle in `apex`.
Triangle random_thin_triangle(std::uint64_t seed, const Curvature& curv, Range long_sides, Range apex);

TheoremReport check_cauchy_arm(const ConvexChain& chain, const Curvature& curv,
                               std::span<const double> increments, std::uint64_t seed = 0);

/// Fan on kappa, redraw on the plane, extract the boundary chain, open it back
/// to the original angles. Requires at least two edges.
TheoremReport check_sphere_to_plane(const ConvexChain& chain, const Curvature& kappa,
                                    std::uint64_t seed = 0);

/// Same pipeline towards kappa_prime in [0, kappa), plus a 16-point geometric
/// sweep of kappa that must be strictly monotone.
TheoremReport check_growing_sphere(const ConvexChain& chain, const Curvature& kappa,
                                   const Curvature& kappa_prime, std::uint64_t seed = 0);

/// Steiner subdivision at spacing ell, redraw on kappa_prime <= kappa,
/// boundary 2-chain comparison and apex conclusion, cross-checked against
/// thin_triangle_check. kappa is the triangle's own curvature.
TheoremReport replay_thin_triangle_pipeline(const Triangle& tri, double epsilon,
                                            const Curvature& kappa_prime, double ell,
                                            std::uint64_t seed = 0);

/// Fan over the subdivided opposite side on kappa_prime, redrawn on kappa,
/// for each of the three angles; cross-checked against compare_angles_two_spheres.
TheoremReport check_all_angles(const std::array<double, 3>& sides, const Curvature& kappa,
                               const Curvature& kappa_prime, int pieces = 8,
                               std::uint64_t seed = 0);

struct SweepPoint {
  double kappa = 0.0;
  std::optional<double> distance;
  std::string error;
};

/// Endpoint distance at every grid curvature; infeasible points carry an error.
std::vector<SweepPoint> sweep_radius(const ConvexChain& chain, std::span<const double> kappa_grid);

/// `count` points from hi down to lo, geometrically spaced (lo, hi > 0).
std::vector<double> geometric_grid(double hi, double lo, int count);

enum class Suite {
  cauchy,
  sphere_to_plane,
  growing_sphere,
  thin_triangle,
  all_angles,
  midchord,
};

std::optional<Suite> parse_suite(std::string_view name);

struct SuiteOptions {
  std::uint64_t seed = 1;
  int count = 100;
  /// Overrides the suite's default source / target curvatures.
  std::optional<double> kappa;
  std::optional<double> kappa_to;
  /// Worker threads; 0 picks hardware concurrency.
  unsigned threads = 0;
};

/// Runs `count` independent seeded instances concurrently; reports are
/// returned in instance order.
std::vector<TheoremReport> run_suite(Suite suite, const SuiteOptions& opts);

}  // namespace kappachain
