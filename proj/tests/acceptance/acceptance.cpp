// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
//   acceptance [--cli PATH]
// Without --cli the determinism criterion runs the suites in-process only.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kappachain/chain_model.hpp"
#include "kappachain/errors.hpp"
#include "kappachain/geom_kernel.hpp"
#include "kappachain/lemma_lab.hpp"
#include "kappachain/verify_harness.hpp"
#include "oracles.hpp"

using namespace kappachain;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail = what;
      ok = false;
    }
  }
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

int count_pass(const std::vector<TheoremReport>& reports) {
  return static_cast<int>(std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.pass; }));
}

double min_margin(const std::vector<TheoremReport>& reports) {
  double m = INFINITY;
  for (const auto& r : reports) m = std::min(m, r.margin);
  return m;
}

std::vector<TheoremReport> suite(Suite s, int count, std::optional<double> kappa = {},
                                 std::optional<double> kappa_to = {}) {
  SuiteOptions opts;
  opts.seed = kSeed;
  opts.count = count;
  opts.kappa = kappa;
  opts.kappa_to = kappa_to;
  return run_suite(s, opts);
}

Outcome midchord_exceeds_half_side() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto sphere = suite(Suite::midchord, 1000, 1.0);
  const auto plane = suite(Suite::midchord, 1000, 0.0);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  double worst_plane = 0.0;
  for (const auto& r : plane) worst_plane = std::max(worst_plane, std::abs(r.margin));
  // Independent midpoint-vector check on the same triangles.
  double worst_oracle = 0.0;
  for (const auto& r : sphere) {
    const Curvature surfaces[] = {Curvature(1.0)};
    const auto s = random_side_triple(r.instance_seed, {0.1, 1.5}, 0.05, surfaces);
    worst_oracle = std::max(worst_oracle,
                            std::abs(r.quantity("midchord") - oracle::vector_midchord(s[0], s[1], s[2], 1.0)));
  }
  o.require(count_pass(sphere) == 1000, "sphere instances failing");
  o.require(min_margin(sphere) > 1e-9, "sphere margin not above 1e-9");
  o.require(count_pass(plane) == 1000 && worst_plane < 1e-12, "planar control off by >= 1e-12");
  o.require(worst_oracle < 1e-9, "midpoint-vector oracle disagrees");
  o.require(secs < 5.0, "runtime over 5 s");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(count_pass(sphere)) + "/1000 sphere, " +
              std::to_string(count_pass(plane)) + "/1000 plane, min margin " + fmt("%.3e", min_margin(sphere)) +
              ", planar max dev " + fmt("%.1e", worst_plane) + ", " + fmt("%.2f", secs) + " s";
  return o;
}

Outcome angles_shrink_with_curvature() {
  Outcome o;
  const std::vector<Curvature> grid{Curvature(1.0), Curvature(0.25), Curvature(0.0)};
  double worst = INFINITY;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const auto sides = random_side_triple(instance_seed(kSeed, i), {0.05, 1.5}, 1e-3, grid);
    for (std::size_t hi = 0; hi < grid.size(); ++hi) {
      for (std::size_t lo = hi + 1; lo < grid.size(); ++lo) {
        const AngleComparison c = compare_angles_two_spheres(sides, grid[hi], grid[lo]);
        for (double d : c.deltas) worst = std::min(worst, d);
      }
    }
  }
  o.require(worst > 0.0, "an angle did not decrease");
  const AngleComparison oct = compare_angles_two_spheres({kPi / 2, kPi / 2, kPi / 2}, grid[0], grid[2]);
  double anchor = 0.0;
  for (double d : oct.deltas) anchor = std::max(anchor, std::abs(d - kPi / 6));
  o.require(anchor < 1e-12, "octant deltas differ from pi/6");
  const auto mech = suite(Suite::all_angles, 200);
  o.require(count_pass(mech) == 200, "fan/redraw mechanism disagrees");
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("3000 pairwise comparisons, min delta ") +
              fmt("%.3e", worst) + ", octant anchor error " + fmt("%.1e", anchor) + ", mechanism " +
              std::to_string(count_pass(mech)) + "/200";
  return o;
}

Outcome iterated_midchord_converges() {
  Outcome o;
  const Curvature surfaces[] = {Curvature(1.0)};
  double worst = 0.0;
  int monotone = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const auto s = random_side_triple(instance_seed(kSeed + 3, i), {0.1, 1.0}, 0.05, surfaces);
    const Triangle tri(s[0], s[1], s[2], surfaces[0]);
    const MidchordSequence seq = iterated_midchord(tri, 25);
    if (seq.truncated || seq.steps.size() != 25) {
      o.require(false, "sequence truncated before 25 steps");
      continue;
    }
    worst = std::max(worst, std::abs(seq.steps.back().angle_estimate - solve_sss(tri)[0]));
    bool inc = seq.steps[0].scaled_gain > 0.0;
    for (std::size_t k = 1; k < seq.steps.size(); ++k) inc = inc && seq.steps[k].scaled_gain > seq.steps[k - 1].scaled_gain;
    monotone += inc ? 1 : 0;
  }
  o.require(worst < 1e-6, "estimate at step 25 off by >= 1e-6");
  o.require(monotone == 100, "s_i 2^i not strictly increasing");
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("max |estimate - angle| ") + fmt("%.2e", worst) +
              ", strictly increasing " + std::to_string(monotone) + "/100";
  return o;
}

Outcome legendre_order() {
  Outcome o;
  const auto scales = geometric_grid(0.2, 0.02, 10);
  const OrderFit fit = legendre_order_fit(Triangle(1.0, 1.2, 1.5, Curvature(1.0)), scales);
  o.require(!fit.inconclusive && fit.slope >= 3.5 && fit.slope <= 4.6, "slope outside [3.5, 4.6]");
  const LegendreApproximation eq = legendre_planar_angles(Triangle(0.1, 0.1, 0.1, Curvature(1.0)));
  double resid = 0.0, anchor = 0.0;
  for (int i = 0; i < 3; ++i) {
    resid = std::max(resid, std::abs(eq.residuals[i]));
    anchor = std::max(anchor, std::abs(eq.approx[i] - kPi / 3));
  }
  o.require(resid < 1e-6, "equilateral residual at t=0.1 >= 1e-6");
  o.require(anchor < 1e-6, "approximation misses pi/3");
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("slope ") + fmt("%.4f", fit.slope) +
              ", equilateral residual " + fmt("%.1e", resid) + ", anchor error " + fmt("%.1e", anchor);
  return o;
}

Outcome cauchy_arm() {
  Outcome o;
  const auto sphere = suite(Suite::cauchy, 1000, 1.0);
  const auto plane = suite(Suite::cauchy, 1000, 0.0);
  o.require(count_pass(sphere) == 1000, "sphere instance failed");
  o.require(count_pass(plane) == 1000, "plane instance failed");
  const std::vector<double> inc{kPi / 4};
  const TheoremReport anchor = check_cauchy_arm(ConvexChain({1, 1}, {kPi / 2}), Curvature(0.0), inc);
  const double err = std::max(std::abs(anchor.quantity("d_before") - std::sqrt(2.0)),
                              std::abs(anchor.quantity("d_after") - 2 * std::cos(kPi / 8)));
  o.require(anchor.pass && err < 1e-9, "planar anchor");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(count_pass(sphere)) + "/1000 sphere, " +
              std::to_string(count_pass(plane)) + "/1000 plane, anchor error " + fmt("%.1e", err);
  return o;
}

double octant_planar_distance() {
  return check_sphere_to_plane(ConvexChain({kPi / 2, kPi / 2}, {kPi / 2}), Curvature(1.0)).quantity("d_target");
}

Outcome sphere_to_plane() {
  Outcome o;
  const auto reports = suite(Suite::sphere_to_plane, 500);
  o.require(count_pass(reports) == 500, "pipeline stage failed");
  const TheoremReport oct = check_sphere_to_plane(ConvexChain({kPi / 2, kPi / 2}, {kPi / 2}), Curvature(1.0));
  const double e0 = std::abs(oct.quantity("d_source") - kPi / 2);
  const double e1 = std::abs(oct.quantity("d_target") - kPi / 2 * std::sqrt(2.0));
  o.require(oct.pass && e0 < 1e-6 && e1 < 1e-6, "octant anchor");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(count_pass(reports)) + "/500, octant " +
              fmt("%.6f", oct.quantity("d_source")) + " -> " + fmt("%.6f", oct.quantity("d_target"));
  return o;
}

Outcome growing_sphere() {
  Outcome o;
  const auto reports = suite(Suite::growing_sphere, 500);
  int sweeps = 0;
  for (const auto& r : reports) {
    if (!r.quantities.empty() && r.quantities.back().name == "min_sweep_gain" && r.quantities.back().value > 0.0)
      ++sweeps;
  }
  o.require(count_pass(reports) == 500, "distance did not increase");
  o.require(sweeps == 500, "sweep not strictly monotone");
  const ConvexChain oct({kPi / 2, kPi / 2}, {kPi / 2});
  const double limit = check_growing_sphere(oct, Curvature(1.0), Curvature(1e-10)).quantity("d_target");
  const double err = std::abs(limit - octant_planar_distance());
  o.require(err < 1e-6, "small-kappa limit disagrees with the planar value");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(count_pass(reports)) + "/500, monotone sweeps " +
              std::to_string(sweeps) + "/500, limit error " + fmt("%.1e", err);
  return o;
}

Outcome thin_triangle_agreement() {
  Outcome o;
  const auto reports = suite(Suite::thin_triangle, 200);
  int agree = 0;
  for (const auto& r : reports) {
    bool same = false;
    try {
      same = r.quantity("agreement") == 1.0;
    } catch (const UsageError&) {
    }
    agree += same ? 1 : 0;
  }
  o.require(agree == 200, "mechanism and oracle disagree");
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("agreement ") + std::to_string(agree) +
              "/200, apex shrinks in " + std::to_string(count_pass(reports)) + "/200";
  return o;
}

Outcome kernel_consistency() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_rt = 0.0;
  int n = 0;
  while (n < 10000) {
    const double k = n % 4 == 0 ? 0.0 : 2.0 * u(rng);
    const double a = 0.01 + 1.5 * u(rng), b = 0.01 + 1.5 * u(rng), c = 0.01 + 1.5 * u(rng);
    std::optional<Triangle> tri;
    try {
      tri.emplace(a, b, c, Curvature(k));
    } catch (const DomainError&) {
      continue;
    }
    const Angles ang = solve_sss(*tri);
    const Curvature curv(k);
    worst_rt = std::max({worst_rt, std::abs(solve_sas(b, c, ang[0], curv) - a),
                         std::abs(solve_sas(c, a, ang[1], curv) - b), std::abs(solve_sas(a, b, ang[2], curv) - c)});
    ++n;
  }
  double worst_walk = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Curvature k(i % 5 == 0 ? 0.0 : 0.01 + 4.0 * u(rng));
    const Placement start = canonical_frame(k);
    const double reach = k.is_flat() ? 10.0 : 0.999 * k.half_circumference();
    const double d = reach * u(rng);
    const Placement end = walk(start.point, rotate(start.heading, 2 * kPi * u(rng)), d, k);
    worst_walk = std::max(worst_walk, std::abs(geodesic_distance(start.point, end.point, k) - d));
  }
  double worst_cont = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double a = 0.5 + u(rng), b = 0.5 + u(rng), c = 0.5 + u(rng);
    if (a >= b + c || b >= a + c || c >= a + b) continue;
    const Angles flat = solve_sss(Triangle(a, b, c, Curvature(0.0)));
    const Angles near = solve_sss(Triangle(a, b, c, Curvature(1e-8)));
    for (int j = 0; j < 3; ++j) worst_cont = std::max(worst_cont, std::abs(flat[j] - near[j]));
  }
  o.require(worst_rt < 1e-9, "SSS/SAS round trip");
  o.require(worst_walk < 1e-10, "walk/distance");
  o.require(worst_cont < 1e-6, "kappa -> 0 continuity");
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("round trip ") + fmt("%.1e", worst_rt) + ", walk " +
              fmt("%.1e", worst_walk) + ", continuity " + fmt("%.1e", worst_cont);
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

Outcome cli_determinism(const std::string& cli) {
  Outcome o;
  if (cli.empty()) {
    auto line = [](const auto& reports) {
      std::string s;
      for (const auto& r : reports) s += report_line(r) + "\n";
      return s;
    };
    o.require(line(suite(Suite::growing_sphere, 100)) == line(suite(Suite::growing_sphere, 100)),
              "in-process reports differ");
    o.detail += "in-process only (no --cli given)";
    return o;
  }
  {
    std::ofstream chain("acceptance_octant.chain");
    chain << "unit = degrees\nlengths = 1.5707963267948966, 1.5707963267948966\nangles = 90\ncurvature = 1\n";
  }
  const std::string q = "\"" + cli + "\"";
  int failures = 0;
  for (int run = 0; run < 2; ++run) {
    const std::string tag = std::to_string(run);
    const std::string verify = q + " verify growing-sphere --seed 7 --count 200 --csv acc_verify_" + tag +
                               ".csv > acc_verify_" + tag + ".out";
    const std::string cauchy = q + " verify cauchy --seed 7 --count 200 > acc_cauchy_" + tag + ".out";
    const std::string sweep = q + " sweep --chain acceptance_octant.chain --grid 1,0.5,0.25,0.1,0 --csv acc_sweep_" +
                              tag + ".csv --svg acc_sweep_" + tag + ".svg";
    failures += std::system(verify.c_str()) != 0;
    failures += std::system(cauchy.c_str()) != 0;
    failures += std::system(sweep.c_str()) != 0;
  }
  o.require(failures == 0, "a CLI run exited nonzero");
  int identical = 0;
  for (const char* stem : {"acc_verify_%d.csv", "acc_verify_%d.out", "acc_cauchy_%d.out", "acc_sweep_%d.csv",
                           "acc_sweep_%d.svg"}) {
    char a[64], b[64];
    std::snprintf(a, sizeof a, stem, 0);
    std::snprintf(b, sizeof b, stem, 1);
    const std::string x = slurp(a), y = slurp(b);
    if (!x.empty() && x == y) ++identical;
  }
  o.require(identical == 5, "outputs differ between runs");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(identical) + "/5 output files byte-identical";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--cli") cli = argv[i + 1];
  }

  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"midchord exceeds half the third side", midchord_exceeds_half_side},
      {"angles shrink as curvature decreases", angles_shrink_with_curvature},
      {"iterated midchord converges", iterated_midchord_converges},
      {"Legendre residual order", legendre_order},
      {"Cauchy arm lemma", cauchy_arm},
      {"sphere-to-plane pipeline", sphere_to_plane},
      {"growing sphere", growing_sphere},
      {"thin-triangle mechanism/oracle agreement", thin_triangle_agreement},
      {"kernel self-consistency", kernel_consistency},
  };

  int failed = 0;
  int index = 0;
  auto report = [&](const char* name, const Outcome& o) {
    ++index;
    std::printf("%s [%d] %s: %s\n", o.ok ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
    failed += o.ok ? 0 : 1;
  };
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    report(c.name, o);
  }
  Outcome det;
  try {
    det = cli_determinism(cli);
  } catch (const std::exception& e) {
    det.ok = false;
    det.detail = std::string("exception: ") + e.what();
  }
  report("CLI determinism", det);

  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
