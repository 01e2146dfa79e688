#include "kappachain/lemma_lab.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <string>

#include "kappachain/detail/ktrig.hpp"
#include "kappachain/errors.hpp"

namespace kappachain {

namespace {

using Wide = long double;

constexpr double kNoiseFloor = 1e-12;

template <class T>
std::array<T, 3> wide_sides(const Triangle& tri) {
  return {T(tri.side(0)), T(tri.side(1)), T(tri.side(2))};
}

}  // namespace

double midchord_length(const Triangle& tri) {
  const auto [a, b, c] = wide_sides<Wide>(tri);
  const Wide k = tri.curvature().kappa();
  const Wide alpha = detail::angle_opposite(a, b, c, k);
  return static_cast<double>(detail::sas_side(b / 2, c / 2, alpha, k));
}

MidchordSequence iterated_midchord(const Triangle& tri, int iters) {
  if (iters < 1) throw DomainError("iterated_midchord needs at least one iteration");
  const auto [a, b, c] = wide_sides<Wide>(tri);
  const Wide k = tri.curvature().kappa();
  // Below this the per-step growth of s_i 2^i (about k * side^2 relative) is
  // lost in extended-precision rounding.
  const Wide resolvable = Wide(64) * LDBL_EPSILON;

  MidchordSequence seq;
  Wide chord = a;
  Wide prev_b = b;
  Wide prev_c = c;
  for (int i = 1; i <= iters; ++i) {
    const Wide bi = std::ldexp(b, -i);
    const Wide ci = std::ldexp(c, -i);
    if (k > 0 && k * std::max(bi, ci) * std::max(bi, ci) < resolvable) {
      seq.truncated = true;
      break;
    }
    const Wide apex = detail::angle_opposite(chord, prev_b, prev_c, k);
    chord = detail::sas_side(bi, ci, apex, k);
    Wide cos_est = (bi / ci + ci / bi - chord * chord / (bi * ci)) / 2;
    cos_est = std::clamp(cos_est, Wide(-1), Wide(1));
    seq.steps.push_back({i, static_cast<double>(chord),
                         static_cast<double>(std::ldexp(chord, i) - a),
                         static_cast<double>(std::acos(cos_est))});
    prev_b = bi;
    prev_c = ci;
  }
  return seq;
}

LegendreApproximation legendre_planar_angles(const Triangle& tri) {
  const auto [a, b, c] = wide_sides<Wide>(tri);
  const Wide k = tri.curvature().kappa();
  const auto curved = detail::sss_angles(a, b, c, k);
  const auto planar = detail::sss_angles(a, b, c, Wide(0));
  const Wide third = (curved[0] + curved[1] + curved[2] - std::acos(Wide(-1))) / 3;

  LegendreApproximation out;
  out.excess = static_cast<double>(3 * third);
  for (std::size_t i = 0; i < 3; ++i) {
    out.curved[i] = static_cast<double>(curved[i]);
    out.planar[i] = static_cast<double>(planar[i]);
    out.approx[i] = static_cast<double>(curved[i] - third);
    out.residuals[i] = static_cast<double>(planar[i] - (curved[i] - third));
  }
  return out;
}

OrderFit legendre_order_fit(const Triangle& tri, std::span<const double> scales) {
  if (scales.size() < 2) throw DomainError("order fit needs at least two scales");
  const auto [lo, hi] = std::minmax_element(scales.begin(), scales.end());
  if (!(*lo > 0.0)) throw DomainError("order fit scales must be positive");
  if (!(*hi >= 10.0 * (1.0 - 1e-9) * *lo)) throw DomainError("order fit scales must span at least one decade");

  OrderFit fit;
  std::vector<double> xs;
  std::vector<double> ys;
  for (double t : scales) {
    const Triangle scaled(tri.side(0) * t, tri.side(1) * t, tri.side(2) * t, tri.curvature());
    const auto res = legendre_planar_angles(scaled).residuals;
    const double worst =
        std::max({std::abs(res[0]), std::abs(res[1]), std::abs(res[2])});
    fit.scales.push_back(t);
    fit.max_residuals.push_back(worst);
    if (worst <= kNoiseFloor) {
      fit.inconclusive = true;
      continue;
    }
    xs.push_back(std::log(t));
    ys.push_back(std::log(worst));
  }
  if (xs.size() < 2) {
    fit.inconclusive = true;
    fit.slope = std::nan("");
    return fit;
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  fit.slope = sxy / sxx;
  return fit;
}

AngleComparison compare_angles_two_spheres(const std::array<double, 3>& sides,
                                           const Curvature& kappa_hi, const Curvature& kappa_lo) {
  if (!(kappa_hi.kappa() > kappa_lo.kappa())) {
    throw DomainError("angle comparison needs kappa_hi > kappa_lo");
  }
  const Triangle hi(sides[0], sides[1], sides[2], kappa_hi);
  const Triangle lo(sides[0], sides[1], sides[2], kappa_lo);
  AngleComparison out;
  out.source_angles = solve_sss(hi);
  out.target_angles = solve_sss(lo);
  for (std::size_t i = 0; i < 3; ++i) out.deltas[i] = out.source_angles[i] - out.target_angles[i];
  out.excess_pair = {spherical_excess(hi), spherical_excess(lo)};
  return out;
}

ThinTriangleReport thin_triangle_check(double epsilon, const Triangle& tri, const Curvature& kappa_lo) {
  if (!(kappa_lo.kappa() < tri.curvature().kappa())) {
    throw DomainError("thin-triangle check needs kappa_lo below the triangle's curvature");
  }
  const Angles src = solve_sss(tri);
  const int apex = static_cast<int>(std::min_element(src.begin(), src.end()) - src.begin());
  const double apex_src = src[static_cast<std::size_t>(apex)];
  if (!(apex_src < epsilon)) {
    throw DomainError("apex angle " + std::to_string(apex_src) + " is not below epsilon " +
                      std::to_string(epsilon));
  }
  const Angles dst = solve_sss(tri.rebound(kappa_lo));
  ThinTriangleReport r;
  r.apex_index = apex;
  r.apex_source = apex_src;
  r.apex_target = dst[static_cast<std::size_t>(apex)];
  r.margin = r.apex_source - r.apex_target;
  r.apex_decreases = r.margin > strict_tolerance(1.0);
  return r;
}

}  // namespace kappachain
