#pragma once

// Curvature-generic trigonometry shared by the double-precision kernel and the
// extended-precision midchord and residual computations. Every formula degrades smoothly to its
// planar form as kappa -> 0.

#include <array>
#include <cmath>

namespace kappachain::detail {

/// Generalized sine S_k(x) = sin(sqrt(k) x) / sqrt(k), with S_0(x) = x.
template <class T>
T gsin(T x, T kappa) {
  using std::sin;
  using std::sqrt;
  if (kappa == T(0)) return x;
  const T root = sqrt(kappa);
  const T y = root * x;
  if (std::abs(y) < T(1e-4)) {
    const T y2 = y * y;
    return x * (T(1) - y2 / T(6) + y2 * y2 / T(120));
  }
  return sin(y) / root;
}

/// Generalized cosine C_k(x) = cos(sqrt(k) x), with C_0(x) = 1.
template <class T>
T gcos(T x, T kappa) {
  using std::cos;
  using std::sqrt;
  if (kappa == T(0)) return T(1);
  return cos(sqrt(kappa) * x);
}

/// Angle opposite side `a` from the half-angle form
///   tan(alpha/2) = sqrt(S(s-b) S(s-c) / (S(s) S(s-a))),
/// which stays well conditioned for thin, flat and tiny triangles alike.
template <class T>
T angle_opposite(T a, T b, T c, T kappa) {
  using std::atan2;
  using std::sqrt;
  const T s = (a + b + c) / T(2);
  const T num = gsin(s - b, kappa) * gsin(s - c, kappa);
  const T den = gsin(s, kappa) * gsin(s - a, kappa);
  return T(2) * atan2(sqrt(num), sqrt(den));
}

template <class T>
std::array<T, 3> sss_angles(T a, T b, T c, T kappa) {
  return {angle_opposite(a, b, c, kappa), angle_opposite(b, c, a, kappa),
          angle_opposite(c, a, b, kappa)};
}

/// Side opposite the included angle `alpha` between sides b and c.
///   sin^2(a/2) ~ S((b-c)/2)^2 + S(b) S(c) sin^2(alpha/2)
///   cos^2(a/2) = C((b+c)/2)^2 + k S(b) S(c) cos^2(alpha/2)
/// Both right-hand sides are sums of nonnegative terms.
template <class T>
T sas_side(T b, T c, T alpha, T kappa) {
  using std::atan2;
  using std::cos;
  using std::sin;
  using std::sqrt;
  const T sh = sin(alpha / T(2));
  const T ch = cos(alpha / T(2));
  const T half_diff = gsin((b - c) / T(2), kappa);
  const T prod = gsin(b, kappa) * gsin(c, kappa);
  const T sin_part = half_diff * half_diff + prod * sh * sh;
  if (kappa == T(0)) return T(2) * sqrt(sin_part);
  const T half_sum = gcos((b + c) / T(2), kappa);
  const T cos_part = half_sum * half_sum + kappa * prod * ch * ch;
  const T root = sqrt(kappa);
  return T(2) * atan2(root * sqrt(sin_part), sqrt(cos_part)) / root;
}

}  // namespace kappachain::detail
