// Copyright 2026 The Hamilton Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

#include "hamilton/errors.hpp"
#include "hamilton/quaternion.hpp"
#include "hamilton/tolerance.hpp"

namespace hamilton {

// The Hopf fibrations of the three associative real division algebras:
//
//   S^1 -> S^1   (fiber S^0, unit reals)
//   S^3 -> S^2   (fiber S^1, unit complexes)
//   S^7 -> S^4   (fiber S^3, unit quaternions)
//
// Each map sends a pair over the algebra to its projective-line class; the
// preimage of every base point is a sphere one dimension below the base.
// Over the quaternions the rescaling acts on the RIGHT, (q1, q2) ->
// (q1 w, q2 w), which is what makes the invariant q1 conj(q2) well defined:
// q1 w conj(q2 w) = q1 w conj(w) conj(q2) = |w|^2 q1 conj(q2).

/// Point of the unit n-sphere in R^(n+1). Aggregate; operations validate
/// the on-sphere precondition themselves (1e-6 on inputs, while produced
/// outputs hold it to 1e-9).
template <std::size_t N>
struct SpherePoint {
  std::array<double, N + 1> x{};

  friend constexpr bool operator==(const SpherePoint&, const SpherePoint&) = default;
};

using Circle = SpherePoint<1>;

template <std::size_t N>
double norm_sq(const SpherePoint<N>& p) {
  double s = 0.0;
  for (double c : p.x) s += c * c;
  return s;
}

template <std::size_t N>
bool on_sphere(const SpherePoint<N>& p, const Tolerance& tol = kInputTolerance) {
  return tol.near_zero(norm_sq(p) - 1.0);
}

template <std::size_t N>
double distance(const SpherePoint<N>& a, const SpherePoint<N>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i <= N; ++i) s += (a.x[i] - b.x[i]) * (a.x[i] - b.x[i]);
  return std::sqrt(s);
}

/// Scales a point onto the sphere; throws NotOnSphereError on the zero
/// vector.
template <std::size_t N>
SpherePoint<N> sphere_normalized(const SpherePoint<N>& p) {
  const double n = std::sqrt(norm_sq(p));
  if (n == 0.0) throw NotOnSphereError("cannot normalize the zero vector onto a sphere");
  SpherePoint<N> r = p;
  for (double& c : r.x) c /= n;
  return r;
}

namespace detail {

template <std::size_t N>
void require_on_sphere(const SpherePoint<N>& p, const Tolerance& tol = kInputTolerance) {
  if (!on_sphere(p, tol)) throw NotOnSphereError();
}

}  // namespace detail

// S^3 viewed as the complex pair (z1, z2) = (x0 + i x1, x2 + i x3); S^7 as
// the quaternion pair (q1, q2) = ((x0..x3), (x4..x7)).

inline std::array<std::complex<double>, 2> to_complex_pair(const SpherePoint<3>& p) {
  return {std::complex<double>(p.x[0], p.x[1]), std::complex<double>(p.x[2], p.x[3])};
}

inline SpherePoint<3> from_complex_pair(const std::complex<double>& z1,
                                        const std::complex<double>& z2) {
  return {{z1.real(), z1.imag(), z2.real(), z2.imag()}};
}

inline std::pair<Quatd, Quatd> to_quat_pair(const SpherePoint<7>& p) {
  return {Quatd(p.x[0], p.x[1], p.x[2], p.x[3]), Quatd(p.x[4], p.x[5], p.x[6], p.x[7])};
}

inline SpherePoint<7> from_quat_pair(const Quatd& q1, const Quatd& q2) {
  return {{q1.w, q1.x, q1.y, q1.z, q2.w, q2.x, q2.y, q2.z}};
}

/// Real Hopf map, the 2:1 angle doubling (cos t, sin t) -> (cos 2t, sin 2t),
/// computed algebraically as (x0^2 - x1^2, 2 x0 x1). Antipodal points map
/// to the same image.
inline Circle hopf_real(const Circle& p, const Tolerance& tol = kInputTolerance) {
  detail::require_on_sphere(p, tol);
  return {{p.x[0] * p.x[0] - p.x[1] * p.x[1], 2.0 * p.x[0] * p.x[1]}};
}

/// Complex Hopf map S^3 -> S^2 in the chart
///
///   (z1, z2) -> (2 Re(z1 conj(z2)), 2 Im(z1 conj(z2)), |z1|^2 - |z2|^2)
///
/// Invariant under (z1, z2) -> (lambda z1, lambda z2) for unit lambda; the
/// fiber over every base point is that circle. (1, 0) maps to the north
/// pole (0, 0, 1).
inline SpherePoint<2> hopf_complex(const SpherePoint<3>& p,
                                   const Tolerance& tol = kInputTolerance) {
  detail::require_on_sphere(p, tol);
  const auto [z1, z2] = to_complex_pair(p);
  const std::complex<double> w = z1 * std::conj(z2);
  return {{2.0 * w.real(), 2.0 * w.imag(), std::norm(z1) - std::norm(z2)}};
}

/// Quaternionic Hopf map S^7 -> S^4:
///
///   (q1, q2) -> (2 q1 conj(q2), norm_sq(q1) - norm_sq(q2))
///
/// Invariant under right multiplication (q1, q2) -> (q1 w, q2 w) by unit w;
/// each fiber is a 3-sphere of unit quaternions. The LEFT action does not
/// preserve this map.
inline SpherePoint<4> hopf_quaternionic(const SpherePoint<7>& p,
                                        const Tolerance& tol = kInputTolerance) {
  detail::require_on_sphere(p, tol);
  const auto [q1, q2] = to_quat_pair(p);
  const Quatd c = 2.0 * (q1 * conjugate(q2));
  return {{c.w, c.x, c.y, c.z, norm_sq(q1) - norm_sq(q2)}};
}

inline bool fiber_contains(const Circle& total, const Circle& base,
                           const Tolerance& tol = kInputTolerance) {
  detail::require_on_sphere(base, tol);
  return tol.near_zero(distance(hopf_real(total, tol), base));
}

inline bool fiber_contains(const SpherePoint<3>& total, const SpherePoint<2>& base,
                           const Tolerance& tol = kInputTolerance) {
  detail::require_on_sphere(base, tol);
  return tol.near_zero(distance(hopf_complex(total, tol), base));
}

inline bool fiber_contains(const SpherePoint<7>& total, const SpherePoint<4>& base,
                           const Tolerance& tol = kInputTolerance) {
  detail::require_on_sphere(base, tol);
  return tol.near_zero(distance(hopf_quaternionic(total, tol), base));
}

/// A point of the complex Hopf fiber over `base`. No single section covers
/// the whole base sphere (the bundle is nontrivial); this uses the chart
/// with real z1 on the northern half, real z2 on the southern.
inline SpherePoint<3> section_complex(const SpherePoint<2>& base,
                                      const Tolerance& tol = kInputTolerance) {
  detail::require_on_sphere(base, tol);
  const SpherePoint<2> b = sphere_normalized(base);
  if (b.x[2] >= 0.0) {
    const double r1 = std::sqrt((1.0 + b.x[2]) / 2.0);
    return from_complex_pair({r1, 0.0}, {b.x[0] / (2.0 * r1), -b.x[1] / (2.0 * r1)});
  }
  const double r2 = std::sqrt((1.0 - b.x[2]) / 2.0);
  return from_complex_pair({b.x[0] / (2.0 * r2), b.x[1] / (2.0 * r2)}, {r2, 0.0});
}

/// A point of the quaternionic Hopf fiber over `base`; same two-chart
/// construction as section_complex.
inline SpherePoint<7> section_quaternionic(const SpherePoint<4>& base,
                                           const Tolerance& tol = kInputTolerance) {
  detail::require_on_sphere(base, tol);
  SpherePoint<4> b = base;
  {
    const double n = std::sqrt(norm_sq(base));
    for (double& c : b.x) c /= n;
  }
  const Quatd c(b.x[0], b.x[1], b.x[2], b.x[3]);
  if (b.x[4] >= 0.0) {
    const double r1 = std::sqrt((1.0 + b.x[4]) / 2.0);
    return from_quat_pair(Quatd(r1, 0, 0, 0), (1.0 / (2.0 * r1)) * conjugate(c));
  }
  const double r2 = std::sqrt((1.0 - b.x[4]) / 2.0);
  return from_quat_pair((1.0 / (2.0 * r2)) * c, Quatd(r2, 0, 0, 0));
}

namespace detail {

template <std::size_t TotalN, std::size_t BaseN>
void verify_fiber_samples(const std::vector<SpherePoint<TotalN>>& samples,
                          const SpherePoint<BaseN>& base) {
  for (const auto& s : samples) {
    if (!fiber_contains(s, base, kDefaultTolerance)) {
      throw Error("fiber sample failed to map back to its base point");
    }
  }
}

}  // namespace detail

/// The full real fiber: the two antipodal preimages of `base` under the
/// angle-doubling map. `n` is clamped to 2, the fiber being S^0.
inline std::vector<Circle> fiber_sample(const Circle& base, int n,
                                        const Tolerance& tol = kInputTolerance) {
  if (n < 1) throw BadCountError();
  detail::require_on_sphere(base, tol);
  const Circle b = sphere_normalized(base);
  const double half = 0.5 * std::atan2(b.x[1], b.x[0]);
  const Circle p{{std::cos(half), std::sin(half)}};
  std::vector<Circle> samples = {p, Circle{{-p.x[0], -p.x[1]}}};
  detail::verify_fiber_samples(samples, b);
  return samples;
}

/// n points of the circle fiber over `base`, the section rotated by the
/// unit complexes exp(2 pi i k / n), k = 0..n-1.
inline std::vector<SpherePoint<3>> fiber_sample(const SpherePoint<2>& base, int n,
                                                const Tolerance& tol = kInputTolerance) {
  if (n < 1) throw BadCountError();
  detail::require_on_sphere(base, tol);
  const SpherePoint<2> b = sphere_normalized(base);
  const auto [s1, s2] = to_complex_pair(section_complex(b, tol));
  std::vector<SpherePoint<3>> samples;
  samples.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * std::numbers::pi * k / n;
    const std::complex<double> lambda = std::polar(1.0, t);
    samples.push_back(from_complex_pair(lambda * s1, lambda * s2));
  }
  detail::verify_fiber_samples(samples, b);
  return samples;
}

/// n points of the S^3 fiber over `base`: the section right-multiplied by
/// unit quaternions drawn uniformly (4D Gaussian, normalized) from the
/// given seed. The RNG is an explicit parameter; results are deterministic
/// per (base, n, seed) and ordered by sample index.
inline std::vector<SpherePoint<7>> fiber_sample(const SpherePoint<4>& base, int n,
                                                std::uint64_t seed,
                                                const Tolerance& tol = kInputTolerance) {
  if (n < 1) throw BadCountError();
  SpherePoint<4> b = base;
  detail::require_on_sphere(b, tol);
  {
    const double norm = std::sqrt(norm_sq(base));
    for (double& c : b.x) c /= norm;
  }
  const auto [s1, s2] = to_quat_pair(section_quaternionic(b, tol));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<SpherePoint<7>> samples;
  samples.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Quatd w;
    do {
      w = Quatd(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
    } while (norm(w) < 1e-6);
    w = (1.0 / norm(w)) * w;
    samples.push_back(from_quat_pair(s1 * w, s2 * w));
  }
  detail::verify_fiber_samples(samples, b);
  return samples;
}

/// Stereographic projection of S^3 minus the pole (0, 0, 0, 1) onto R^3:
/// (x0, x1, x2) / (1 - x3). Used to export fiber circles as 3D curves.
inline std::array<double, 3> stereographic_project(const SpherePoint<3>& p) {
  const double denom = 1.0 - p.x[3];
  if (denom < 1e-12) throw AtPoleError();
  return {p.x[0] / denom, p.x[1] / denom, p.x[2] / denom};
}

// ---------------------------------------------------------------------------
// Projective lines over R, C and H.

namespace detail {

inline double field_abs(double v) { return std::abs(v); }
inline double field_abs(const std::complex<double>& v) { return std::abs(v); }
inline double field_abs(const Quatd& v) { return norm(v); }

inline double field_inverse(double v) { return 1.0 / v; }
inline std::complex<double> field_inverse(const std::complex<double>& v) { return 1.0 / v; }
inline Quatd field_inverse(const Quatd& v) { return inverse(v); }

template <typename F>
F field_one() {
  if constexpr (std::is_same_v<F, Quatd>) {
    return Quatd::identity();
  } else {
    return F(1);
  }
}

}  // namespace detail

/// Point of the projective line P^1(F), stored as the canonical chart
/// representative of its rescaling class. Scalars act on the right, so the
/// same normalization works for the non-commutative quaternions.
template <typename F>
struct ProjectiveLinePoint {
  F first{};
  F second{};

  friend constexpr bool operator==(const ProjectiveLinePoint&, const ProjectiveLinePoint&) =
      default;
};

/// Canonical representative of the class of (a, b) under right rescaling
/// (a, b) ~ (a lambda, b lambda):
///
///   (1, b a^-1)  when |a| >= |b|,   else   (a b^-1, 1)
///
/// The dominant slot is scaled to exactly 1, so the free slot has magnitude
/// at most 1 and the point at infinity (0, b) lands on (0, 1). Throws
/// ZeroPairError for (0, 0), which represents no point.
template <typename F>
ProjectiveLinePoint<F> projectivize(const F& a, const F& b) {
  if (a == F{} && b == F{}) throw ZeroPairError();
  if (detail::field_abs(a) >= detail::field_abs(b)) {
    return {detail::field_one<F>(), b * detail::field_inverse(a)};
  }
  return {a * detail::field_inverse(b), detail::field_one<F>()};
}

/// Class equality within tolerance. Representatives in the same chart
/// compare slotwise; across charts, (1, m) and (n, 1) agree exactly when
/// n m = 1.
template <typename F>
bool approx_equal(const ProjectiveLinePoint<F>& p, const ProjectiveLinePoint<F>& q,
                  const Tolerance& tol = kDefaultTolerance) {
  const F one = detail::field_one<F>();
  const bool p_chart_a = (p.first == one);
  const bool q_chart_a = (q.first == one);
  if (p_chart_a == q_chart_a) {
    const F df = p.first - q.first;
    const F ds = p.second - q.second;
    return tol.near_zero(detail::field_abs(df)) && tol.near_zero(detail::field_abs(ds));
  }
  const F m = p_chart_a ? p.second : q.second;
  const F n = p_chart_a ? q.first : p.first;
  return tol.near_zero(detail::field_abs(n * m - one));
}

}  // namespace hamilton
