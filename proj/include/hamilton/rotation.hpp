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

#include "hamilton/errors.hpp"
#include "hamilton/matrix.hpp"
#include "hamilton/quaternion.hpp"
#include "hamilton/tolerance.hpp"
#include "hamilton/vector3.hpp"

namespace hamilton {

// Rotation semantics of unit quaternions.
//
// A unit quaternion q acts on a 3-vector v by conjugation, v -> q v q^-1,
// which is a proper rotation; q and -q give the same rotation (the map onto
// SO(3) is 2:1 with kernel {+-1}). In axis-angle terms,
// q = cos(theta/2) + sin(theta/2) n_hat rotates by theta about n_hat. Pairs
// of unit quaternions act on R^4 by v -> ql v qr, covering SO(4) the same
// 2:1 way.

/// A quaternion validated to have unit norm: |norm_sq - 1| <= eps at
/// construction (default 1e-9). The value is stored exactly as given, with
/// no silent renormalization, so callers keep bit-level control.
class UnitQuaternion {
 public:
  explicit UnitQuaternion(const Quatd& q, const Tolerance& tol = kDefaultTolerance) : q_(q) {
    if (!tol.near_zero(norm_sq(q) - 1.0)) throw NotUnitError();
  }

  /// Scales a nonzero quaternion onto the unit sphere.
  static UnitQuaternion normalized(const Quatd& q) {
    const double n = norm(q);
    if (n == 0.0) throw ZeroQuaternionError();
    return UnitQuaternion((1.0 / n) * q);
  }

  static UnitQuaternion identity() { return UnitQuaternion(Quatd::identity()); }

  const Quatd& value() const { return q_; }

  /// For unit quaternions the inverse is the conjugate.
  UnitQuaternion inverse() const { return UnitQuaternion(conjugate(q_)); }

  UnitQuaternion operator-() const { return UnitQuaternion(-q_); }

  friend bool operator==(const UnitQuaternion& a, const UnitQuaternion& b) {
    return a.q_ == b.q_;
  }

 private:
  Quatd q_;
};

/// Rotation by `angle_rad` radians, counter-clockwise about the unit vector
/// `axis`. Canonical form (as produced by to_axis_angle) has angle in
/// [0, pi].
struct AxisAngle {
  Vec3 axis;
  double angle_rad = 0.0;
};

namespace detail {

// Keeps |q| = 1 in long product chains without masking algorithmic error:
// renormalize only when the drift exceeds 1e-12.
inline UnitQuaternion contain_drift(const Quatd& q) {
  const double n2 = norm_sq(q);
  if (std::abs(n2 - 1.0) > 1e-12) {
    return UnitQuaternion((1.0 / std::sqrt(n2)) * q);
  }
  return UnitQuaternion(q);
}

}  // namespace detail

/// Double-cover representative with nonnegative scalar part: q is negated
/// when w < 0, and a tie at w = 0 is resolved by making the first nonzero
/// of (x, y, z) positive. R(q) = R(-q), so this never changes the rotation.
inline UnitQuaternion canonicalized(const UnitQuaternion& u) {
  const Quatd& q = u.value();
  if (q.w > 0.0) return u;
  if (q.w < 0.0) return -u;
  for (double c : {q.x, q.y, q.z}) {
    if (c > 0.0) return u;
    if (c < 0.0) return -u;
  }
  return u;
}

/// Rotates v by conjugation: the vector part of q (0, v) q^-1. Preserves
/// length and leaves the scalar part at zero (up to roundoff).
inline Vec3 conjugate_action(const UnitQuaternion& q, const Vec3& v) {
  const Quatd r = q.value() * embed(v) * conjugate(q.value());
  return r.vec();
}

/// The matrix whose entries contract the Levi-Civita symbol with u:
/// tilde(u)_ab = sum_c eps_abc u_c. Note tilde(u) * v = -cross(u, v).
inline Mat3d levi_civita_matrix(const Vec3& u) {
  return {{0.0, u.z, -u.y, -u.z, 0.0, u.x, u.y, -u.x, 0.0}};
}

inline Mat3d outer_product(const Vec3& a, const Vec3& b) {
  return {{a.x * b.x, a.x * b.y, a.x * b.z,
           a.y * b.x, a.y * b.y, a.y * b.z,
           a.z * b.x, a.z * b.y, a.z * b.z}};
}

/// The 3x3 proper rotation matrix of the conjugation action, for
/// q = (a, u):
///
///   R = (a^2 - |u|^2) I - 2a tilde(u) + 2 u u^t
///
/// R v = conjugate_action(q, v) for all v; R is orthogonal with det +1, and
/// R(q) = R(-q) exactly (every term is quadratic in the components).
inline Mat3d rotation_matrix(const UnitQuaternion& q) {
  const double a = q.value().w;
  const Vec3 u = q.value().vec();
  const Mat3d scaled_id = (a * a - norm_sq(u)) * Mat3d::identity();
  return scaled_id + (-2.0 * a) * levi_civita_matrix(u) + 2.0 * outer_product(u, u);
}

inline Vec3 apply(const Mat3d& r, const Vec3& v) {
  return {r(0, 0) * v.x + r(0, 1) * v.y + r(0, 2) * v.z,
          r(1, 0) * v.x + r(1, 1) * v.y + r(1, 2) * v.z,
          r(2, 0) * v.x + r(2, 1) * v.y + r(2, 2) * v.z};
}

/// Half-angle form q = cos(theta/2) + sin(theta/2) n_hat. The axis must be
/// unit length within tolerance (BadAxisError otherwise).
inline UnitQuaternion axis_angle_to_quat(const AxisAngle& aa,
                                         const Tolerance& tol = kDefaultTolerance) {
  if (!tol.near(norm(aa.axis), 1.0)) throw BadAxisError();
  const double half = 0.5 * aa.angle_rad;
  return detail::contain_drift(Quatd(std::cos(half), std::sin(half) * aa.axis));
}

/// Inverse of the half-angle form, canonicalized: angle in [0, pi], axis
/// unit length. The q vs -q ambiguity is resolved toward nonnegative scalar
/// part first. Degenerate cases: angle 0 reports axis (1, 0, 0); angle pi
/// reports the normalized vector part with the canonical sign.
inline AxisAngle quat_to_axis_angle(const UnitQuaternion& q) {
  const Quatd c = canonicalized(q).value();
  const Vec3 u = c.vec();
  const double s = norm(u);
  if (s == 0.0) return {Vec3::unit_x(), 0.0};
  return {(1.0 / s) * u, 2.0 * std::atan2(s, c.w)};
}

/// Rodrigues' rotation formula, evaluated directly (no quaternion product):
///
///   v' = cos(theta) v + sin(theta) n x v + (1 - cos(theta)) (n . v) n
///
/// Agrees with conjugate_action(axis_angle_to_quat(aa), v).
inline Vec3 rodrigues_rotate(const AxisAngle& aa, const Vec3& v,
                             const Tolerance& tol = kDefaultTolerance) {
  if (!tol.near(norm(aa.axis), 1.0)) throw BadAxisError();
  const double c = std::cos(aa.angle_rad);
  const double s = std::sin(aa.angle_rad);
  const Vec3& n = aa.axis;
  return c * v + s * cross(n, v) + ((1.0 - c) * dot(n, v)) * n;
}

/// First-order rotation v + 2a (u x v), valid when q = (a, u) is near the
/// identity. Differs from the exact conjugation by O(|u|^2)|v|. Requires
/// |u| <= 0.1 (NotSmallError otherwise).
inline Vec3 infinitesimal_rotate(const UnitQuaternion& q, const Vec3& v) {
  const Vec3 u = q.value().vec();
  if (norm(u) > 0.1) throw NotSmallError();
  return v + (2.0 * q.value().w) * cross(u, v);
}

/// Four-dimensional rotation by simultaneous left and right multiplication:
/// v -> ql v qr. Preserves norm_sq(v); with qr = ql^-1 and imaginary v it
/// reduces to the 3D conjugation action.
inline Quatd so4_action(const UnitQuaternion& ql, const UnitQuaternion& qr, const Quatd& v) {
  return ql.value() * v * qr.value();
}

/// Matrix of so4_action on the basis (e, i, j, k): column c holds the image
/// of the c-th basis quaternion. Orthogonal with det +1, and
/// M(-ql, -qr) = M(ql, qr): the pair action covers SO(4) 2:1.
inline Mat4d so4_matrix(const UnitQuaternion& ql, const UnitQuaternion& qr) {
  constexpr std::array<Quatd, 4> basis = {Quatd::identity(), Quatd::unit_i(), Quatd::unit_j(),
                                          Quatd::unit_k()};
  Mat4d m{};
  for (std::size_t c = 0; c < 4; ++c) {
    const Quatd image = so4_action(ql, qr, basis[c]);
    m(0, c) = image.w;
    m(1, c) = image.x;
    m(2, c) = image.y;
    m(3, c) = image.z;
  }
  return m;
}

/// Rotation composition: applying q2 then q1 is the product q1 * q2, so
/// rotation_matrix(compose(q1, q2)) = rotation_matrix(q1) *
/// rotation_matrix(q2). Renormalizes only when drift exceeds 1e-12.
inline UnitQuaternion compose(const UnitQuaternion& q1, const UnitQuaternion& q2) {
  return detail::contain_drift(q1.value() * q2.value());
}

/// Spherical linear interpolation along the great circle from q0 to q1,
/// with the shortest-path convention: q1 is negated first when
/// dot(q0, q1) < 0, so the interpolated rotation never swings the long way
/// around. t must lie in [0, 1] (BadParameterError). Angles below 1e-6 rad
/// fall back to normalized linear interpolation.
inline UnitQuaternion slerp(const UnitQuaternion& q0, const UnitQuaternion& q1, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw BadParameterError("slerp parameter must be in [0, 1]");
  const Quatd a = q0.value();
  Quatd b = q1.value();
  double cos_omega = dot(a, b);
  if (cos_omega < 0.0) {
    b = -b;
    cos_omega = -cos_omega;
  }
  const double omega = std::acos(std::min(cos_omega, 1.0));
  if (omega < 1e-6) {
    return UnitQuaternion::normalized(a + t * (b - a));
  }
  const double inv_sin = 1.0 / std::sin(omega);
  const Quatd r =
      (std::sin((1.0 - t) * omega) * inv_sin) * a + (std::sin(t * omega) * inv_sin) * b;
  return detail::contain_drift(r);
}

}  // namespace hamilton
