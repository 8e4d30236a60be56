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

#include <cmath>
#include <numbers>
#include <ostream>
#include <type_traits>

#include "hamilton/errors.hpp"
#include "hamilton/tolerance.hpp"
#include "hamilton/vector3.hpp"

namespace hamilton {

/// Quaternion over a scalar ring: q = w + x*i + y*j + z*k with
/// i^2 = j^2 = k^2 = ijk = -1.
///
/// Component order is (scalar, i, j, k) everywhere: constructors, storage
/// and serialization. `w` is the scalar ("real") part, (x, y, z) the vector
/// ("imaginary") part.
///
/// The type is an immutable value; every operation below is a pure function,
/// so quaternions are safe to share across threads. Instantiations over
/// integer types give exact arithmetic for the classical identity checks;
/// `Quatd` (double) is the workhorse everywhere else.
template <RingScalar T>
struct Quaternion {
  T w{};  ///< scalar part
  T x{};  ///< coefficient of i
  T y{};  ///< coefficient of j
  T z{};  ///< coefficient of k

  constexpr Quaternion() = default;
  constexpr Quaternion(T w_, T x_, T y_, T z_) : w(w_), x(x_), y(y_), z(z_) {}
  constexpr Quaternion(T scalar, const Vector3<T>& vec) : w(scalar), x(vec.x), y(vec.y), z(vec.z) {}

  static constexpr Quaternion zero() { return {}; }
  static constexpr Quaternion identity() { return {T(1), T(0), T(0), T(0)}; }
  static constexpr Quaternion unit_i() { return {T(0), T(1), T(0), T(0)}; }
  static constexpr Quaternion unit_j() { return {T(0), T(0), T(1), T(0)}; }
  static constexpr Quaternion unit_k() { return {T(0), T(0), T(0), T(1)}; }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

  friend constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend constexpr Quaternion operator*(T s, const Quaternion& q) {
    return {s * q.w, s * q.x, s * q.y, s * q.z};
  }
  friend constexpr Quaternion operator*(const Quaternion& q, T s) { return s * q; }

  /// Hamilton product. In scalar/vector form, with q = (a, u) and
  /// q' = (a', u'):
  ///
  ///   q q' = (a a' - u.u',  a u' + a' u + u x u')
  ///
  /// Non-commutative: the cross product term flips sign under exchange.
  friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    const Vector3<T> u = a.vec();
    const Vector3<T> v = b.vec();
    return {a.w * b.w - dot(u, v), a.w * v + b.w * u + cross(u, v)};
  }

  friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << "(" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ")";
  }

  /// Vector part as a 3-vector.
  constexpr Vector3<T> vec() const { return {x, y, z}; }
};

using Quatd = Quaternion<double>;

template <RingScalar T>
constexpr Quaternion<T> scalar_part(const Quaternion<T>& q) {
  return {q.w, T(0), T(0), T(0)};
}

template <RingScalar T>
constexpr Quaternion<T> vector_part(const Quaternion<T>& q) {
  return {T(0), q.x, q.y, q.z};
}

/// Embeds a 3-vector as a purely imaginary quaternion (0, v).
template <RingScalar T>
constexpr Quaternion<T> embed(const Vector3<T>& v) {
  return {T(0), v};
}

/// conj(q) = (w, -x, -y, -z). Anti-automorphism: conj(ab) = conj(b) conj(a).
template <RingScalar T>
constexpr Quaternion<T> conjugate(const Quaternion<T>& q) {
  return {q.w, -q.x, -q.y, -q.z};
}

/// Squared Euclidean norm w^2 + x^2 + y^2 + z^2 = Re(q conj(q)).
/// Multiplicative (law of moduli): norm_sq(ab) = norm_sq(a) norm_sq(b).
template <RingScalar T>
constexpr T norm_sq(const Quaternion<T>& q) {
  return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

template <std::floating_point T>
T norm(const Quaternion<T>& q) {
  return std::sqrt(norm_sq(q));
}

/// Euclidean inner product <a, b> = Re(a conj(b)); recovers norm_sq on the
/// diagonal.
template <RingScalar T>
constexpr T dot(const Quaternion<T>& a, const Quaternion<T>& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

/// The bilinear form Re(ab) = a.w b.w - u.u', of signature (+,-,-,-).
/// Equals the scalar component of the product ab.
template <RingScalar T>
constexpr T lorentzian_dot(const Quaternion<T>& a, const Quaternion<T>& b) {
  return a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z;
}

/// Two-sided reciprocal conj(q) / norm_sq(q).
/// Throws ZeroQuaternionError for the zero quaternion.
template <std::floating_point T>
Quaternion<T> inverse(const Quaternion<T>& q) {
  const T n2 = norm_sq(q);
  if (n2 == T(0)) throw ZeroQuaternionError();
  return (T(1) / n2) * conjugate(q);
}

/// True iff a and b commute, which holds exactly when their vector parts
/// are collinear: u x u' = 0. Equivalent to ab - ba = 0 since
/// ab - ba = (0, 2 u x u').
template <std::floating_point T>
bool commutes(const Quaternion<T>& a, const Quaternion<T>& b,
              const Tolerance& tol = kDefaultTolerance) {
  const Vector3<T> u = a.vec();
  const Vector3<T> v = b.vec();
  return tol.near_zero(norm(cross(u, v)), norm(u) * norm(v));
}

template <std::floating_point T>
bool is_finite(const Quaternion<T>& q) {
  return std::isfinite(q.w) && std::isfinite(q.x) && std::isfinite(q.y) && std::isfinite(q.z);
}

template <std::floating_point T>
bool approx_equal(const Quaternion<T>& a, const Quaternion<T>& b,
                  const Tolerance& tol = kDefaultTolerance) {
  return tol.near_zero(norm(a - b), std::max(norm(a), norm(b)));
}

/// Exponential of a purely imaginary quaternion w = (0, u):
///
///   exp(w) = cos(|u|) + sin(|u|) * u/|u|
///
/// Always lands on the unit sphere; this is the quaternionic Euler formula,
/// and feeding it (theta/2) * n_hat yields the rotation quaternion for angle
/// theta about axis n_hat. Throws NotImaginaryError when the scalar part is
/// not zero within tolerance.
template <std::floating_point T>
Quaternion<T> exp(const Quaternion<T>& q, const Tolerance& tol = kDefaultTolerance) {
  if (!tol.near_zero(static_cast<double>(q.w), static_cast<double>(norm(q)))) {
    throw NotImaginaryError();
  }
  const Vector3<T> u = q.vec();
  const T theta = norm(u);
  // sin(theta)/theta, via its series near zero.
  const T s = theta < T(1e-4) ? T(1) - theta * theta / T(6) : std::sin(theta) / theta;
  return {std::cos(theta), s * u};
}

/// Principal logarithm of a unit quaternion: the purely imaginary w with
/// exp(w) = q and |w| in [0, pi].
///
/// At q = -identity the axis is genuinely undefined; the canonical choice is
/// (0, pi, 0, 0). Throws NotUnitError when |q| != 1 within tolerance.
template <std::floating_point T>
Quaternion<T> log(const Quaternion<T>& q, const Tolerance& tol = kDefaultTolerance) {
  if (!tol.near(static_cast<double>(norm_sq(q)), 1.0)) throw NotUnitError();
  const Vector3<T> u = q.vec();
  const T s = norm(u);
  if (s == T(0)) {
    if (q.w > T(0)) return Quaternion<T>::zero();
    return {T(0), std::numbers::pi_v<T>, T(0), T(0)};
  }
  const T theta = std::atan2(s, q.w);  // in [0, pi]
  return {T(0), (theta / s) * u};
}

/// True iff q solves q^2 + 1 = 0, i.e. |q*q + identity| <= tolerance.
/// The solution set is exactly the unit sphere of imaginary quaternions.
template <std::floating_point T>
bool squares_to_minus_one(const Quaternion<T>& q, const Tolerance& tol = kDefaultTolerance) {
  const Quaternion<T> r = q * q + Quaternion<T>::identity();
  return tol.near_zero(static_cast<double>(norm(r)), static_cast<double>(norm_sq(q)));
}

}  // namespace hamilton
