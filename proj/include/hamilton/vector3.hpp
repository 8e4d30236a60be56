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
#include <ostream>
#include <type_traits>

namespace hamilton {

template <typename T>
concept RingScalar = std::is_arithmetic_v<T> && !std::is_same_v<T, bool>;

/// 3-vector over a scalar ring. Doubles carry geometry; integer
/// instantiations feed the exact identity checks.
template <RingScalar T>
struct Vector3 {
  T x{};
  T y{};
  T z{};

  static constexpr Vector3 zero() { return {}; }
  static constexpr Vector3 unit_x() { return {T(1), T(0), T(0)}; }
  static constexpr Vector3 unit_y() { return {T(0), T(1), T(0)}; }
  static constexpr Vector3 unit_z() { return {T(0), T(0), T(1)}; }

  friend constexpr bool operator==(const Vector3&, const Vector3&) = default;

  constexpr Vector3 operator-() const { return {-x, -y, -z}; }

  friend constexpr Vector3 operator+(const Vector3& a, const Vector3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend constexpr Vector3 operator-(const Vector3& a, const Vector3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend constexpr Vector3 operator*(T s, const Vector3& v) { return {s * v.x, s * v.y, s * v.z}; }
  friend constexpr Vector3 operator*(const Vector3& v, T s) { return s * v; }

  friend std::ostream& operator<<(std::ostream& os, const Vector3& v) {
    return os << "(" << v.x << ", " << v.y << ", " << v.z << ")";
  }
};

template <RingScalar T>
constexpr T dot(const Vector3<T>& a, const Vector3<T>& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

template <RingScalar T>
constexpr Vector3<T> cross(const Vector3<T>& a, const Vector3<T>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

template <RingScalar T>
constexpr T norm_sq(const Vector3<T>& v) {
  return dot(v, v);
}

template <std::floating_point T>
T norm(const Vector3<T>& v) {
  return std::sqrt(norm_sq(v));
}

/// Unit vector along v. Returns zero for the zero vector; callers that need
/// an error on zero input check the norm first.
template <std::floating_point T>
Vector3<T> normalized(const Vector3<T>& v) {
  const T n = norm(v);
  if (n == T(0)) return v;
  return {v.x / n, v.y / n, v.z / n};
}

template <std::floating_point T>
bool is_finite(const Vector3<T>& v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

using Vec3 = Vector3<double>;

}  // namespace hamilton
