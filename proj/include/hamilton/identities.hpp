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

#include "hamilton/quaternion.hpp"

namespace hamilton {

// The classical sum-of-squares identities behind |ab| = |a||b|. Both checks
// return the two sides separately so callers can assert exact equality over
// integer instantiations, where no rounding occurs at all.

template <RingScalar T>
struct TwoSquareIdentity {
  T lhs;  ///< (x^2 + y^2)(u^2 + v^2)
  T rhs;  ///< (xu - yv)^2 + (xv + yu)^2
};

/// Brahmagupta's two-square identity, the complex law of moduli.
template <RingScalar T>
constexpr TwoSquareIdentity<T> two_square_check(T x, T y, T u, T v) {
  const T lhs = (x * x + y * y) * (u * u + v * v);
  const T p = x * u - y * v;
  const T q = x * v + y * u;
  return {lhs, p * p + q * q};
}

template <RingScalar T>
struct FourSquareIdentity {
  T lhs;                    ///< norm_sq(a) * norm_sq(b)
  T rhs;                    ///< sum of the four squared bilinear terms
  std::array<T, 4> terms;   ///< the bilinear terms; equal the components of a*b
};

/// Euler's four-square identity, the quaternionic law of moduli. The four
/// bilinear terms are spelled out rather than taken from the product so the
/// identity is checked against an independent expression; that they coincide
/// with the components of a*b is itself a tested property.
template <RingScalar T>
constexpr FourSquareIdentity<T> four_square_check(const Quaternion<T>& a, const Quaternion<T>& b) {
  const T t0 = a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z;
  const T t1 = a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y;
  const T t2 = a.w * b.y + a.y * b.w + a.z * b.x - a.x * b.z;
  const T t3 = a.w * b.z + a.z * b.w + a.x * b.y - a.y * b.x;
  return {norm_sq(a) * norm_sq(b), t0 * t0 + t1 * t1 + t2 * t2 + t3 * t3, {t0, t1, t2, t3}};
}

}  // namespace hamilton
