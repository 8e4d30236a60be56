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
#include <cstdint>
#include <ostream>
#include <string_view>

#include "hamilton/quaternion.hpp"

namespace hamilton {

/// Element of the order-eight quaternion group {+-1, +-i, +-j, +-k}, the
/// discrete subgroup of unit quaternions generated by the basis units.
/// Non-abelian; its center is {+1, -1}.
class GroupElement {
 public:
  constexpr GroupElement() = default;

  static constexpr GroupElement plus_e() { return GroupElement(0, false); }
  static constexpr GroupElement plus_i() { return GroupElement(1, false); }
  static constexpr GroupElement plus_j() { return GroupElement(2, false); }
  static constexpr GroupElement plus_k() { return GroupElement(3, false); }
  static constexpr GroupElement minus_e() { return GroupElement(0, true); }
  static constexpr GroupElement minus_i() { return GroupElement(1, true); }
  static constexpr GroupElement minus_j() { return GroupElement(2, true); }
  static constexpr GroupElement minus_k() { return GroupElement(3, true); }

  /// Basis slot: 0 = e, 1 = i, 2 = j, 3 = k.
  constexpr int basis_index() const { return code_ & 3; }
  constexpr bool is_negative() const { return (code_ & 4) != 0; }

  constexpr GroupElement negated() const { return GroupElement(basis_index(), !is_negative()); }

  friend constexpr bool operator==(GroupElement, GroupElement) = default;

  /// Group product, consistent with the Hamilton product of the embedded
  /// signed basis quaternions (i*j = k, j*i = -k, i*i = -e, ...).
  friend constexpr GroupElement operator*(GroupElement g, GroupElement h) {
    const int a = g.basis_index();
    const int b = h.basis_index();
    const bool neg = g.is_negative() != h.is_negative();
    return GroupElement(kIndex[a][b], neg != (kSign[a][b] < 0));
  }

  /// The corresponding signed basis quaternion.
  template <RingScalar T = double>
  constexpr Quaternion<T> embed() const {
    Quaternion<T> q{};
    const T s = is_negative() ? T(-1) : T(1);
    switch (basis_index()) {
      case 0: q.w = s; break;
      case 1: q.x = s; break;
      case 2: q.y = s; break;
      default: q.z = s; break;
    }
    return q;
  }

  constexpr std::string_view name() const {
    constexpr std::array<std::string_view, 8> names = {"+e", "+i", "+j", "+k",
                                                       "-e", "-i", "-j", "-k"};
    return names[code_];
  }

  friend std::ostream& operator<<(std::ostream& os, GroupElement g) { return os << g.name(); }

 private:
  constexpr GroupElement(int index, bool negative)
      : code_(static_cast<std::uint8_t>((index & 3) | (negative ? 4 : 0))) {}

  // Basis products e_a e_b = kSign[a][b] * e_{kIndex[a][b]} in the order
  // (e, i, j, k).
  static constexpr std::array<std::array<std::uint8_t, 4>, 4> kIndex = {{
      {0, 1, 2, 3},
      {1, 0, 3, 2},
      {2, 3, 0, 1},
      {3, 2, 1, 0},
  }};
  static constexpr std::array<std::array<std::int8_t, 4>, 4> kSign = {{
      {+1, +1, +1, +1},
      {+1, -1, +1, -1},
      {+1, -1, -1, +1},
      {+1, +1, -1, -1},
  }};

  std::uint8_t code_ = 0;
};

/// All eight elements, in a fixed enumeration order.
inline constexpr std::array<GroupElement, 8> kGroupElements = {
    GroupElement::plus_e(),  GroupElement::plus_i(),  GroupElement::plus_j(),
    GroupElement::plus_k(),  GroupElement::minus_e(), GroupElement::minus_i(),
    GroupElement::minus_j(), GroupElement::minus_k()};

/// Left multiplication of an arbitrary quaternion by a group element. For
/// g = +i this is (w, x, y, z) -> (-x, w, -z, y), a simultaneous quarter
/// turn in the e-i and j-k planes.
template <RingScalar T>
constexpr Quaternion<T> group_left_action(GroupElement g, const Quaternion<T>& q) {
  return g.embed<T>() * q;
}

}  // namespace hamilton
