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

#include <algorithm>
#include <cmath>

namespace hamilton {

/// Comparison context used by every approximate check in the library.
///
/// A single knob `eps` (default 1e-9) is applied relatively when a natural
/// scale exists and absolutely near zero: a residual x with scale s passes
/// when |x| <= eps * max(1, s). Pass a different Tolerance to any operation
/// that accepts one to tighten or loosen a specific call site.
struct Tolerance {
  double eps = 1e-9;

  [[nodiscard]] bool near_zero(double x, double scale = 1.0) const noexcept {
    return std::abs(x) <= eps * std::max(1.0, scale);
  }

  [[nodiscard]] bool near(double a, double b) const noexcept {
    return near_zero(a - b, std::max(std::abs(a), std::abs(b)));
  }
};

inline constexpr Tolerance kDefaultTolerance{};

/// Looser context for validating externally supplied data (CLI input,
/// points accumulated through upstream arithmetic).
inline constexpr Tolerance kInputTolerance{1e-6};

}  // namespace hamilton
