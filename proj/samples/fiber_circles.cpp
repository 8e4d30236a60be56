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

// Fibers over a ring of base points on the 2-sphere, pushed down to 3-space
// by stereographic projection. Each fiber becomes a circle and the circles
// are pairwise linked; plot ring,x,y,z to see the nested tori.

#include <cmath>
#include <iostream>
#include <numbers>

#include "hamilton/hamilton.hpp"

int main() {
  using namespace hamilton;
  constexpr double pi = std::numbers::pi;

  std::cout << "ring,x,y,z\n";
  const int rings = 6;
  const int samples = 64;
  for (int r = 0; r < rings; ++r) {
    // Base points on a circle of constant latitude.
    const double lat = -0.8 + 1.6 * r / (rings - 1);
    const double lon = 2.0 * pi * r / rings;
    const double cl = std::sqrt(1.0 - lat * lat);
    const SpherePoint<2> base{{cl * std::cos(lon), cl * std::sin(lon), lat}};
    for (const auto& f : fiber_sample(base, samples)) {
      const auto p = stereographic_project(f);
      std::cout << r << "," << format_real(p[0], 6) << "," << format_real(p[1], 6) << ","
                << format_real(p[2], 6) << "\n";
    }
  }
  return 0;
}
