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

// Interpolates between two orientations and prints the corners of a unit
// cube at each step. Pipe the CSV into a plotting tool to watch the tumble.

#include <iostream>
#include <numbers>
#include <vector>

#include "hamilton/hamilton.hpp"

int main() {
  using namespace hamilton;

  const UnitQuaternion start = UnitQuaternion::identity();
  const UnitQuaternion finish = compose(
      axis_angle_to_quat({Vec3::unit_z(), std::numbers::pi / 2}),
      axis_angle_to_quat({Vec3::unit_x(), std::numbers::pi / 3}));

  std::vector<Vec3> corners;
  for (const double x : {-0.5, 0.5})
    for (const double y : {-0.5, 0.5})
      for (const double z : {-0.5, 0.5}) corners.push_back({x, y, z});

  std::cout << "step,corner,x,y,z\n";
  const int steps = 8;
  for (int s = 0; s <= steps; ++s) {
    const UnitQuaternion q = slerp(start, finish, static_cast<double>(s) / steps);
    for (std::size_t c = 0; c < corners.size(); ++c) {
      const Vec3 p = conjugate_action(q, corners[c]);
      std::cout << s << "," << c << "," << to_csv(p, 6) << "\n";
    }
  }
  return 0;
}
