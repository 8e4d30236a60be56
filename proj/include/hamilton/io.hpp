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
#include <cstdio>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "hamilton/errors.hpp"
#include "hamilton/matrix.hpp"
#include "hamilton/quaternion.hpp"
#include "hamilton/rotation.hpp"
#include "hamilton/vector3.hpp"

namespace hamilton {

/// Decimal form of x with the given significant digits. The default 17 is
/// the smallest count that round-trips every IEEE double exactly.
inline std::string format_real(double x, int digits = 17) {
  if (digits < 1) digits = 1;
  if (digits > 17) digits = 17;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  return buf;
}

namespace detail {

template <typename It>
std::string join_reals(It first, It last, const char* sep, int digits) {
  std::string out;
  for (It it = first; it != last; ++it) {
    if (it != first) out += sep;
    out += format_real(*it, digits);
  }
  return out;
}

}  // namespace detail

// CSV forms: flat comma-separated decimals, no brackets.

inline std::string to_csv(const Quatd& q, int digits = 17) {
  const std::array<double, 4> c{q.w, q.x, q.y, q.z};
  return detail::join_reals(c.begin(), c.end(), ",", digits);
}

inline std::string to_csv(const Vec3& v, int digits = 17) {
  const std::array<double, 3> c{v.x, v.y, v.z};
  return detail::join_reals(c.begin(), c.end(), ",", digits);
}

// JSON forms. Quaternions serialize as the 4-array [scalar, i, j, k];
// 3x3 matrices as the 9-array of rows; complex 2x2 matrices as a 2x2 array
// of [re, im] pairs.

inline std::string to_json(const Quatd& q, int digits = 17) {
  const std::array<double, 4> c{q.w, q.x, q.y, q.z};
  return "[" + detail::join_reals(c.begin(), c.end(), ", ", digits) + "]";
}

inline std::string to_json(const Vec3& v, int digits = 17) {
  const std::array<double, 3> c{v.x, v.y, v.z};
  return "[" + detail::join_reals(c.begin(), c.end(), ", ", digits) + "]";
}

inline std::string to_json(const AxisAngle& aa, int digits = 17) {
  return "{\"axis\": " + to_json(aa.axis, digits) +
         ", \"angle_rad\": " + format_real(aa.angle_rad, digits) + "}";
}

inline std::string to_json(const Mat3d& m, int digits = 17) {
  return "[" + detail::join_reals(m.m.begin(), m.m.end(), ", ", digits) + "]";
}

inline std::string to_json(const ComplexMat2& m, int digits = 17) {
  std::string out = "[";
  for (std::size_t r = 0; r < 2; ++r) {
    if (r) out += ", ";
    out += "[";
    for (std::size_t c = 0; c < 2; ++c) {
      if (c) out += ", ";
      out += "[" + format_real(m(r, c).real(), digits) + ", " +
             format_real(m(r, c).imag(), digits) + "]";
    }
    out += "]";
  }
  return out + "]";
}

/// Point cloud as CSV: `# key=value ...` metadata comments, then a header
/// row naming the coordinates, then one row per point.
template <std::size_t N>
std::string point_cloud_csv(const std::vector<std::array<double, N>>& points,
                            const std::vector<std::string>& metadata,
                            const std::array<const char*, N>& names, int digits = 17) {
  std::string out;
  for (const auto& line : metadata) out += "# " + line + "\n";
  for (std::size_t i = 0; i < N; ++i) {
    if (i) out += ",";
    out += names[i];
  }
  out += "\n";
  for (const auto& p : points) {
    out += detail::join_reals(p.begin(), p.end(), ",", digits);
    out += "\n";
  }
  return out;
}

/// Point cloud as a JSON array of coordinate arrays.
template <std::size_t N>
std::string point_cloud_json(const std::vector<std::array<double, N>>& points,
                             int digits = 17) {
  std::string out = "[";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out += ", ";
    out += "[" + detail::join_reals(points[i].begin(), points[i].end(), ", ", digits) + "]";
  }
  return out + "]";
}

/// Parses a comma-separated list of decimals. Throws BadParameterError on
/// anything but a full match (empty fields, trailing junk, no digits).
inline std::vector<double> parse_reals(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string field(text.substr(start, comma == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : comma - start));
    const char* begin = field.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) throw BadParameterError("expected a decimal number, got '" + field + "'");
    while (*end == ' ' || *end == '\t') ++end;
    if (*end != '\0') throw BadParameterError("trailing characters after number in '" + field + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace hamilton
