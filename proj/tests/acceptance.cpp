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

// Acceptance gate: every release-blocking property in one binary, one line
// of output per criterion, nonzero exit if any fails. Usage:
//
//   acceptance <path-to-cli-binary>
//
// Each criterion pins its own trial count, tolerance and wall-clock budget;
// nothing here is configurable, by design.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hamilton/hamilton.hpp"
#include "oracle.hpp"

using namespace hamilton;

namespace {

constexpr double kPi = std::numbers::pi;

int g_failures = 0;
std::string g_cli;

void criterion(int num, const std::string& label, double limit_seconds,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = elapsed <= limit_seconds;
  const bool pass = ok && in_time;
  if (!pass) ++g_failures;
  char timing[96];
  std::snprintf(timing, sizeof(timing), "%.3fs of %.3fs", elapsed, limit_seconds);
  std::cout << (pass ? "PASS" : "FAIL") << " [" << (num < 10 ? " " : "") << num << "] " << label
            << " (" << timing << ")";
  if (!ok && !detail.empty()) std::cout << " -- " << detail;
  if (ok && !in_time) std::cout << " -- over time budget";
  std::cout << "\n";
}

struct CommandResult {
  int exit_code = -1;
  std::string out;
};

CommandResult run_command(const std::string& args) {
  const std::string full = "\"" + g_cli + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) return {};
  CommandResult r;
  char buf[4096];
  std::size_t k = 0;
  while ((k = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, k);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// Numeric rows of CSV output: everything except blank lines, # comments and
// the header row.
std::vector<std::vector<double>> data_rows(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.find_first_of("0123456789") == std::string::npos) continue;
    if (line.find_first_not_of("0123456789+-.eE, \t\r") != std::string::npos) continue;
    std::vector<double> row;
    std::size_t start = 0;
    bool good = true;
    while (start <= line.size()) {
      const std::size_t comma = line.find(',', start);
      const std::string field =
          line.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      char* end = nullptr;
      const double v = std::strtod(field.c_str(), &end);
      if (end == field.c_str()) {
        good = false;
        break;
      }
      row.push_back(v);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (good && !row.empty()) rows.push_back(row);
  }
  return rows;
}

bool all_16_basis_products(std::string& detail) {
  // Signs and result slots of e_a e_b in the order (e, i, j, k); the one
  // table everything else in the algebra follows from.
  constexpr int sign[4][4] = {{+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
  constexpr int slot[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const std::array<Quaternion<int>, 4> basis = {
      Quaternion<int>::identity(), Quaternion<int>::unit_i(), Quaternion<int>::unit_j(),
      Quaternion<int>::unit_k()};
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      Quaternion<int> want{};
      int* comps[4] = {&want.w, &want.x, &want.y, &want.z};
      *comps[slot[a][b]] = sign[a][b];
      if (!(basis[a] * basis[b] == want)) {
        detail = "basis product mismatch at (" + std::to_string(a) + "," + std::to_string(b) + ")";
        return false;
      }
    }
  }
  return true;
}

bool oracle_grid_equivalence(std::string& detail) {
  // Every pair from the integer grid {-2..2}^4 x {-2..2}^4: 390,625 pairs,
  // each checked exactly against the independent 16-term expansion.
  std::vector<Quaternion<int>> grid;
  grid.reserve(625);
  for (int w = -2; w <= 2; ++w)
    for (int x = -2; x <= 2; ++x)
      for (int y = -2; y <= 2; ++y)
        for (int z = -2; z <= 2; ++z) grid.emplace_back(w, x, y, z);
  long long checked = 0;
  for (const auto& a : grid) {
    for (const auto& b : grid) {
      if (!(a * b == oracle::mul(a, b))) {
        detail = "mismatch against expansion oracle";
        return false;
      }
      ++checked;
    }
  }
  if (checked != 390625) {
    detail = "expected 390625 pairs, checked " + std::to_string(checked);
    return false;
  }
  return true;
}

bool law_of_moduli_random(std::string& detail) {
  oracle::Rng rng(1001);
  double worst = 0.0;
  for (int t = 0; t < 100000; ++t) {
    const Quatd a = rng.quaternion();
    const Quatd b = rng.quaternion();
    const double rhs = norm(a) * norm(b);
    worst = std::max(worst, std::abs(norm(a * b) - rhs) / std::max(1.0, rhs));
  }
  if (worst > 1e-9) {
    detail = "worst relative error " + std::to_string(worst);
    return false;
  }
  return true;
}

bool four_square_grid(std::string& detail) {
  std::vector<Quaternion<int>> grid;
  grid.reserve(625);
  for (int w = -2; w <= 2; ++w)
    for (int x = -2; x <= 2; ++x)
      for (int y = -2; y <= 2; ++y)
        for (int z = -2; z <= 2; ++z) grid.emplace_back(w, x, y, z);
  for (const auto& a : grid) {
    for (const auto& b : grid) {
      const auto id = four_square_check(a, b);
      if (id.lhs != id.rhs) {
        detail = "sum of squares differed";
        return false;
      }
      const auto p = a * b;
      if (id.terms[0] != p.w || id.terms[1] != p.x || id.terms[2] != p.y || id.terms[3] != p.z) {
        detail = "bilinear terms differ from product components";
        return false;
      }
    }
  }
  return true;
}

bool matrix_rep_checks(std::string& detail) {
  // Multiplicativity, exactly, over all integer pairs drawn from a grid
  // small enough to stay exact in double matrix products.
  for (int w = -2; w <= 2; ++w)
    for (int x = -2; x <= 2; ++x)
      for (int y = -2; y <= 2; ++y)
        for (int z = -2; z <= 2; ++z) {
          const Quatd a(w, x, y, z);
          const Quatd b(z - 1, w + 1, y - x, x - 2);
          if (!(quat_to_matrix(a * b) == quat_to_matrix(a) * quat_to_matrix(b))) {
            detail = "representation not multiplicative on integer grid";
            return false;
          }
        }

  oracle::Rng rng(1002);
  double worst = 0.0;
  for (int t = 0; t < 100000; ++t) {
    const Quatd q = rng.quaternion();
    const double expected = norm_sq(q);
    worst = std::max(worst,
                     std::abs(det(quat_to_matrix(q)) - std::complex<double>(expected, 0.0)) /
                         std::max(1.0, expected));
  }
  if (worst > 1e-9) {
    detail = "det vs norm_sq worst relative error " + std::to_string(worst);
    return false;
  }
  return true;
}

bool rotation_action_checks(std::string& detail) {
  oracle::Rng rng(1003);
  double worst_hom = 0.0, worst_cover = 0.0, worst_orth = 0.0, worst_det = 0.0;
  for (int t = 0; t < 10000; ++t) {
    const UnitQuaternion q1{rng.unit_quaternion()};
    const UnitQuaternion q2{rng.unit_quaternion()};
    worst_hom = std::max(worst_hom, max_abs_diff(rotation_matrix(compose(q1, q2)),
                                                 rotation_matrix(q1) * rotation_matrix(q2)));
    worst_cover = std::max(worst_cover, max_abs_diff(rotation_matrix(q1), rotation_matrix(-q1)));
    const Mat3d r = rotation_matrix(q1);
    worst_orth = std::max(worst_orth, max_abs_diff(transpose(r) * r, Mat3d::identity()));
    worst_det = std::max(worst_det, std::abs(det(r) - 1.0));
  }
  if (worst_hom > 1e-9) {
    detail = "homomorphism error " + std::to_string(worst_hom);
    return false;
  }
  if (worst_cover > 1e-12) {
    detail = "double-cover error " + std::to_string(worst_cover);
    return false;
  }
  if (worst_orth > 1e-9 || worst_det > 1e-9) {
    detail = "orthogonality or determinant drift";
    return false;
  }
  return true;
}

bool rodrigues_equivalence(std::string& detail) {
  oracle::Rng rng(1004);
  double worst = 0.0;
  for (int t = 0; t < 100000; ++t) {
    const AxisAngle aa{rng.unit_vector(), rng.uniform(-2 * kPi, 2 * kPi)};
    const Vec3 v = rng.vector();
    const Vec3 d = conjugate_action(axis_angle_to_quat(aa), v) - rodrigues_rotate(aa, v);
    worst = std::max(worst, norm(d) / std::max(1.0, norm(v)));
  }
  if (worst > 1e-9) {
    detail = "worst relative error " + std::to_string(worst);
    return false;
  }
  return true;
}

bool infinitesimal_quadratic(std::string& detail) {
  oracle::Rng rng(1005);
  for (int t = 0; t < 1000; ++t) {
    Vec3 n = rng.unit_vector();
    Vec3 v = rng.unit_vector();
    // Near-parallel pairs make both errors vanish together; skip the
    // degenerate direction rather than divide noise by noise.
    while (norm(cross(n, v)) < 1e-3) v = rng.unit_vector();
    auto err = [&](double eps) {
      const UnitQuaternion q{Quatd(std::sqrt(1.0 - eps * eps), eps * n)};
      return norm(infinitesimal_rotate(q, v) - conjugate_action(q, v));
    };
    const double ratio = err(1e-3) / err(1e-2);
    if (!(ratio >= 0.005 && ratio <= 0.02)) {
      detail = "quadratic decay ratio " + std::to_string(ratio) + " outside [0.005, 0.02]";
      return false;
    }
  }
  return true;
}

bool so4_checks(std::string& detail) {
  oracle::Rng rng(1006);
  double worst_norm = 0.0, worst_kernel = 0.0, worst_reduction = 0.0;
  for (int t = 0; t < 10000; ++t) {
    const UnitQuaternion ql{rng.unit_quaternion()};
    const UnitQuaternion qr{rng.unit_quaternion()};
    const Quatd v = rng.quaternion();
    worst_norm = std::max(worst_norm, std::abs(norm(so4_action(ql, qr, v)) - norm(v)) /
                                          std::max(1.0, norm(v)));
    worst_kernel = std::max(worst_kernel, max_abs_diff(so4_matrix(-ql, -qr), so4_matrix(ql, qr)));
    const Vec3 v3 = rng.vector();
    const Quatd reduced = so4_action(ql, ql.inverse(), embed(v3));
    const Vec3 expected = conjugate_action(ql, v3);
    const double scale = std::max(1.0, norm(v3));
    worst_reduction = std::max(worst_reduction, norm(reduced - embed(expected)) / scale);
  }
  if (worst_norm > 1e-9) {
    detail = "norm preservation error " + std::to_string(worst_norm);
    return false;
  }
  if (worst_kernel > 1e-12) {
    detail = "joint sign flip changed the matrix by " + std::to_string(worst_kernel);
    return false;
  }
  if (worst_reduction > 1e-9) {
    detail = "restriction to 3-space error " + std::to_string(worst_reduction);
    return false;
  }
  return true;
}

bool group_table_checks(std::string& detail) {
  for (const auto a : kGroupElements) {
    bool found_inverse = false;
    for (const auto b : kGroupElements) {
      if (!(a.embed<int>() * b.embed<int>() == (a * b).embed<int>())) {
        detail = "table disagrees with quaternion product";
        return false;
      }
      if (a * b == GroupElement::plus_e() && b * a == GroupElement::plus_e()) found_inverse = true;
      for (const auto c : kGroupElements) {
        if (!((a * b) * c == a * (b * c))) {
          detail = "associativity violated";
          return false;
        }
      }
    }
    if (!found_inverse) {
      detail = std::string("no inverse for ") + std::string(a.name());
      return false;
    }
    bool central = true;
    for (const auto b : kGroupElements) {
      if (!(a * b == b * a)) central = false;
    }
    if (central != (a.basis_index() == 0)) {
      detail = "center is not {+e, -e}";
      return false;
    }
  }
  // i has order exactly 4.
  const auto i = GroupElement::plus_i();
  auto p = i;
  int order = 1;
  while (!(p == GroupElement::plus_e()) && order <= 8) {
    p = p * i;
    ++order;
  }
  if (order != 4) {
    detail = "order of i is " + std::to_string(order);
    return false;
  }
  return true;
}

bool hopf_invariance_checks(std::string& detail) {
  oracle::Rng rng(1007);
  double worst_c = 0.0, worst_q = 0.0;
  for (int t = 0; t < 10000; ++t) {
    // Complex: unit lambda moves points along the fiber, not across it.
    const Quatd s3 = rng.unit_quaternion();
    const SpherePoint<3> p{{s3.w, s3.x, s3.y, s3.z}};
    const auto [z1, z2] = to_complex_pair(p);
    const std::complex<double> lambda = std::polar(1.0, rng.uniform(-kPi, kPi));
    worst_c = std::max(worst_c, distance(hopf_complex(from_complex_pair(lambda * z1, lambda * z2)),
                                         hopf_complex(p)));

    // Quaternionic: unit w acting on the right.
    const Quatd q1 = 0.5 * rng.unit_quaternion();
    Quatd q2 = rng.unit_quaternion();
    q2 = std::sqrt(1.0 - norm_sq(q1)) * q2;
    const SpherePoint<7> total = from_quat_pair(q1, q2);
    const Quatd w = rng.unit_quaternion();
    worst_q = std::max(worst_q, distance(hopf_quaternionic(from_quat_pair(q1 * w, q2 * w)),
                                         hopf_quaternionic(total)));

    // Real: antipodal identification is exact and the fiber has exactly two
    // points.
    const double ang = rng.uniform(-kPi, kPi);
    const Circle c{{std::cos(ang), std::sin(ang)}};
    const Circle anti{{-c.x[0], -c.x[1]}};
    if (!(hopf_real(c) == hopf_real(anti))) {
      detail = "antipodal images differ";
      return false;
    }
    const auto fiber = fiber_sample(hopf_real(c), 5);
    if (fiber.size() != 2) {
      detail = "real fiber size " + std::to_string(fiber.size());
      return false;
    }
    if (!(fiber[1] == Circle{{-fiber[0].x[0], -fiber[0].x[1]}})) {
      detail = "real fiber points are not antipodal";
      return false;
    }
  }
  if (worst_c > 1e-9) {
    detail = "complex fiber invariance error " + std::to_string(worst_c);
    return false;
  }
  if (worst_q > 1e-9) {
    detail = "quaternionic fiber invariance error " + std::to_string(worst_q);
    return false;
  }
  return true;
}

bool root_sphere_classifier(std::string& detail) {
  oracle::Rng rng(1008);
  int wrong = 0;
  for (int t = 0; t < 10000; ++t) {
    // Member: a point of the unit imaginary sphere.
    if (!squares_to_minus_one(Quatd(0, rng.unit_vector()))) ++wrong;

    // Non-member: perturb by at least 1e-3, either off the sphere or off
    // the imaginary subspace.
    const double delta = (rng.integer(0, 1) ? 1.0 : -1.0) * rng.uniform(1e-3, 0.3);
    if (rng.integer(0, 1)) {
      if (squares_to_minus_one(Quatd(0, (1.0 + delta) * rng.unit_vector()))) ++wrong;
    } else {
      if (squares_to_minus_one(Quatd(delta, rng.unit_vector()))) ++wrong;
    }
  }
  if (wrong != 0) {
    detail = std::to_string(wrong) + " misclassifications";
    return false;
  }
  return true;
}

bool cli_end_to_end(std::string& detail) {
  // A quarter turn about z carries x to y.
  const auto r1 = run_command("rotate --axis 0,0,1 --angle 1.5707963 --vec 1,0,0");
  if (r1.exit_code != 0) {
    detail = "rotate exited " + std::to_string(r1.exit_code);
    return false;
  }
  const auto rows1 = data_rows(r1.out);
  if (rows1.size() != 1 || rows1[0].size() != 3) {
    detail = "rotate: expected one 3-column data row";
    return false;
  }
  const double dx = rows1[0][0] - 0.0, dy = rows1[0][1] - 1.0, dz = rows1[0][2] - 0.0;
  if (std::sqrt(dx * dx + dy * dy + dz * dz) > 1e-6) {
    detail = "rotate: image not within 1e-6 of (0, 1, 0)";
    return false;
  }

  // The alternative method gives the same numbers.
  const auto r2 = run_command("rotate --axis 0,0,1 --angle 1.5707963 --vec 1,0,0 --method rodrigues");
  const auto rows2 = data_rows(r2.out);
  if (r2.exit_code != 0 || rows2.size() != 1 || rows2[0].size() != 3) {
    detail = "rodrigues variant malformed";
    return false;
  }
  double method_gap = 0.0;
  for (int c = 0; c < 3; ++c) method_gap = std::max(method_gap, std::abs(rows1[0][c] - rows2[0][c]));
  if (method_gap > 1e-9) {
    detail = "methods disagree by " + std::to_string(method_gap);
    return false;
  }

  // A zero axis is a domain error.
  const auto r3 = run_command("rotate --axis 0,0,0 --angle 1 --vec 1,0,0");
  if (r3.exit_code != 3) {
    detail = "zero axis exited " + std::to_string(r3.exit_code) + ", want 3";
    return false;
  }

  // The real fiber over (1, 0) is the antipodal pair.
  const auto r4 = run_command("hopf real --base 1,0");
  const auto rows4 = data_rows(r4.out);
  if (r4.exit_code != 0 || rows4.size() != 2) {
    detail = "hopf real: expected two data rows";
    return false;
  }
  const bool first_plus = std::abs(rows4[0][0] - 1.0) < 1e-12;
  const auto& plus = first_plus ? rows4[0] : rows4[1];
  const auto& minus = first_plus ? rows4[1] : rows4[0];
  if (std::abs(plus[0] - 1.0) > 1e-12 || std::abs(plus[1]) > 1e-12 ||
      std::abs(minus[0] + 1.0) > 1e-12 || std::abs(minus[1]) > 1e-12) {
    detail = "hopf real rows are not (1,0) and (-1,0)";
    return false;
  }

  // The identity checker agrees and reports PASS.
  const auto r5 = run_command("check four-square --trials 1000 --seed 7");
  if (r5.exit_code != 0 || r5.out.find("PASS") == std::string::npos) {
    detail = "check four-square did not PASS (exit " + std::to_string(r5.exit_code) + ")";
    return false;
  }
  return true;
}

bool bench_report(std::string& detail) {
  const auto r = run_command("bench -n 1000000 -r 2");
  if (r.exit_code != 0) {
    detail = "bench exited " + std::to_string(r.exit_code);
    return false;
  }
  // Expect one data row per method with five comma-separated fields.
  int method_rows = 0;
  std::istringstream in(r.out);
  std::string line;
  bool agreement_pass = false;
  while (std::getline(in, line)) {
    if (line.rfind("quat,", 0) == 0 || line.rfind("matrix,", 0) == 0 ||
        line.rfind("rodrigues,", 0) == 0) {
      int commas = 0;
      for (char ch : line) commas += (ch == ',');
      if (commas != 4) {
        detail = "malformed method row: " + line;
        return false;
      }
      // total_s and ns_per_op parse as positive numbers.
      const auto first = line.find(',');
      const auto second = line.find(',', first + 1);
      const auto third = line.find(',', second + 1);
      const double total_s = std::atof(line.substr(second + 1, third - second - 1).c_str());
      if (!(total_s > 0.0)) {
        detail = "non-positive time in: " + line;
        return false;
      }
      ++method_rows;
    }
    if (line.rfind("agreement: PASS", 0) == 0) agreement_pass = true;
  }
  if (method_rows != 3) {
    detail = "expected 3 method rows, found " + std::to_string(method_rows);
    return false;
  }
  if (!agreement_pass) {
    detail = "agreement line missing or FAIL";
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-cli-binary>\n";
    return 2;
  }
  g_cli = argv[1];

  criterion(1, "basis product table, exact integer arithmetic", 0.001, all_16_basis_products);
  criterion(2, "product equals 16-term expansion on 390625 integer pairs", 10.0,
            oracle_grid_equivalence);
  criterion(3, "law of moduli, 1e5 random pairs within 1e-9", 1.0, law_of_moduli_random);
  criterion(4, "four-square identity exact on 390625 integer pairs", 10.0, four_square_grid);
  criterion(5, "2x2 complex representation: multiplicative, det = squared norm", 2.0,
            matrix_rep_checks);
  criterion(6, "rotation action: homomorphism, double cover, orthogonality", 2.0,
            rotation_action_checks);
  criterion(7, "rodrigues formula equals conjugation, 1e5 trials within 1e-9", 2.0,
            rodrigues_equivalence);
  criterion(8, "linearized rotation error decays quadratically", 2.0, infinitesimal_quadratic);
  criterion(9, "pair action on 4-space: isometry, kernel, 3-space reduction", 2.0, so4_checks);
  criterion(10, "group of signed units: table, center, order of i", 0.001, group_table_checks);
  criterion(11, "fiber invariance of all three bundle maps", 2.0, hopf_invariance_checks);
  criterion(12, "root-sphere classifier: 2e4 points, zero misclassifications", 2.0,
            root_sphere_classifier);
  criterion(13, "command line end to end: rotate, hopf, check", 5.0, cli_end_to_end);
  criterion(14, "benchmark report well formed with agreeing methods", 30.0, bench_report);

  if (g_failures != 0) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 14 criteria passed\n";
  return 0;
}
