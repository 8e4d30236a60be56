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

// Command line front end. Exit codes: 0 success, 1 a checked property or
// agreement failed, 2 usage error, 3 domain error (mathematically invalid
// input).

#include <CLI11.hpp>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "hamilton/hamilton.hpp"

namespace {

using namespace hamilton;

constexpr int kExitPropertyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

// Bad command line input that CLI11's own validation cannot see (malformed
// numbers inside an option value, missing vectors, ...). Mapped to exit 2,
// while hamilton::Error keeps meaning "valid request, invalid mathematics"
// and maps to exit 3.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_fixed(const std::string& text, std::size_t count, const char* what) {
  std::vector<double> v;
  try {
    v = parse_reals(text);
  } catch (const BadParameterError& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
  if (v.size() != count) {
    throw UsageError(std::string(what) + ": expected " + std::to_string(count) +
                     " comma-separated values, got " + std::to_string(v.size()));
  }
  return v;
}

Vec3 parse_vec3(const std::string& text, const char* what) {
  const auto v = parse_fixed(text, 3, what);
  return {v[0], v[1], v[2]};
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot open output file: " + path);
  out << content;
}

// Accepts an axis of any nonzero length, normalizing with a note when it is
// visibly off the unit sphere. A zero axis is a domain error.
Vec3 required_unit_axis(Vec3 axis) {
  const double n = norm(axis);
  if (n == 0.0) throw BadAxisError("rotation axis must be nonzero");
  if (std::abs(n - 1.0) > 1e-6) {
    std::cerr << "note: axis normalized (given length " << format_real(n, 6) << ")\n";
  }
  return (1.0 / n) * axis;
}

// ---------------------------------------------------------------------------
// rotate

struct RotateArgs {
  std::string axis;
  double angle = 0.0;
  std::vector<std::string> vecs;
  std::string file;
  std::string method = "quat";
  std::string format = "csv";
  int digits = 17;
  std::string out;
};

int run_rotate(const RotateArgs& args) {
  const Vec3 axis = required_unit_axis(parse_vec3(args.axis, "--axis"));

  std::vector<Vec3> vectors;
  for (const auto& t : args.vecs) vectors.push_back(parse_vec3(t, "--vec"));
  if (!args.file.empty()) {
    std::ifstream in(args.file);
    if (!in) throw UsageError("cannot open input file: " + args.file);
    std::string line;
    while (std::getline(in, line)) {
      const auto begin = line.find_first_not_of(" \t\r");
      if (begin == std::string::npos) continue;
      const auto end = line.find_last_not_of(" \t\r");
      const std::string row = line.substr(begin, end - begin + 1);
      if (row.empty() || row[0] == '#' || row.find_first_of("0123456789") == std::string::npos) {
        continue;  // blank, comment or header row
      }
      vectors.push_back(parse_vec3(row, "--file row"));
    }
  }
  if (vectors.empty()) throw UsageError("no vectors given; use --vec or --file");

  const AxisAngle aa{axis, args.angle};
  std::vector<std::array<double, 3>> rotated;
  rotated.reserve(vectors.size());
  if (args.method == "quat") {
    const UnitQuaternion q = axis_angle_to_quat(aa);
    for (const auto& v : vectors) {
      const Vec3 r = conjugate_action(q, v);
      rotated.push_back({r.x, r.y, r.z});
    }
  } else {
    for (const auto& v : vectors) {
      const Vec3 r = rodrigues_rotate(aa, v);
      rotated.push_back({r.x, r.y, r.z});
    }
  }

  if (args.format == "csv") {
    emit(args.out, point_cloud_csv<3>(rotated,
                                      {"axis=" + to_csv(axis, args.digits),
                                       "angle_rad=" + format_real(args.angle, args.digits),
                                       "method=" + args.method},
                                      {"x", "y", "z"}, args.digits));
  } else {
    emit(args.out, point_cloud_json<3>(rotated, args.digits) + "\n");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// compose

UnitQuaternion parse_rotation_spec(const std::string& spec) {
  const auto at = spec.find('@');
  if (at != std::string::npos) {
    const Vec3 axis = required_unit_axis(parse_vec3(spec.substr(0, at), "axis-angle spec"));
    const double angle = parse_fixed(spec.substr(at + 1), 1, "axis-angle spec angle")[0];
    return axis_angle_to_quat({axis, angle});
  }
  const auto v = parse_fixed(spec, 4, "quaternion spec");
  const Quatd q(v[0], v[1], v[2], v[3]);
  if (norm_sq(q) == 0.0) throw ZeroQuaternionError();
  if (std::abs(norm(q) - 1.0) > 1e-6) {
    std::cerr << "note: quaternion normalized (given length " << format_real(norm(q), 6)
              << ")\n";
  }
  return UnitQuaternion::normalized(q);
}

int run_compose(const std::vector<std::string>& specs, int digits) {
  // Specs apply left to right: the first listed rotation acts first, so the
  // accumulated product is q_n ... q_2 q_1.
  UnitQuaternion acc = UnitQuaternion::identity();
  for (const auto& s : specs) acc = compose(parse_rotation_spec(s), acc);

  const UnitQuaternion canon = canonicalized(acc);
  const AxisAngle aa = quat_to_axis_angle(canon);
  std::cout << "{\"quaternion\": " << to_json(canon.value(), digits)
            << ", \"axis_angle\": " << to_json(aa, digits)
            << ", \"matrix\": " << to_json(rotation_matrix(canon), digits) << "}\n";
  return 0;
}

// ---------------------------------------------------------------------------
// check

struct CheckResult {
  double max_error = 0.0;
  double threshold = 0.0;
};

CheckResult check_law_of_moduli(long long trials, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  CheckResult r{0.0, 1e-9};
  for (long long t = 0; t < trials; ++t) {
    const Quatd a(u(rng), u(rng), u(rng), u(rng));
    const Quatd b(u(rng), u(rng), u(rng), u(rng));
    const double rhs = norm(a) * norm(b);
    const double err = std::abs(norm(a * b) - rhs) / std::max(1.0, rhs);
    r.max_error = std::max(r.max_error, err);
  }
  return r;
}

CheckResult check_four_square(long long trials, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> u(-1000, 1000);
  CheckResult r{0.0, 0.0};  // integer arithmetic: anything nonzero fails
  for (long long t = 0; t < trials; ++t) {
    const Quaternion<long long> a(u(rng), u(rng), u(rng), u(rng));
    const Quaternion<long long> b(u(rng), u(rng), u(rng), u(rng));
    const auto id = four_square_check(a, b);
    r.max_error = std::max(r.max_error, static_cast<double>(std::abs(id.lhs - id.rhs)));
    const auto p = a * b;
    const long long terms[4] = {p.w, p.x, p.y, p.z};
    for (int c = 0; c < 4; ++c) {
      r.max_error =
          std::max(r.max_error, static_cast<double>(std::abs(id.terms[c] - terms[c])));
    }
  }
  return r;
}

CheckResult check_two_square(long long trials, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> u(-30000, 30000);
  CheckResult r{0.0, 0.0};
  for (long long t = 0; t < trials; ++t) {
    const auto id = two_square_check(u(rng), u(rng), u(rng), u(rng));
    r.max_error = std::max(r.max_error, static_cast<double>(std::abs(id.lhs - id.rhs)));
  }
  return r;
}

CheckResult check_group_table(long long, std::mt19937_64&) {
  CheckResult r{0.0, 0.0};  // max_error counts violations
  for (const auto g : kGroupElements) {
    for (const auto h : kGroupElements) {
      if (!(g.embed<int>() * h.embed<int>() == (g * h).embed<int>())) r.max_error += 1.0;
      for (const auto f : kGroupElements) {
        if (!((g * h) * f == g * (h * f))) r.max_error += 1.0;
      }
    }
    // Inverse present.
    bool has_inverse = false;
    for (const auto h : kGroupElements) {
      if (g * h == GroupElement::plus_e() && h * g == GroupElement::plus_e()) has_inverse = true;
    }
    if (!has_inverse) r.max_error += 1.0;
  }
  return r;
}

CheckResult check_double_cover(long long trials, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CheckResult r{0.0, 1e-12};
  for (long long t = 0; t < trials; ++t) {
    Quatd q(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
    if (norm(q) < 1e-6) {
      --t;
      continue;
    }
    const UnitQuaternion u = UnitQuaternion::normalized(q);
    r.max_error = std::max(r.max_error, max_abs_diff(rotation_matrix(u), rotation_matrix(-u)));
  }
  return r;
}

CheckResult check_rodrigues_equivalence(long long trials, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> angle_dist(-2.0 * std::numbers::pi,
                                                    2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> comp(-10.0, 10.0);
  CheckResult r{0.0, 1e-9};
  for (long long t = 0; t < trials; ++t) {
    Vec3 n{gauss(rng), gauss(rng), gauss(rng)};
    if (norm(n) < 1e-6) {
      --t;
      continue;
    }
    n = (1.0 / norm(n)) * n;
    const AxisAngle aa{n, angle_dist(rng)};
    const Vec3 v{comp(rng), comp(rng), comp(rng)};
    const Vec3 diff = conjugate_action(axis_angle_to_quat(aa), v) - rodrigues_rotate(aa, v);
    r.max_error = std::max(r.max_error, norm(diff) / std::max(1.0, norm(v)));
  }
  return r;
}

int run_check(const std::string& identity, long long trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CheckResult r;
  if (identity == "law-of-moduli") {
    r = check_law_of_moduli(trials, rng);
  } else if (identity == "four-square") {
    r = check_four_square(trials, rng);
  } else if (identity == "two-square") {
    r = check_two_square(trials, rng);
  } else if (identity == "group-table") {
    r = check_group_table(trials, rng);
  } else if (identity == "double-cover") {
    r = check_double_cover(trials, rng);
  } else {
    r = check_rodrigues_equivalence(trials, rng);
  }
  const bool pass = r.max_error <= r.threshold;
  std::cout << "identity: " << identity << "\n"
            << "trials: " << trials << " (seed " << seed << ")\n"
            << "max error: " << format_real(r.max_error, 6) << " (threshold "
            << format_real(r.threshold, 6) << ")\n"
            << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? 0 : kExitPropertyFail;
}

// ---------------------------------------------------------------------------
// hopf

struct HopfArgs {
  std::string map;
  std::string base;
  int count = 16;
  std::uint64_t seed = 0;
  bool project = false;
  std::string format = "csv";
  int digits = 17;
  std::string out;
};

template <std::size_t N>
std::array<const char*, N> coordinate_names();

template <>
std::array<const char*, 2> coordinate_names<2>() {
  return {"x1", "x2"};
}
template <>
std::array<const char*, 3> coordinate_names<3>() {
  return {"p1", "p2", "p3"};
}
template <>
std::array<const char*, 4> coordinate_names<4>() {
  return {"x1", "x2", "x3", "x4"};
}
template <>
std::array<const char*, 8> coordinate_names<8>() {
  return {"x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8"};
}

template <std::size_t N>
void emit_cloud(const HopfArgs& args, const std::vector<std::array<double, N>>& rows,
                const std::vector<std::string>& meta) {
  if (args.format == "csv") {
    emit(args.out, point_cloud_csv<N>(rows, meta, coordinate_names<N>(), args.digits));
  } else {
    emit(args.out, point_cloud_json<N>(rows, args.digits) + "\n");
  }
}

int run_hopf(const HopfArgs& args) {
  if (args.project && args.map != "complex") {
    throw UsageError("--project requires the complex map (its total space is the 3-sphere)");
  }

  std::string base_text = args.base;
  if (base_text.empty()) {
    base_text = args.map == "real" ? "1,0" : args.map == "complex" ? "0,0,1" : "0,0,0,0,1";
  }
  const std::vector<std::string> meta = {"map=" + args.map, "base=" + base_text,
                                         "seed=" + std::to_string(args.seed)};

  if (args.map == "real") {
    const auto b = parse_fixed(base_text, 2, "--base");
    const Circle base{{b[0], b[1]}};
    const auto fiber = fiber_sample(base, args.count);
    std::vector<std::array<double, 2>> rows;
    for (const auto& f : fiber) {
      if (!fiber_contains(f, base)) throw Error("internal: sample left the fiber");
      rows.push_back(f.x);
    }
    emit_cloud<2>(args, rows, meta);
    return 0;
  }

  if (args.map == "complex") {
    const auto b = parse_fixed(base_text, 3, "--base");
    const SpherePoint<2> base{{b[0], b[1], b[2]}};
    const auto fiber = fiber_sample(base, args.count);
    if (args.project) {
      std::vector<std::array<double, 3>> rows;
      for (const auto& f : fiber) {
        if (!fiber_contains(f, base)) throw Error("internal: sample left the fiber");
        rows.push_back(stereographic_project(f));
      }
      emit_cloud<3>(args, rows, meta);
    } else {
      std::vector<std::array<double, 4>> rows;
      for (const auto& f : fiber) {
        if (!fiber_contains(f, base)) throw Error("internal: sample left the fiber");
        rows.push_back(f.x);
      }
      emit_cloud<4>(args, rows, meta);
    }
    return 0;
  }

  const auto b = parse_fixed(base_text, 5, "--base");
  const SpherePoint<4> base{{b[0], b[1], b[2], b[3], b[4]}};
  const auto fiber = fiber_sample(base, args.count, args.seed);
  std::vector<std::array<double, 8>> rows;
  for (const auto& f : fiber) {
    if (!fiber_contains(f, base)) throw Error("internal: sample left the fiber");
    rows.push_back(f.x);
  }
  emit_cloud<8>(args, rows, meta);
  return 0;
}

// ---------------------------------------------------------------------------
// bench

struct BenchRow {
  std::string name;
  long long iterations = 0;
  double total_s = 0.0;
  double checksum = 0.0;
};

template <typename Body>
BenchRow time_method(const std::string& name, const std::vector<Vec3>& vectors, int repeats,
                     Body&& body) {
  BenchRow row{name, static_cast<long long>(vectors.size()) * repeats, 0.0, 0.0};
  double first_checksum = 0.0;
  for (int r = 0; r < repeats; ++r) {
    double checksum = 0.0;
    const auto t0 = std::chrono::steady_clock::now();
    for (const Vec3& v : vectors) {
      const Vec3 o = body(v);
      checksum += o.x + o.y + o.z;
    }
    const auto t1 = std::chrono::steady_clock::now();
    row.total_s += std::chrono::duration<double>(t1 - t0).count();
    if (r == 0) {
      first_checksum = checksum;
    } else if (checksum != first_checksum) {
      throw Error("bench: checksum varied between repeats of " + name);
    }
  }
  row.checksum = first_checksum;
  return row;
}

int run_bench(long long n, int repeats, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> comp(-1.0, 1.0);

  Quatd raw;
  do {
    raw = Quatd(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
  } while (norm(raw) < 1e-6);
  const UnitQuaternion q = UnitQuaternion::normalized(raw);
  const AxisAngle aa = quat_to_axis_angle(q);

  std::vector<Vec3> vectors(static_cast<std::size_t>(n));
  for (Vec3& v : vectors) v = {comp(rng), comp(rng), comp(rng)};

  const BenchRow quat_row = time_method(
      "quat", vectors, repeats, [&](const Vec3& v) { return conjugate_action(q, v); });

  const Mat3d r = rotation_matrix(q);
  const BenchRow matrix_row =
      time_method("matrix", vectors, repeats, [&](const Vec3& v) { return apply(r, v); });

  const BenchRow rodrigues_row = time_method(
      "rodrigues", vectors, repeats, [&](const Vec3& v) { return rodrigues_rotate(aa, v); });

  std::cout << "# bench n=" << n << " repeats=" << repeats << " seed=" << seed << "\n";
  std::cout << "method,iterations,total_s,ns_per_op,checksum\n";
  for (const BenchRow& row : {quat_row, matrix_row, rodrigues_row}) {
    const double ns = 1e9 * row.total_s / static_cast<double>(row.iterations);
    std::cout << row.name << "," << row.iterations << "," << format_real(row.total_s, 6) << ","
              << format_real(ns, 6) << "," << format_real(row.checksum) << "\n";
  }

  // The three methods must agree; a fast benchmark of wrong answers is
  // worthless.
  const std::size_t subset = static_cast<std::size_t>(std::min<long long>(n, 1000));
  double max_err = 0.0;
  for (std::size_t i = 0; i < subset; ++i) {
    const Vec3& v = vectors[i];
    const Vec3 a = conjugate_action(q, v);
    const Vec3 b = apply(r, v);
    const Vec3 c = rodrigues_rotate(aa, v);
    const double scale = std::max(1.0, norm(v));
    max_err = std::max({max_err, norm(a - b) / scale, norm(a - c) / scale, norm(b - c) / scale});
  }
  const bool agree = max_err <= 1e-9;
  std::cout << "agreement: " << (agree ? "PASS" : "FAIL") << " max_error="
            << format_real(max_err, 6) << " subset=" << subset << "\n";
  const double quat_ns = quat_row.total_s / static_cast<double>(quat_row.iterations);
  const double matrix_ns = matrix_row.total_s / static_cast<double>(matrix_row.iterations);
  std::cout << "throughput quat/matrix: " << format_real(matrix_ns / quat_ns, 6)
            << " (ops per unit time, relative)\n";
  return agree ? 0 : kExitPropertyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternion rotations, classical identities and Hopf fiber sampling"};
  app.require_subcommand(1);

  RotateArgs rotate_args;
  auto* rotate = app.add_subcommand("rotate", "Rotate 3-vectors about an axis");
  rotate->add_option("--axis", rotate_args.axis, "rotation axis as x,y,z")->required();
  rotate->add_option("--angle", rotate_args.angle, "rotation angle in radians");
  rotate->add_option("--vec", rotate_args.vecs, "vector to rotate, as x,y,z (repeatable)");
  rotate->add_option("--file", rotate_args.file, "CSV file of vectors, one x,y,z row per line");
  rotate->add_option("--method", rotate_args.method, "rotation algorithm")
      ->check(CLI::IsMember({"quat", "rodrigues"}));
  rotate->add_option("--format", rotate_args.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  rotate->add_option("--digits", rotate_args.digits, "significant digits in output")
      ->check(CLI::Range(1, 17));
  rotate->add_option("--out", rotate_args.out, "output file (default stdout)");

  std::vector<std::string> compose_specs;
  int compose_digits = 17;
  auto* compose_cmd =
      app.add_subcommand("compose", "Compose rotations given as w,x,y,z or x,y,z@angle");
  compose_cmd->add_option("specs", compose_specs, "rotations, applied left to right")
      ->required()
      ->expected(-1);
  compose_cmd->add_option("--digits", compose_digits, "significant digits in output")
      ->check(CLI::Range(1, 17));

  std::string check_identity;
  long long check_trials = 100000;
  std::uint64_t check_seed = 0;
  auto* check = app.add_subcommand("check", "Verify a classical identity on random inputs");
  check->add_option("identity", check_identity, "which identity to check")
      ->required()
      ->check(CLI::IsMember({"law-of-moduli", "four-square", "two-square", "group-table",
                             "double-cover", "rodrigues-equivalence"}));
  check->add_option("--trials", check_trials, "number of random trials")
      ->check(CLI::Range(1LL, 100000000LL));
  check->add_option("--seed", check_seed, "random seed");

  HopfArgs hopf_args;
  auto* hopf = app.add_subcommand("hopf", "Sample a Hopf fiber over a base point");
  hopf->add_option("map", hopf_args.map, "which fibration")
      ->required()
      ->check(CLI::IsMember({"real", "complex", "quaternionic"}));
  hopf->add_option("--base", hopf_args.base,
                   "base point (2, 3 or 5 coordinates; default a pole)");
  hopf->add_option("-n,--count", hopf_args.count, "number of fiber samples")
      ->check(CLI::Range(1, 10000000));
  hopf->add_option("--seed", hopf_args.seed, "random seed (quaternionic sampling)");
  hopf->add_flag("--project", hopf_args.project,
                 "stereographically project fiber points to 3-space (complex map only)");
  hopf->add_option("--format", hopf_args.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  hopf->add_option("--digits", hopf_args.digits, "significant digits in output")
      ->check(CLI::Range(1, 17));
  hopf->add_option("--out", hopf_args.out, "output file (default stdout)");

  long long bench_n = 1000000;
  int bench_repeats = 5;
  std::uint64_t bench_seed = 0;
  auto* bench = app.add_subcommand("bench", "Time rotation methods against each other");
  bench->add_option("-n,--vectors", bench_n, "vectors per repeat")
      ->check(CLI::Range(1LL, 1000000000LL));
  bench->add_option("-r,--repeats", bench_repeats, "timed repeats")->check(CLI::Range(1, 1000));
  bench->add_option("--seed", bench_seed, "random seed");

  int rc = 0;
  rotate->callback([&]() { rc = run_rotate(rotate_args); });
  compose_cmd->callback([&]() { rc = run_compose(compose_specs, compose_digits); });
  check->callback([&]() { rc = run_check(check_identity, check_trials, check_seed); });
  hopf->callback([&]() { rc = run_hopf(hopf_args); });
  bench->callback([&]() { rc = run_bench(bench_n, bench_repeats, bench_seed); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return rc;
}
