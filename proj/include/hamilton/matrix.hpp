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
#include <cmath>
#include <complex>
#include <cstddef>
#include <ostream>

namespace hamilton {

namespace detail {

inline double abs_sq(double v) { return v * v; }
inline double abs_sq(const std::complex<double>& v) { return std::norm(v); }

inline double conj_entry(double v) { return v; }
inline std::complex<double> conj_entry(const std::complex<double>& v) { return std::conj(v); }

}  // namespace detail

/// Dense N x N matrix with row-major storage, sized for the 2x2, 3x3 and
/// 4x4 cases this library needs. Entries are double or complex<double>.
template <std::size_t N, typename T = double>
struct Matrix {
  std::array<T, N * N> m{};

  constexpr T& operator()(std::size_t r, std::size_t c) { return m[r * N + c]; }
  constexpr const T& operator()(std::size_t r, std::size_t c) const { return m[r * N + c]; }

  static constexpr Matrix zero() { return {}; }

  static constexpr Matrix identity() {
    Matrix id{};
    for (std::size_t i = 0; i < N; ++i) id(i, i) = T(1);
    return id;
  }

  friend constexpr bool operator==(const Matrix&, const Matrix&) = default;

  friend constexpr Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix r{};
    for (std::size_t i = 0; i < N * N; ++i) r.m[i] = a.m[i] + b.m[i];
    return r;
  }

  friend constexpr Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix r{};
    for (std::size_t i = 0; i < N * N; ++i) r.m[i] = a.m[i] - b.m[i];
    return r;
  }

  friend constexpr Matrix operator*(const T& s, const Matrix& a) {
    Matrix r{};
    for (std::size_t i = 0; i < N * N; ++i) r.m[i] = s * a.m[i];
    return r;
  }

  friend constexpr Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix r{};
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t k = 0; k < N; ++k) {
        const T aik = a(i, k);
        for (std::size_t j = 0; j < N; ++j) r(i, j) += aik * b(k, j);
      }
    }
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& a) {
    for (std::size_t i = 0; i < N; ++i) {
      os << (i == 0 ? "[" : " ");
      for (std::size_t j = 0; j < N; ++j) os << a(i, j) << (j + 1 < N ? ", " : "");
      os << (i + 1 < N ? "\n" : "]");
    }
    return os;
  }
};

template <std::size_t N, typename T>
constexpr Matrix<N, T> transpose(const Matrix<N, T>& a) {
  Matrix<N, T> r{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(j, i) = a(i, j);
  return r;
}

/// Conjugate transpose; plain transpose for real entries.
template <std::size_t N, typename T>
Matrix<N, T> adjoint(const Matrix<N, T>& a) {
  Matrix<N, T> r{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(j, i) = detail::conj_entry(a(i, j));
  return r;
}

template <std::size_t N, typename T>
constexpr Matrix<N - 1, T> minor_matrix(const Matrix<N, T>& a, std::size_t row, std::size_t col) {
  Matrix<N - 1, T> r{};
  for (std::size_t i = 0, ri = 0; i < N; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, rj = 0; j < N; ++j) {
      if (j == col) continue;
      r(ri, rj) = a(i, j);
      ++rj;
    }
    ++ri;
  }
  return r;
}

/// Determinant by cofactor expansion along the first row.
template <std::size_t N, typename T>
constexpr T det(const Matrix<N, T>& a) {
  if constexpr (N == 1) {
    return a(0, 0);
  } else if constexpr (N == 2) {
    return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  } else {
    T sum{};
    T sign{1};
    for (std::size_t j = 0; j < N; ++j) {
      sum = sum + sign * a(0, j) * det(minor_matrix(a, 0, j));
      sign = -sign;
    }
    return sum;
  }
}

template <std::size_t N, typename T>
double frobenius_norm(const Matrix<N, T>& a) {
  double s = 0.0;
  for (const T& v : a.m) s += detail::abs_sq(v);
  return std::sqrt(s);
}

/// Largest entrywise magnitude of a - b.
template <std::size_t N, typename T>
double max_abs_diff(const Matrix<N, T>& a, const Matrix<N, T>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < N * N; ++i) {
    worst = std::max(worst, std::sqrt(detail::abs_sq(a.m[i] - b.m[i])));
  }
  return worst;
}

using Mat2d = Matrix<2, double>;
using Mat3d = Matrix<3, double>;
using Mat4d = Matrix<4, double>;
using ComplexMat2 = Matrix<2, std::complex<double>>;

}  // namespace hamilton
