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

#include <complex>

#include "hamilton/errors.hpp"
#include "hamilton/matrix.hpp"
#include "hamilton/quaternion.hpp"
#include "hamilton/tolerance.hpp"

namespace hamilton {

// Matrix models of the complex and quaternion algebras.
//
// Complex numbers embed into 2x2 real matrices; quaternions embed into 2x2
// complex matrices built from the Pauli matrices. Both maps are injective
// algebra homomorphisms, both send the squared norm to the determinant, and
// both send unit elements to special (unitary) matrices: U(1) -> SO(2) and
// S^3 -> SU(2).

/// Pauli matrix sigma_n for n in {1, 2, 3}:
///
///   sigma_1 = [[0, 1], [1, 0]]
///   sigma_2 = [[0, -i], [i, 0]]
///   sigma_3 = [[1, 0], [0, -1]]
///
/// They square to the identity and anti-commute pairwise, with
/// sigma_1 sigma_2 = i sigma_3 and cyclic permutations.
inline ComplexMat2 pauli(int n) {
  using C = std::complex<double>;
  switch (n) {
    case 1: return {{C(0, 0), C(1, 0), C(1, 0), C(0, 0)}};
    case 2: return {{C(0, 0), C(0, -1), C(0, 1), C(0, 0)}};
    case 3: return {{C(1, 0), C(0, 0), C(0, 0), C(-1, 0)}};
    default: throw BadIndexError();
  }
}

/// The real-algebra isomorphism z = x + yi -> [[x, -y], [y, x]].
///
/// Images commute with each other (they simulate the commutative complex
/// product), det equals |z|^2, and unit z map to the plane rotations SO(2).
inline Mat2d complex_to_matrix(double x, double y) {
  return {{x, -y, y, x}};
}

/// The injective algebra homomorphism
///
///   q = w + xi + yj + zk  ->  [[w + xi, y + zi], [-y + zi, w - xi]]
///
/// sending the basis to F(e) = I, F(i) = i sigma_3, F(j) = i sigma_2,
/// F(k) = i sigma_1. Multiplicative, det equals norm_sq(q), and unit
/// quaternions land in SU(2). (Other sign choices work too; this one is
/// fixed here, and alternates differ by conjugation.)
inline ComplexMat2 quat_to_matrix(const Quatd& q) {
  using C = std::complex<double>;
  return {{C(q.w, q.x), C(q.y, q.z), C(-q.y, q.z), C(q.w, -q.x)}};
}

/// Left inverse of quat_to_matrix on its image. The image is cut out by the
/// shape constraints m11 = conj(m00) and m10 = -conj(m01); matrices that
/// violate them beyond tolerance raise NotInImageError.
inline Quatd matrix_to_quat(const ComplexMat2& m, const Tolerance& tol = kDefaultTolerance) {
  const double scale = frobenius_norm(m);
  const double shape_err = std::max(std::abs(m(1, 1) - std::conj(m(0, 0))),
                                    std::abs(m(1, 0) + std::conj(m(0, 1))));
  if (!tol.near_zero(shape_err, scale)) throw NotInImageError();
  return {m(0, 0).real(), m(0, 0).imag(), m(0, 1).real(), m(0, 1).imag()};
}

/// True iff m is unitary with unit determinant, both within tol:
/// ||m m^dagger - I||_F <= tol and |det m - 1| <= tol.
inline bool is_special_unitary(const ComplexMat2& m, double tol) {
  const double unitarity = frobenius_norm(m * adjoint(m) - ComplexMat2::identity());
  const double det_err = std::abs(det(m) - std::complex<double>(1.0, 0.0));
  return unitarity <= tol && det_err <= tol;
}

}  // namespace hamilton
