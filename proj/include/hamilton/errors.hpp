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

#include <stdexcept>
#include <string>

namespace hamilton {

/// Base class for all domain errors raised by this library. Commands map
/// these to exit code 3; usage problems are reported separately.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division by the zero quaternion (norm is zero, no reciprocal exists).
class ZeroQuaternionError : public Error {
 public:
  ZeroQuaternionError() : Error("quaternion has zero norm, no inverse") {}
  using Error::Error;
};

/// Input was required to be purely imaginary (zero scalar part).
class NotImaginaryError : public Error {
 public:
  NotImaginaryError() : Error("quaternion is not purely imaginary") {}
  using Error::Error;
};

/// Input was required to have unit norm.
class NotUnitError : public Error {
 public:
  NotUnitError() : Error("quaternion does not have unit norm") {}
  using Error::Error;
};

/// Matrix does not have the [[z, conj(w)], [-w, conj(z)]] shape.
class NotInImageError : public Error {
 public:
  NotInImageError() : Error("matrix is not in the image of the quaternion representation") {}
  using Error::Error;
};

/// Pauli index outside {1, 2, 3}.
class BadIndexError : public Error {
 public:
  BadIndexError() : Error("index must be 1, 2 or 3") {}
  using Error::Error;
};

/// Rotation axis is zero or not unit length.
class BadAxisError : public Error {
 public:
  BadAxisError() : Error("rotation axis must have unit length") {}
  using Error::Error;
};

/// Quaternion is outside the small-rotation regime of the linearized formula.
class NotSmallError : public Error {
 public:
  NotSmallError() : Error("vector part too large for the infinitesimal formula") {}
  using Error::Error;
};

/// Scalar parameter outside its documented range.
class BadParameterError : public Error {
 public:
  BadParameterError() : Error("parameter out of range") {}
  using Error::Error;
};

/// Point does not lie on the required sphere.
class NotOnSphereError : public Error {
 public:
  NotOnSphereError() : Error("point is not on the unit sphere") {}
  using Error::Error;
};

/// Both members of a projective pair are zero; no line is defined.
class ZeroPairError : public Error {
 public:
  ZeroPairError() : Error("projective pair (0, 0) does not represent a point") {}
  using Error::Error;
};

/// Sample count below 1.
class BadCountError : public Error {
 public:
  BadCountError() : Error("sample count must be at least 1") {}
  using Error::Error;
};

/// Stereographic projection evaluated at its pole.
class AtPoleError : public Error {
 public:
  AtPoleError() : Error("stereographic projection is undefined at the pole") {}
  using Error::Error;
};

}  // namespace hamilton
