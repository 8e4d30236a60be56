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

#include "hamilton/errors.hpp"
#include "hamilton/group.hpp"
#include "hamilton/hopf.hpp"
#include "hamilton/identities.hpp"
#include "hamilton/io.hpp"
#include "hamilton/matrix.hpp"
#include "hamilton/matrix_rep.hpp"
#include "hamilton/quaternion.hpp"
#include "hamilton/rotation.hpp"
#include "hamilton/tolerance.hpp"
#include "hamilton/vector3.hpp"
