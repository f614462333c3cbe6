// Copyright 2026 The cmdih authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CMDIH_LINALG_HPP
#define CMDIH_LINALG_HPP

#include <optional>
#include <vector>

#include "rational.hpp"

namespace cmdih {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row-major

/// Exact rank via Gaussian elimination over Q.
int rank(RatMat a);

/// Solves A x = b exactly. Returns nullopt when the system is inconsistent;
/// throws std::domain_error when the solution is not unique (rank-deficient
/// columns). All solves in the library are against full-column-rank systems.
std::optional<RatVec> solve(RatMat a, RatVec b);

}  // namespace cmdih

#endif
