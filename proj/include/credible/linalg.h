// Copyright 2026 The Credible Authors
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

#ifndef CREDIBLE_LINALG_H_
#define CREDIBLE_LINALG_H_

#include <optional>
#include <vector>

#include "credible/rational.h"

namespace credible {

using RatMatrix = std::vector<RatVector>;

// Solves A X = B exactly for square A (n x n) and B (n x m) with
// fraction-free (Bareiss) elimination on the integer-scaled system. Returns
// std::nullopt when A is singular.
std::optional<RatMatrix> SolveExact(const RatMatrix& a, const RatMatrix& b);

// Single right-hand side convenience form.
std::optional<RatVector> SolveExact(const RatMatrix& a, const RatVector& b);

}  // namespace credible

#endif  // CREDIBLE_LINALG_H_
