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

#include "credible/linalg.h"

#include "doctest.h"
#include "test_support.h"

namespace credible {
namespace {

using testing::Uniform;

RatVector Multiply(const RatMatrix& a, const RatVector& x) {
  RatVector out(a.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) out[i] += a[i][j] * x[j];
  }
  return out;
}

TEST_CASE("solves a small system exactly") {
  const RatMatrix a = {{Rat(2), Rat(1)}, {Rat(1), Rat(3)}};
  const auto x = SolveExact(a, RatVector{Rat(1), Rat(2)});
  REQUIRE(x);
  CHECK(*x == RatVector{Rat(1, 5), Rat(3, 5)});
}

TEST_CASE("fractional coefficients and pivoting") {
  const RatMatrix a = {{Rat(0), Rat(1, 2)}, {Rat(1, 3), Rat(1)}};
  const auto x = SolveExact(a, RatVector{Rat(1), Rat(0)});
  REQUIRE(x);
  CHECK(*x == RatVector{Rat(-6), Rat(2)});
}

TEST_CASE("singular systems are reported") {
  const RatMatrix a = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
  CHECK_FALSE(SolveExact(a, RatVector{Rat(1), Rat(2)}));
}

TEST_CASE("random systems satisfy A x = b") {
  Rng rng(testing::kSeed);
  int solved = 0;
  for (int k = 0; k < 300; ++k) {
    const int n = Uniform(rng, 1, 6);
    RatMatrix a(n, RatVector(n));
    RatVector b(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a[i][j] = Rat(Uniform(rng, -4, 4), Uniform(rng, 1, 3));
      b[i] = Rat(Uniform(rng, -9, 9));
    }
    const auto x = SolveExact(a, b);
    if (!x) continue;
    ++solved;
    CHECK(Multiply(a, *x) == b);
  }
  CHECK(solved > 200);
}

TEST_CASE("multiple right-hand sides") {
  const RatMatrix a = {{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}};
  const RatMatrix b = {{Rat(2), Rat(0)}, {Rat(0), Rat(2)}};
  const auto x = SolveExact(a, b);
  REQUIRE(x);
  CHECK((*x)[0] == RatVector{Rat(1), Rat(1)});
  CHECK((*x)[1] == RatVector{Rat(1), Rat(-1)});
}

}  // namespace
}  // namespace credible
