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

#include <utility>

#include "credible/errors.h"

namespace credible {

std::optional<RatMatrix> SolveExact(const RatMatrix& a, const RatMatrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw InputError("SolveExact: row count mismatch");
  const std::size_t m = n == 0 ? 0 : b[0].size();
  const std::size_t width = n + m;

  // Integer-scaled augmented matrix [A | B].
  std::vector<std::vector<mpz_class>> rows(n, std::vector<mpz_class>(width));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n || b[i].size() != m) {
      throw InputError("SolveExact: ragged system");
    }
    mpz_class scale = 1;
    for (const Rat& x : a[i]) scale = lcm(scale, x.Denominator());
    for (const Rat& x : b[i]) scale = lcm(scale, x.Denominator());
    for (std::size_t j = 0; j < width; ++j) {
      const Rat& x = j < n ? a[i][j] : b[i][j - n];
      rows[i][j] = x.Numerator() * (scale / x.Denominator());
    }
  }

  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && rows[pivot][k] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != k) std::swap(rows[pivot], rows[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < width; ++j) {
        mpz_class t = rows[k][k] * rows[i][j] - rows[i][k] * rows[k][j];
        mpz_divexact(rows[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      rows[i][k] = 0;
    }
    prev = rows[k][k];
  }

  RatMatrix x(n, RatVector(m));
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t ii = n; ii-- > 0;) {
      mpq_class acc(rows[ii][n + c]);
      for (std::size_t j = ii + 1; j < n; ++j) {
        acc -= mpq_class(rows[ii][j]) * x[j][c].raw();
      }
      acc /= mpq_class(rows[ii][ii]);
      x[ii][c] = Rat(acc);
    }
  }
  return x;
}

std::optional<RatVector> SolveExact(const RatMatrix& a, const RatVector& b) {
  RatMatrix rhs(b.size(), RatVector(1));
  for (std::size_t i = 0; i < b.size(); ++i) rhs[i][0] = b[i];
  auto x = SolveExact(a, rhs);
  if (!x) return std::nullopt;
  RatVector out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = (*x)[i][0];
  return out;
}

}  // namespace credible
