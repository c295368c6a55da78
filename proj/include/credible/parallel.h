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

#ifndef CREDIBLE_PARALLEL_H_
#define CREDIBLE_PARALLEL_H_

#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace credible {

// Selects the serial reference loop or the OpenMP loop for a kernel. Both
// produce identical results; kernels write into per-index slots and merge in
// index order.
enum class Exec { kSerial, kParallel };

inline int MaxThreads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Calls fn(i) for every i in [0, n). Exceptions thrown by fn are captured
// and the first one (lowest index under kSerial, any under kParallel) is
// rethrown after the loop.
template <typename Fn>
void ForEachIndex(std::size_t n, Exec exec, Fn&& fn) {
  if (exec == Exec::kSerial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr error;
  std::mutex mu;
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace credible

#endif  // CREDIBLE_PARALLEL_H_
