//  Copyright 2026 the declat authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef DECLAT_EXEC_HPP
#define DECLAT_EXEC_HPP

#include <cstdint>

namespace declat {

// Execution strategy for the scan kernels. `serial` is the reference
// implementation; `parallel` uses OpenMP and must produce bit-identical
// results, including witness selection.
enum class Exec : std::uint8_t { serial, parallel };

// Smallest index in [0, total) satisfying pred, or -1. The parallel route
// keeps determinism by reducing with min over thread-local candidates.
template <class Pred>
long long find_first(long long total, Exec exec, Pred pred) {
  if (exec == Exec::serial) {
    for (long long i = 0; i < total; ++i)
      if (pred(i)) return i;
    return -1;
  }
  long long best = total;
#pragma omp parallel for schedule(static) reduction(min : best)
  for (long long i = 0; i < total; ++i) {
    if (i < best && pred(i)) best = i;
  }
  return best == total ? -1 : best;
}

// Plain index loop, parallelized when requested. fn(i) must be safe to run
// concurrently for distinct i.
template <class Fn>
void for_each_index(long long total, Exec exec, Fn fn) {
  if (exec == Exec::serial) {
    for (long long i = 0; i < total; ++i) fn(i);
    return;
  }
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < total; ++i) fn(i);
}

}  // namespace declat

#endif  // DECLAT_EXEC_HPP
