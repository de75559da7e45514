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

// Wall-clock comparison of the serial reference kernels against the
// OpenMP-parallel routes, on Boolean and partition lattices. Both routes
// must produce identical results; any mismatch aborts the run.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "declat/caps.hpp"
#include "declat/decomp_lattice.hpp"
#include "declat/instances.hpp"
#include "declat/lattice_props.hpp"
#include "declat/tolerance.hpp"

namespace {

using declat::Caps;
using declat::Exec;
using declat::FiniteLattice;

template <typename Fn>
double time_ms(Fn&& fn) {
  double best = 1e100;
  for (int rep = 0; rep < 3; ++rep) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0)
                              .count());
  }
  return best;
}

void report(const std::string& kernel, const std::string& lattice, int m,
            double serial_ms, double parallel_ms) {
  std::printf("%-22s %-10s %6d %12.2f %12.2f %9.2fx\n", kernel.c_str(),
              lattice.c_str(), m, serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

void require(bool ok, const char* what) {
  if (!ok) {
    std::fprintf(stderr, "serial/parallel mismatch: %s\n", what);
    std::exit(1);
  }
}

void bench_lattice(const std::string& name, const FiniteLattice& l) {
  const int m = l.size();

  {
    declat::BitMatrix leq = l.up();
    FiniteLattice ls, lp;
    double s = time_ms([&] { ls = FiniteLattice::from_leq(leq, Exec::serial); });
    double p =
        time_ms([&] { lp = FiniteLattice::from_leq(leq, Exec::parallel); });
    require(ls.up() == lp.up() && ls.bottom() == lp.bottom() &&
                ls.top() == lp.top(),
            "order build");
    report("order-build", name, m, s, p);
  }

  {
    declat::PropertyCheck cs, cp;
    double s = time_ms([&] { cs = declat::is_semimodular(l, Exec::serial); });
    double p = time_ms([&] { cp = declat::is_semimodular(l, Exec::parallel); });
    require(cs.holds == cp.holds && cs.witness == cp.witness, "semimodular");
    report("semimodular", name, m, s, p);
  }

  {
    declat::PropertyCheck cs, cp;
    double s = time_ms([&] { cs = declat::is_balanced(l, Exec::serial); });
    double p = time_ms([&] { cp = declat::is_balanced(l, Exec::parallel); });
    require(cs.holds == cp.holds && cs.witness == cp.witness, "balanced");
    report("balanced", name, m, s, p);
  }

  // O(m^3) and worse; keep to sizes where the serial route stays honest.
  if (m <= 300) {
    {
      std::vector<int> ss, sp;
      double s =
          time_ms([&] { ss = declat::standard_elements(l, Exec::serial); });
      double p =
          time_ms([&] { sp = declat::standard_elements(l, Exec::parallel); });
      require(ss == sp, "standard elements");
      report("standard-elements", name, m, s, p);
    }

    if (m <= 210) {
      std::vector<std::pair<int, int>> covers = l.cover_pairs();
      declat::BitMatrix rs, rp;
      double s = time_ms(
          [&] { rs = declat::tolerance_closure(l, covers, Exec::serial); });
      double p = time_ms(
          [&] { rp = declat::tolerance_closure(l, covers, Exec::parallel); });
      require(rs == rp, "skeleton closure");
      report("skeleton-closure", name, m, s, p);
    }
  }
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp: disabled\n");
#endif
  std::printf("%-22s %-10s %6s %12s %12s %10s\n", "kernel", "lattice", "m",
              "serial ms", "parallel ms", "speedup");

  Caps caps;
  caps.max_lattice = 1 << 20;

  // Boolean lattices arise as decomposition lattices of path trees.
  for (int edges : {8, 10}) {
    std::vector<std::pair<int, int>> path;
    for (int v = 0; v + 1 <= edges; ++v) path.emplace_back(v, v + 1);
    declat::TreeInstance t(edges + 1, path);
    declat::DecompLattice d =
        declat::build_lattice(declat::tree_subtrees(t, caps), caps);
    bench_lattice("B" + std::to_string(edges), d.lattice);
  }

  // Partition lattices arise from powerset families.
  for (int n : {5, 6}) {
    std::vector<declat::Subset> sets;
    for (declat::Subset s = 0; s <= declat::full_set(n); ++s)
      sets.push_back(s);
    declat::DecompLattice d =
        declat::build_lattice(declat::SetFamily(n, sets, caps), caps);
    bench_lattice("Part" + std::to_string(n), d.lattice);
  }
  return 0;
}
