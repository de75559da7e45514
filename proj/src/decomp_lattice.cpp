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

#include "declat/decomp_lattice.hpp"

#include <algorithm>

#include "declat/errors.hpp"

namespace declat {

std::vector<Partition> enumerate_decompositions(const SetFamily& f,
                                                const Caps& caps) {
  const int n = f.ground_size();
  if (!f.contains(f.universe()))
    throw DomainError("family has no top member; not a closure system");

  // Member sets bucketed by their least element, for the recursion below.
  std::vector<std::vector<Subset>> by_min(n);
  for (Subset s : f.sets())
    if (s != 0) by_min[min_element(s)].push_back(s);

  std::vector<Partition> out;
  std::vector<Subset> blocks;
  const Subset full = f.universe();
  auto rec = [&](auto&& self, Subset used) -> void {
    if (used == full) {
      if (out.size() >= caps.max_lattice)
        throw ResourceError("decomposition count exceeds lattice size cap " +
                            std::to_string(caps.max_lattice));
      out.emplace_back(n, blocks);
      return;
    }
    int e = min_element(full & ~used);
    for (Subset a : by_min[e]) {
      if (a & used) continue;
      blocks.push_back(a);
      self(self, used | a);
      blocks.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), partition_less);
  return out;
}

int DecompLattice::index_of(const Partition& p) const {
  auto it =
      std::lower_bound(elements.begin(), elements.end(), p, partition_less);
  if (it == elements.end() || !(*it == p)) return -1;
  return static_cast<int>(it - elements.begin());
}

DecompLattice build_lattice(const SetFamily& f, const Caps& caps, Exec exec) {
  DecompLattice d;
  d.family = f;
  d.axioms = check_axioms(f);
  if (!d.axioms.closure_system()) {
    if (!d.axioms.closure_top)
      throw DomainError("family is not a closure system: universe missing");
    throw DomainError(
        "family is not a closure system: intersection of " +
        set_label(d.axioms.closure_witness.first) + " and " +
        set_label(d.axioms.closure_witness.second) + " is not a member");
  }
  d.elements = enumerate_decompositions(f, caps);

  const int m = static_cast<int>(d.elements.size());
  BitMatrix leq(m, m);
  for_each_index(m, exec, [&](long long i) {
    int a = static_cast<int>(i);
    for (int b = 0; b < m; ++b)
      if (d.elements[a].refines(d.elements[b])) leq.set(a, b);
  });
  d.lattice = FiniteLattice::from_leq(leq, exec);

  const long long pairs = static_cast<long long>(m) * m;
  long long escape = find_first(pairs, exec, [&](long long i) {
    int a = static_cast<int>(i / m), b = static_cast<int>(i % m);
    if (a >= b) return false;
    return d.index_of(join(d.elements[a], d.elements[b])) < 0;
  });
  d.sublattice_of_partitions = escape < 0;
  return d;
}

}  // namespace declat
