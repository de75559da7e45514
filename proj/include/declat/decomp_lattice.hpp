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

#ifndef DECLAT_DECOMP_LATTICE_HPP
#define DECLAT_DECOMP_LATTICE_HPP

#include <utility>
#include <vector>

#include "declat/caps.hpp"
#include "declat/exec.hpp"
#include "declat/finite_lattice.hpp"
#include "declat/partition.hpp"
#include "declat/set_family.hpp"

namespace declat {

// All partitions of the ground set whose blocks are members of f, in
// canonical partition order ({V} is always present for closure systems).
std::vector<Partition> enumerate_decompositions(const SetFamily& f,
                                                const Caps& caps = Caps{});

// The lattice of decompositions of a closure system under refinement.
struct DecompLattice {
  SetFamily family;
  AxiomReport axioms;
  std::vector<Partition> elements;  // canonical order, aligned with lattice
  FiniteLattice lattice;
  // True when every pairwise partition-lattice join of elements lands in the
  // element set (joins then coincide with Part(V) joins).
  bool sublattice_of_partitions = false;

  int ground_size() const { return family.ground_size(); }
  // Index of p among elements, or -1.
  int index_of(const Partition& p) const;
};

DecompLattice build_lattice(const SetFamily& f, const Caps& caps = Caps{},
                            Exec exec = Exec::parallel);

}  // namespace declat

#endif  // DECLAT_DECOMP_LATTICE_HPP
