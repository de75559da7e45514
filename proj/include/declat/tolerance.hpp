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

// Compatible tolerance relations on a finite lattice: closure of a seed
// relation, the skeleton generated by the covering pairs, maximal blocks,
// and the factor lattice obtained by ordering blocks.

#ifndef DECLAT_TOLERANCE_HPP
#define DECLAT_TOLERANCE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "declat/bits.hpp"
#include "declat/caps.hpp"
#include "declat/exec.hpp"
#include "declat/finite_lattice.hpp"

namespace declat {

// Symmetric reflexive relation on lattice elements, stored as a bit matrix.
// rel.test(a, b) == rel.test(b, a) always; rel.test(a, a) always.
struct ToleranceCheck {
  bool reflexive = true;
  bool symmetric = true;
  bool compatible = true;  // closed under join and meet of related pairs
  std::vector<int> witness;  // first violating (a, b) or (a, b, c, d)

  bool valid() const { return reflexive && symmetric && compatible; }
};

// Verifies that rel is a compatible tolerance on l.  Witnesses use the
// smallest flat index, identical for both execution routes.
ToleranceCheck check_tolerance(const FiniteLattice& l, const BitMatrix& rel,
                               Exec exec = Exec::serial);

// Least compatible tolerance containing all seed pairs (and the diagonal).
// Pairs outside [0, size) raise DomainError.
BitMatrix tolerance_closure(const FiniteLattice& l,
                            const std::vector<std::pair<int, int>>& seeds,
                            Exec exec = Exec::serial);

// Skeleton: the least compatible tolerance relating every covering pair.
BitMatrix skeleton_tolerance(const FiniteLattice& l,
                             Exec exec = Exec::serial);

// A block of a tolerance: a maximal set of pairwise related elements.
// For compatible tolerances on a finite lattice every block is the
// interval [lo, hi]; both bounds are stored.
struct ToleranceBlock {
  int lo = 0;
  int hi = 0;
  Subset members = 0;  // only meaningful for lattices with <= 64 elements
};

// All blocks, sorted by (lo, hi).  Every block is verified to be exactly
// the interval [lo, hi]; a non-interval maximal clique raises
// StructureError naming the offending bounds.  Lattices larger than
// caps.max_block_enum use interval hulls instead of clique enumeration.
std::vector<ToleranceBlock> tolerance_blocks(const FiniteLattice& l,
                                             const BitMatrix& rel,
                                             const Caps& caps = Caps{},
                                             Exec exec = Exec::serial);

// Factor lattice: blocks ordered by [lo, hi] <= [lo', hi'] iff lo <= lo'
// and hi <= hi'.  Raises StructureError if that order is not a lattice.
FiniteLattice factor_lattice(const FiniteLattice& l,
                             const std::vector<ToleranceBlock>& blocks,
                             Exec exec = Exec::serial);

// A tolerance glues l when it relates every covering pair.
bool is_glued_tolerance(const FiniteLattice& l, const BitMatrix& rel);

// True when every block of the skeleton tolerance, taken as an interval
// sublattice, is geometric.
bool is_glued_by_geometric(const FiniteLattice& l, const Caps& caps = Caps{},
                           Exec exec = Exec::serial);

}  // namespace declat

#endif  // DECLAT_TOLERANCE_HPP
