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

// Structural facts about decomposition lattices, each checked exhaustively
// on one family or one lattice. A check that does not apply to the given
// input (wrong axiom profile) reports applicable = false and passes.

#ifndef DECLAT_THEOREMS_HPP
#define DECLAT_THEOREMS_HPP

#include <string>
#include <vector>

#include "declat/caps.hpp"
#include "declat/decomp_lattice.hpp"
#include "declat/exec.hpp"
#include "declat/finite_lattice.hpp"

namespace declat {

struct TheoremCheck {
  bool applicable = true;
  bool pass = true;
  std::string detail;  // first counterexample, or a short summary

  bool ok() const { return !applicable || pass; }
};

// --- checks on a decomposition lattice with its family ---

// Meets are blockwise intersections; joins dominate the partition join and
// equal it whenever the partition join is itself a decomposition.
TheoremCheck verify_lattice_bounds(const DecompLattice& d);

// The stored sublattice flag equals the overlapping-union axiom.
TheoremCheck verify_sublattice_flag(const DecompLattice& d);

// Every decomposition is the join of its single-block decompositions.
// Needs the empty set and singletons closed.
TheoremCheck verify_join_generation(const DecompLattice& d);

// Every cover merges at least two blocks into one and keeps the rest.
TheoremCheck verify_single_merge_covers(const DecompLattice& d);

// Overlapping-union families have semimodular decomposition lattices.
TheoremCheck verify_union_closed_semimodular(const DecompLattice& d,
                                             Exec exec = Exec::parallel);

// Join-irreducibles are exactly the single-block decompositions whose block
// admits a greatest proper decomposition; the lower cover agrees with it.
TheoremCheck verify_irreducible_characterization(const DecompLattice& d,
                                                 const Caps& caps = Caps{});

// In interval systems: blocks of greatest proper decompositions are strong,
// and a block split into three or more parts is itself strong.
TheoremCheck verify_gpd_blocks_strong(const DecompLattice& d,
                                      const Caps& caps = Caps{});

// In interval systems: below every join-irreducible decomposition sits a
// strong decomposition.
TheoremCheck verify_lower_star_strong(const DecompLattice& d);

// In interval systems, four conditions agree: atomistic, geometric, dually
// atomistic, and no proper strong member.
TheoremCheck verify_atomistic_equivalences(const DecompLattice& d,
                                           const Caps& caps = Caps{},
                                           Exec exec = Exec::parallel);

// Strong decompositions are standard elements; they are closed under join
// and meet, match the decompositions of the strong-member family, and form
// a distributive lattice that also sits inside the partition lattice.
TheoremCheck verify_strong_decompositions_standard(const DecompLattice& d,
                                                   const Caps& caps = Caps{},
                                                   Exec exec = Exec::parallel);

// j ∧ (j_* ∨ x) == j_* ∨ (j ∧ x) for every join-irreducible j and every x.
TheoremCheck verify_standard_split_identity(const DecompLattice& d,
                                            Exec exec = Exec::parallel);

// Interval systems give balanced lattices with the join replacement
// property; strength and consistency come with them.
TheoremCheck verify_interval_balanced_korp(const DecompLattice& d,
                                           const Caps& caps = Caps{},
                                           Exec exec = Exec::parallel);

// Nonempty members that do not split into two disjoint members are strong.
TheoremCheck verify_nonfragile_strong(const DecompLattice& d);

// The strong members form a closure system with overlapping unions and
// differences closed; with singletons present it is an interval system.
TheoremCheck verify_strong_family_axioms(const DecompLattice& d,
                                         const Caps& caps = Caps{});

// Restricting to any nonempty member preserves the axiom profile.
TheoremCheck verify_restrictions_preserve_axioms(const DecompLattice& d,
                                                 const Caps& caps = Caps{});

// Interval systems give lattices glued by geometric blocks.
TheoremCheck verify_glued_by_geometric_interval(const DecompLattice& d,
                                                const Caps& caps = Caps{},
                                                Exec exec = Exec::parallel);

// --- checks on a bare finite lattice ---

// The four combinations "semimodular and X" agree for X in {replacement
// property, balanced, consistent, strong}.
TheoremCheck verify_semimodular_equivalences(const FiniteLattice& l,
                                             const Caps& caps = Caps{},
                                             Exec exec = Exec::parallel);

// The join replacement property holds exactly when the lattice is
// consistent.
TheoremCheck verify_korp_consistent_agree(const FiniteLattice& l,
                                          const Caps& caps = Caps{},
                                          Exec exec = Exec::parallel);

// Balanced exactly when strong on both sides.
TheoremCheck verify_balanced_strong_duality(const FiniteLattice& l,
                                            Exec exec = Exec::parallel);

// Semimodular lattices are dually strong.
TheoremCheck verify_semimodular_dually_strong(const FiniteLattice& l,
                                              Exec exec = Exec::parallel);

// Semimodular-and-strong holds exactly when every skeleton block is
// geometric.
TheoremCheck verify_glued_matches_equivalences(const FiniteLattice& l,
                                               const Caps& caps = Caps{},
                                               Exec exec = Exec::parallel);

}  // namespace declat

#endif  // DECLAT_THEOREMS_HPP
