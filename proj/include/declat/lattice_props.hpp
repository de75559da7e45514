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

#ifndef DECLAT_LATTICE_PROPS_HPP
#define DECLAT_LATTICE_PROPS_HPP

#include <vector>

#include "declat/caps.hpp"
#include "declat/exec.hpp"
#include "declat/finite_lattice.hpp"

namespace declat {

// Outcome of a property scan. A failed check carries the first violating
// element tuple in canonical scan order; the witness is identical for the
// serial and parallel routes.
struct PropertyCheck {
  bool holds = true;
  std::vector<int> witness;
};

// a ∧ b covered by a implies b covered by a ∨ b. Witness (a, b).
PropertyCheck is_semimodular(const FiniteLattice& l, Exec exec = Exec::parallel);

// Every element is the join of the atoms below it. Witness (x).
PropertyCheck is_atomistic(const FiniteLattice& l, Exec exec = Exec::parallel);
// Every element is the meet of the coatoms above it. Witness (x).
PropertyCheck is_dually_atomistic(const FiniteLattice& l,
                                  Exec exec = Exec::parallel);
// Atomistic and semimodular (finite case). Witness from the failing part.
PropertyCheck is_geometric(const FiniteLattice& l, Exec exec = Exec::parallel);

// x ∧ (y ∨ z) == (x ∧ y) ∨ (x ∧ z) over all triples. Witness (x, y, z).
PropertyCheck is_distributive(const FiniteLattice& l,
                              Exec exec = Exec::parallel);

// x ∧ (a ∨ y) == (x ∧ a) ∨ (x ∧ y) over all pairs. Witness (x, y).
PropertyCheck is_standard_element(const FiniteLattice& l, int a,
                                  Exec exec = Exec::parallel);
// All standard elements, ascending.
std::vector<int> standard_elements(const FiniteLattice& l,
                                   Exec exec = Exec::parallel);

// j <= j_* ∨ x implies j <= x, over join-irreducibles j. Witness (j, x).
PropertyCheck is_strong_lattice(const FiniteLattice& l,
                                Exec exec = Exec::parallel);
// The dual condition: m >= m^* ∧ x implies m >= x. Witness (m, x).
PropertyCheck is_dually_strong(const FiniteLattice& l,
                               Exec exec = Exec::parallel);

// For join-irreducible j and x with j not below x, x ∨ j is join-irreducible
// within [x, top]. Witness (j, x).
PropertyCheck is_consistent(const FiniteLattice& l, Exec exec = Exec::parallel);

// For j join-irreducible, m meet-irreducible, j not below m:
// j ∨ m == m^*  iff  j ∧ m == j_*. Witness (j, m).
PropertyCheck is_balanced(const FiniteLattice& l, Exec exec = Exec::parallel);

// Kurosh-Ore replacement property for join-decompositions: between any two
// irredundant join-decompositions of the same element into join-irreducibles,
// each part of one can be replaced by a part of the other. Witness (a, j).
PropertyCheck has_join_korp(const FiniteLattice& l, const Caps& caps = Caps{});

struct PropertyReport {
  PropertyCheck semimodular, atomistic, dually_atomistic, geometric,
      distributive, strong, dually_strong, consistent, balanced, korp;
  std::vector<int> standard;  // standard elements, ascending
};

PropertyReport check_properties(const FiniteLattice& l,
                                const Caps& caps = Caps{},
                                Exec exec = Exec::parallel);

}  // namespace declat

#endif  // DECLAT_LATTICE_PROPS_HPP
