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

#ifndef DECLAT_IRREDUCIBLES_HPP
#define DECLAT_IRREDUCIBLES_HPP

#include <optional>
#include <vector>

#include "declat/caps.hpp"
#include "declat/decomp_lattice.hpp"
#include "declat/finite_lattice.hpp"
#include "declat/partition.hpp"
#include "declat/set_family.hpp"

namespace declat {

// A (completely) join- or meet-irreducible element with its star: the unique
// lower cover j_* for join-irreducibles, the unique upper cover m^* for
// meet-irreducibles.
struct Irreducible {
  int elem;
  int star;
};

// Elements x != bottom with a single lower cover, ascending.
std::vector<Irreducible> join_irreducibles(const FiniteLattice& l);
// Elements x != top with a single upper cover, ascending.
std::vector<Irreducible> meet_irreducibles(const FiniteLattice& l);

// Join of everything strictly below a (a != bottom) resp. meet of everything
// strictly above a (a != top).
int lower_star(const FiniteLattice& l, int a);
int upper_star(const FiniteLattice& l, int a);

// The greatest decomposition of (A, F|A) other than {A} itself, if the
// proper decompositions have a greatest element; blocks are returned as
// subsets of the original ground set, sorted by least element. A must be a
// nonempty member.
std::optional<std::vector<Subset>> greatest_proper_decomposition(
    const SetFamily& f, Subset a, const Caps& caps = Caps{});

struct CharacterizedIrreducible {
  Subset member;                   // A, with |A| >= 2
  std::vector<Subset> gpd_blocks;  // its greatest proper decomposition
};

// All members admitting a greatest proper decomposition. For families with
// singletons and the empty set, the induced partitions (A as one block,
// singletons elsewhere) are exactly the join-irreducible decompositions.
std::vector<CharacterizedIrreducible> characterize_join_irreducibles(
    const SetFamily& f, const Caps& caps = Caps{});

}  // namespace declat

#endif  // DECLAT_IRREDUCIBLES_HPP
