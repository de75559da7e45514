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

// Built-in family corpus for exhaustive verification: all small labeled
// graphs, seeded random graphs and relations, linear orders, all small
// trees up to isomorphism, and a handful of named families.

#ifndef DECLAT_CORPUS_HPP
#define DECLAT_CORPUS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "declat/caps.hpp"
#include "declat/instances.hpp"
#include "declat/set_family.hpp"

namespace declat {

struct CorpusEntry {
  std::string name;
  std::string kind;  // graph | relation | linear_order | tree | family
  SetFamily family;
  std::optional<TreeInstance> tree;  // present for tree entries
};

// Selectors: "small-graphs" (all labeled graphs on up to 4 vertices),
// "linear-orders" (sizes 1..5), "trees" (all trees with up to 6 edges, one
// per isomorphism class), "all" (the above plus seeded random graphs on 5
// and 6 vertices, relation families, and the named families).
std::vector<CorpusEntry> build_corpus(const std::string& selector,
                                      std::uint64_t seed,
                                      const Caps& caps = Caps{});

// All trees with up to max_edges edges, one representative per isomorphism
// class, ordered by size then by canonical shape.
std::vector<TreeInstance> tree_catalog(int max_edges);

// Named standalone families.
SetFamily nested_family(const Caps& caps = Caps{});     // chain over 3 elements
SetFamily powerset_family(int n, const Caps& caps = Caps{});
SetFamily union_gap_family(const Caps& caps = Caps{});  // closure + I0 + I2, I1 fails

}  // namespace declat

#endif  // DECLAT_CORPUS_HPP
