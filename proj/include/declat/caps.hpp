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

#ifndef DECLAT_CAPS_HPP
#define DECLAT_CAPS_HPP

#include <cstddef>

namespace declat {

// Resource caps. Exceeding any of them raises ResourceError naming the cap;
// nothing is silently truncated.
struct Caps {
  int max_ground = 24;                          // ground set size
  std::size_t max_family = std::size_t{1} << 20;  // family member count
  std::size_t max_lattice = 100000;             // decomposition lattice size
  int max_graph_brute = 15;                     // graph/relation instance size
  int max_tree_brute = 12;                      // tree instance size
  std::size_t max_irreducibles = 64;            // join-irreducibles per element scan
  std::size_t max_join_decomp = 8;              // irredundant join-decomposition size
  std::size_t max_block_enum = 512;             // exhaustive tolerance-block search
};

}  // namespace declat

#endif  // DECLAT_CAPS_HPP
