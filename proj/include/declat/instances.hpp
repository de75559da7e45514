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

// Set families built from concrete structures: graph modules, binary
// relation intervals, linear-order intervals, and tree subtrees.

#ifndef DECLAT_INSTANCES_HPP
#define DECLAT_INSTANCES_HPP

#include <utility>
#include <vector>

#include "declat/caps.hpp"
#include "declat/exec.hpp"
#include "declat/set_family.hpp"

namespace declat {

// Simple undirected graph; edges validated (range, no loops, no duplicates).
struct GraphInstance {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  GraphInstance(int n_vertices, std::vector<std::pair<int, int>> edge_list);
};

// Undirected tree: a graph that is connected with exactly n - 1 edges.
struct TreeInstance {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  TreeInstance(int n_vertices, std::vector<std::pair<int, int>> edge_list);
};

// Binary relation as ordered pairs; loops allowed, duplicates rejected.
struct RelationInstance {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;

  RelationInstance(int n_elements, std::vector<std::pair<int, int>> pair_list);
};

// Empty set plus every contiguous range {i..j}.
SetFamily linear_order_intervals(int n, const Caps& caps = Caps{});

// All X such that every vertex outside X is adjacent to all of X or none
// of X, plus the empty set.
SetFamily graph_modules(const GraphInstance& g, const Caps& caps = Caps{});

// All X such that every element outside X relates uniformly to X in both
// directions, plus the empty set.
SetFamily relation_intervals(const RelationInstance& r,
                             const Caps& caps = Caps{});

// Empty set plus every vertex set inducing a connected subgraph.
SetFamily tree_subtrees(const TreeInstance& t, const Caps& caps = Caps{});

// The symmetric loop-free relation carrying the same adjacency as g.
RelationInstance symmetrize(const GraphInstance& g);

// Checks that mapping each edge subset S to the partition whose blocks are
// the components of (V, S) is an order isomorphism from the powerset of E
// onto the decomposition lattice of the subtree family.
bool verify_tree_boolean_isomorphism(const TreeInstance& t,
                                     const Caps& caps = Caps{},
                                     Exec exec = Exec::serial);

}  // namespace declat

#endif  // DECLAT_INSTANCES_HPP
