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

#include "declat/instances.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "declat/decomp_lattice.hpp"
#include "declat/errors.hpp"
#include "declat/partition.hpp"

namespace declat {

namespace {

void check_vertex_range(int v, int n, const char* what) {
  if (v < 0 || v >= n)
    throw DomainError(std::string(what) + " references vertex " +
                      std::to_string(v) + " outside 0.." +
                      std::to_string(n - 1));
}

void validate_edges(int n, const std::vector<std::pair<int, int>>& edges,
                    const char* what) {
  if (n < 1) throw DomainError(std::string(what) + " needs n >= 1");
  if (n > kMaxGroundSize)
    throw DomainError(std::string(what) + " supports at most " +
                      std::to_string(kMaxGroundSize) + " vertices");
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    check_vertex_range(a, n, what);
    check_vertex_range(b, n, what);
    if (a == b)
      throw DomainError(std::string(what) + " has a loop at vertex " +
                        std::to_string(a));
    auto key = std::minmax(a, b);
    if (!seen.insert(key).second)
      throw DomainError(std::string(what) + " repeats edge (" +
                        std::to_string(key.first) + ", " +
                        std::to_string(key.second) + ")");
  }
}

std::vector<Subset> adjacency_masks(int n,
                                    const std::vector<std::pair<int, int>>& edges) {
  std::vector<Subset> adj(n, 0);
  for (auto [a, b] : edges) {
    adj[a] |= Subset{1} << b;
    adj[b] |= Subset{1} << a;
  }
  return adj;
}

bool connected_in(const std::vector<Subset>& adj, Subset x) {
  if (x == 0) return false;
  Subset visited = Subset{1} << std::countr_zero(x);
  Subset frontier = visited;
  while (frontier) {
    Subset next = 0;
    for (Subset t = frontier; t;) {
      int v = std::countr_zero(t);
      t &= t - 1;
      next |= adj[v] & x;
    }
    frontier = next & ~visited;
    visited |= next;
  }
  return visited == x;
}

}  // namespace

GraphInstance::GraphInstance(int n_vertices,
                             std::vector<std::pair<int, int>> edge_list)
    : n(n_vertices), edges(std::move(edge_list)) {
  validate_edges(n, edges, "graph");
}

TreeInstance::TreeInstance(int n_vertices,
                           std::vector<std::pair<int, int>> edge_list)
    : n(n_vertices), edges(std::move(edge_list)) {
  validate_edges(n, edges, "tree");
  if (static_cast<int>(edges.size()) != n - 1)
    throw DomainError("tree on " + std::to_string(n) + " vertices needs " +
                      std::to_string(n - 1) + " edges, got " +
                      std::to_string(edges.size()));
  std::vector<Subset> adj = adjacency_masks(n, edges);
  if (!connected_in(adj, full_set(n)))
    throw DomainError("tree edge set is not connected");
}

RelationInstance::RelationInstance(int n_elements,
                                   std::vector<std::pair<int, int>> pair_list)
    : n(n_elements), pairs(std::move(pair_list)) {
  if (n < 1) throw DomainError("relation needs n >= 1");
  if (n > kMaxGroundSize)
    throw DomainError("relation supports at most " +
                      std::to_string(kMaxGroundSize) + " elements");
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : pairs) {
    check_vertex_range(a, n, "relation");
    check_vertex_range(b, n, "relation");
    if (!seen.insert({a, b}).second)
      throw DomainError("relation repeats pair (" + std::to_string(a) + ", " +
                        std::to_string(b) + ")");
  }
}

SetFamily linear_order_intervals(int n, const Caps& caps) {
  if (n < 1) throw DomainError("linear order needs n >= 1");
  std::vector<Subset> members;
  members.push_back(0);
  for (int i = 0; i < n; ++i) {
    Subset range = 0;
    for (int j = i; j < n; ++j) {
      range |= Subset{1} << j;
      members.push_back(range);
    }
  }
  return SetFamily(n, members, caps);
}

SetFamily graph_modules(const GraphInstance& g, const Caps& caps) {
  if (g.n > caps.max_graph_brute)
    throw ResourceError("graph has " + std::to_string(g.n) +
                        " vertices, above the brute-force cap " +
                        std::to_string(caps.max_graph_brute));
  std::vector<Subset> adj = adjacency_masks(g.n, g.edges);
  std::vector<Subset> members;
  members.push_back(0);
  const Subset all = full_set(g.n);
  for (Subset x = 1; x <= all; ++x) {
    bool module_set = true;
    for (Subset rest = all & ~x; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      Subset hit = adj[v] & x;
      if (hit != 0 && hit != x) {
        module_set = false;
        break;
      }
    }
    if (module_set) members.push_back(x);
  }
  return SetFamily(g.n, members, caps);
}

SetFamily relation_intervals(const RelationInstance& r, const Caps& caps) {
  if (r.n > caps.max_graph_brute)
    throw ResourceError("relation has " + std::to_string(r.n) +
                        " elements, above the brute-force cap " +
                        std::to_string(caps.max_graph_brute));
  std::vector<Subset> out(r.n, 0), in(r.n, 0);
  for (auto [a, b] : r.pairs) {
    out[a] |= Subset{1} << b;
    in[b] |= Subset{1} << a;
  }
  std::vector<Subset> members;
  members.push_back(0);
  const Subset all = full_set(r.n);
  for (Subset x = 1; x <= all; ++x) {
    bool interval = true;
    for (Subset rest = all & ~x; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      Subset fwd = out[v] & x;   // v -> members of x
      Subset bwd = in[v] & x;    // members of x -> v
      if ((fwd != 0 && fwd != x) || (bwd != 0 && bwd != x)) {
        interval = false;
        break;
      }
    }
    if (interval) members.push_back(x);
  }
  return SetFamily(r.n, members, caps);
}

SetFamily tree_subtrees(const TreeInstance& t, const Caps& caps) {
  if (t.n > caps.max_tree_brute)
    throw ResourceError("tree has " + std::to_string(t.n) +
                        " vertices, above the subtree enumeration cap " +
                        std::to_string(caps.max_tree_brute));
  std::vector<Subset> adj = adjacency_masks(t.n, t.edges);
  std::vector<Subset> members;
  members.push_back(0);
  const Subset all = full_set(t.n);
  for (Subset x = 1; x <= all; ++x)
    if (connected_in(adj, x)) members.push_back(x);
  return SetFamily(t.n, members, caps);
}

RelationInstance symmetrize(const GraphInstance& g) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(g.edges.size() * 2);
  for (auto [a, b] : g.edges) {
    pairs.emplace_back(a, b);
    pairs.emplace_back(b, a);
  }
  return RelationInstance(g.n, std::move(pairs));
}

bool verify_tree_boolean_isomorphism(const TreeInstance& t, const Caps& caps,
                                     Exec exec) {
  SetFamily fam = tree_subtrees(t, caps);
  DecompLattice d = build_lattice(fam, caps, exec);
  const int ne = static_cast<int>(t.edges.size());
  const std::size_t count = std::size_t{1} << ne;
  if (d.elements.size() != count) return false;

  // pi(S): components of the spanning forest keeping only edges in S.
  std::vector<int> index_of_subset(count);
  std::vector<bool> hit(count, false);
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<int> parent(t.n);
    for (int v = 0; v < t.n; ++v) parent[v] = v;
    auto find = [&](int v) {
      while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
      }
      return v;
    };
    for (int e = 0; e < ne; ++e)
      if ((s >> e) & 1) parent[find(t.edges[e].first)] = find(t.edges[e].second);
    std::vector<Subset> blocks(t.n, 0);
    for (int v = 0; v < t.n; ++v) blocks[find(v)] |= Subset{1} << v;
    std::vector<Subset> nonempty;
    for (Subset b : blocks)
      if (b) nonempty.push_back(b);
    int idx = d.index_of(Partition(t.n, nonempty));
    if (idx < 0 || hit[static_cast<std::size_t>(idx)]) return false;
    hit[static_cast<std::size_t>(idx)] = true;
    index_of_subset[s] = idx;
  }
  // Order isomorphism: S1 subset of S2 iff pi(S1) refines pi(S2).
  for (std::size_t s1 = 0; s1 < count; ++s1)
    for (std::size_t s2 = 0; s2 < count; ++s2) {
      bool sub = (s1 & ~s2) == 0;
      if (sub != d.lattice.leq(index_of_subset[s1], index_of_subset[s2]))
        return false;
    }
  return true;
}

}  // namespace declat
