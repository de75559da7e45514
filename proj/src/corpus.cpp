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

#include "declat/corpus.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <utility>

#include "declat/errors.hpp"

namespace declat {

namespace {

std::vector<std::pair<int, int>> vertex_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

std::vector<std::pair<int, int>> edges_of_mask(int n, std::uint64_t mask) {
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> pairs = vertex_pairs(n);
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if ((mask >> k) & 1) edges.push_back(pairs[k]);
  return edges;
}

// Canonical shape string of a tree: the lexicographically least rooted
// encoding over all roots. "(" + sorted child encodings + ")".
std::string rooted_canon(const std::vector<std::vector<int>>& adj, int v,
                         int parent) {
  std::vector<std::string> kids;
  for (int w : adj[v])
    if (w != parent) kids.push_back(rooted_canon(adj, w, v));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const std::string& k : kids) out += k;
  return out + ")";
}

std::string tree_canon(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::string best;
  for (int r = 0; r < n; ++r) {
    std::string c = rooted_canon(adj, r, -1);
    if (best.empty() || c < best) best = c;
  }
  return best;
}

std::vector<std::pair<int, int>> prufer_decode(const std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> degree(n, 1);
  for (int v : seq) ++degree[v];
  std::vector<std::pair<int, int>> edges;
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int v : seq) {
    edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return edges;
}

}  // namespace

std::vector<TreeInstance> tree_catalog(int max_edges) {
  std::vector<TreeInstance> out;
  for (int n = 1; n <= max_edges + 1; ++n) {
    if (n == 1) {
      out.emplace_back(1, std::vector<std::pair<int, int>>{});
      continue;
    }
    if (n == 2) {
      out.emplace_back(2, std::vector<std::pair<int, int>>{{0, 1}});
      continue;
    }
    // One representative per shape: the first decoded tree, keyed by the
    // canonical string, then ordered by that string.
    std::map<std::string, std::vector<std::pair<int, int>>> classes;
    std::vector<int> seq(n - 2, 0);
    for (;;) {
      std::vector<std::pair<int, int>> edges = prufer_decode(seq);
      classes.emplace(tree_canon(n, edges), edges);
      int pos = n - 3;
      while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
      if (pos < 0) break;
      ++seq[pos];
    }
    for (auto& [canon, edges] : classes) {
      std::sort(edges.begin(), edges.end());
      out.emplace_back(n, edges);
    }
  }
  return out;
}

SetFamily nested_family(const Caps& caps) {
  return SetFamily(3,
                   {0, make_set({0}), make_set({1}), make_set({2}),
                    make_set({0, 1}), make_set({0, 1, 2})},
                   caps);
}

SetFamily powerset_family(int n, const Caps& caps) {
  if (n < 1 || n > 20) throw DomainError("powerset family needs 1 <= n <= 20");
  std::vector<Subset> sets;
  for (Subset s = 0; s <= full_set(n); ++s) sets.push_back(s);
  return SetFamily(n, sets, caps);
}

SetFamily union_gap_family(const Caps& caps) {
  return SetFamily(4,
                   {0, make_set({0}), make_set({1}), make_set({2}),
                    make_set({3}), make_set({0, 1}), make_set({1, 2}),
                    make_set({2, 3}), make_set({0, 1, 2, 3})},
                   caps);
}

std::vector<CorpusEntry> build_corpus(const std::string& selector,
                                      std::uint64_t seed, const Caps& caps) {
  const bool all = selector == "all";
  if (!all && selector != "small-graphs" && selector != "linear-orders" &&
      selector != "trees")
    throw DomainError("unknown corpus selector \"" + selector + "\"");

  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, std::string kind, SetFamily family,
                 std::optional<TreeInstance> tree = std::nullopt) {
    out.push_back(CorpusEntry{std::move(name), std::move(kind),
                              std::move(family), std::move(tree)});
  };

  if (all || selector == "small-graphs") {
    for (int n = 1; n <= 4; ++n) {
      const int bits = n * (n - 1) / 2;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        GraphInstance g(n, edges_of_mask(n, mask));
        add("graph-n" + std::to_string(n) + "-m" + std::to_string(mask),
            "graph", graph_modules(g, caps));
      }
    }
  }

  if (all) {
    std::mt19937_64 rng(seed);
    for (int n : {5, 6}) {
      const int bits = n * (n - 1) / 2;
      for (int i = 0; i < 25; ++i) {
        std::uint64_t mask = rng() & ((std::uint64_t{1} << bits) - 1);
        GraphInstance g(n, edges_of_mask(n, mask));
        add("graph-rand-n" + std::to_string(n) + "-i" + std::to_string(i),
            "graph", graph_modules(g, caps));
      }
    }

    for (int n = 2; n <= 4; ++n) {
      std::vector<std::pair<int, int>> pairs;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
      RelationInstance r(n, pairs);
      add("relation-linear-n" + std::to_string(n), "relation",
          relation_intervals(r, caps));
    }
    {
      std::vector<std::pair<int, int>> pairs;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) pairs.emplace_back(i, j);
      add("relation-full-n3", "relation",
          relation_intervals(RelationInstance(3, pairs), caps));
    }
    for (int n : {3, 4}) {
      for (int i = 0; i < 4; ++i) {
        std::uint64_t word = rng();
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            if ((word >> (a * n + b)) & 1) pairs.emplace_back(a, b);
        add("relation-rand-n" + std::to_string(n) + "-i" + std::to_string(i),
            "relation", relation_intervals(RelationInstance(n, pairs), caps));
      }
    }
  }

  if (all || selector == "linear-orders") {
    for (int n = 1; n <= 5; ++n)
      add("linear-order-n" + std::to_string(n), "linear_order",
          linear_order_intervals(n, caps));
  }

  if (all || selector == "trees") {
    std::vector<TreeInstance> trees = tree_catalog(6);
    int last_n = 0, k = 0;
    for (TreeInstance& t : trees) {
      if (t.n != last_n) {
        last_n = t.n;
        k = 0;
      }
      std::string name =
          "tree-n" + std::to_string(t.n) + "-c" + std::to_string(k++);
      SetFamily family = tree_subtrees(t, caps);
      add(std::move(name), "tree", std::move(family), std::move(t));
    }
  }

  if (all) {
    add("family-nested", "family", nested_family(caps));
    for (int n = 1; n <= 3; ++n)
      add("family-powerset-n" + std::to_string(n), "family",
          powerset_family(n, caps));
    add("family-union-gap", "family", union_gap_family(caps));
  }

  return out;
}

}  // namespace declat
