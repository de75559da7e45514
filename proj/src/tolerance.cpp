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

#include "declat/tolerance.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "declat/errors.hpp"
#include "declat/lattice_props.hpp"

namespace declat {

namespace {

long long count_bits(const BitMatrix& rel) {
  long long total = 0;
  for (int a = 0; a < rel.rows(); ++a) total += rel.row_count(a);
  return total;
}

// Plain word-vector set for clique search on lattices past 64 elements.
using WordSet = std::vector<std::uint64_t>;

WordSet ws_make(int n) { return WordSet((n + 63) / 64, 0); }

void ws_add(WordSet& s, int i) { s[i >> 6] |= std::uint64_t{1} << (i & 63); }

void ws_remove(WordSet& s, int i) {
  s[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

bool ws_test(const WordSet& s, int i) {
  return (s[i >> 6] >> (i & 63)) & 1;
}

bool ws_empty(const WordSet& s) {
  for (std::uint64_t w : s)
    if (w) return false;
  return true;
}

int ws_count_and(const WordSet& a, const WordSet& b) {
  int total = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    total += std::popcount(a[k] & b[k]);
  return total;
}

WordSet ws_and(const WordSet& a, const WordSet& b) {
  WordSet out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] & b[k];
  return out;
}

template <typename Fn>
void ws_for_each(const WordSet& s, Fn&& fn) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    std::uint64_t w = s[k];
    while (w) {
      fn(static_cast<int>(k * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
}

// Bron-Kerbosch with pivoting over the tolerance graph (diagonal ignored),
// collecting every maximal clique as an element list.
void bron_kerbosch(const std::vector<WordSet>& adj, std::vector<int>& r,
                   WordSet p, WordSet x, std::vector<std::vector<int>>& out) {
  if (ws_empty(p) && ws_empty(x)) {
    out.push_back(r);
    return;
  }
  int pivot = -1, best = -1;
  auto consider = [&](int u) {
    int deg = ws_count_and(p, adj[u]);
    if (deg > best) {
      best = deg;
      pivot = u;
    }
  };
  ws_for_each(p, consider);
  ws_for_each(x, consider);
  std::vector<int> cand;
  ws_for_each(p, [&](int v) {
    if (!ws_test(adj[pivot], v)) cand.push_back(v);
  });
  for (int v : cand) {
    r.push_back(v);
    bron_kerbosch(adj, r, ws_and(p, adj[v]), ws_and(x, adj[v]), out);
    r.pop_back();
    ws_remove(p, v);
    ws_add(x, v);
  }
}

std::vector<ToleranceBlock> blocks_by_cliques(const FiniteLattice& l,
                                              const BitMatrix& rel) {
  const int m = l.size();
  std::vector<WordSet> adj(m, ws_make(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && rel.test(a, b)) ws_add(adj[a], b);

  std::vector<std::vector<int>> cliques;
  WordSet p = ws_make(m);
  for (int v = 0; v < m; ++v) ws_add(p, v);
  std::vector<int> r;
  bron_kerbosch(adj, r, std::move(p), ws_make(m), cliques);

  std::vector<ToleranceBlock> blocks;
  blocks.reserve(cliques.size());
  for (auto& elems : cliques) {
    std::sort(elems.begin(), elems.end());
    ToleranceBlock blk;
    blk.lo = l.meet_all(elems);
    blk.hi = l.join_all(elems);
    // For a compatible tolerance each block must be the whole interval.
    std::vector<int> interval;
    for (int e = 0; e < m; ++e)
      if (l.leq(blk.lo, e) && l.leq(e, blk.hi)) interval.push_back(e);
    if (interval != elems)
      throw StructureError("tolerance block with bounds " +
                           std::to_string(blk.lo) + ".." +
                           std::to_string(blk.hi) +
                           " is not the full interval between its bounds");
    if (m <= kMaxGroundSize)
      for (int e : elems) blk.members |= Subset{1} << e;
    blocks.push_back(blk);
  }
  return blocks;
}

// Interval-hull route for lattices too large for clique enumeration.
// r(u) joins everything related to u; l(v) meets everything related to v.
// Alternating the two hulls from each element converges on a block.
std::vector<ToleranceBlock> blocks_by_hulls(const FiniteLattice& l,
                                            const BitMatrix& rel) {
  const int m = l.size();
  auto r_of = [&](int u) {
    std::vector<int> related;
    for (int b = 0; b < m; ++b)
      if (rel.test(u, b)) related.push_back(b);
    return l.join_all(related);
  };
  auto l_of = [&](int v) {
    std::vector<int> related;
    for (int b = 0; b < m; ++b)
      if (rel.test(v, b)) related.push_back(b);
    return l.meet_all(related);
  };

  std::vector<ToleranceBlock> blocks;
  auto have = [&](int lo, int hi) {
    for (const auto& b : blocks)
      if (b.lo == lo && b.hi == hi) return true;
    return false;
  };
  for (int u = 0; u < m; ++u) {
    int hi = r_of(u);
    int lo = l_of(hi);
    for (int guard = 0; guard < m; ++guard) {
      int hi2 = r_of(lo);
      int lo2 = l_of(hi2);
      if (hi2 == hi && lo2 == lo) break;
      hi = hi2;
      lo = lo2;
    }
    if (have(lo, hi)) continue;
    // Verify the interval is pairwise related.
    std::vector<int> elems;
    for (int e = 0; e < m; ++e)
      if (l.leq(lo, e) && l.leq(e, hi)) elems.push_back(e);
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = i + 1; j < elems.size(); ++j)
        if (!rel.test(elems[i], elems[j]))
          throw StructureError("hull interval " + std::to_string(lo) + ".." +
                               std::to_string(hi) +
                               " contains an unrelated pair");
    ToleranceBlock blk;
    blk.lo = lo;
    blk.hi = hi;
    if (m <= kMaxGroundSize)
      for (int e : elems) blk.members |= Subset{1} << e;
    blocks.push_back(blk);
  }
  // Drop intervals strictly inside another (non-maximal cliques).
  std::vector<ToleranceBlock> maximal;
  for (const auto& b : blocks) {
    bool inside = false;
    for (const auto& c : blocks) {
      if (b.lo == c.lo && b.hi == c.hi) continue;
      if (l.leq(c.lo, b.lo) && l.leq(b.hi, c.hi)) {
        inside = true;
        break;
      }
    }
    if (!inside) maximal.push_back(b);
  }
  return maximal;
}

}  // namespace

ToleranceCheck check_tolerance(const FiniteLattice& l, const BitMatrix& rel,
                               Exec exec) {
  const long long m = l.size();
  if (rel.rows() != m || rel.cols() != m)
    throw DomainError("tolerance relation has wrong shape");
  ToleranceCheck c;
  for (int a = 0; a < m; ++a) {
    if (!rel.test(a, a)) {
      c.reflexive = false;
      c.witness = {a, a};
      return c;
    }
  }
  long long bad = find_first(m * m, exec, [&](long long f) {
    int a = static_cast<int>(f / m), b = static_cast<int>(f % m);
    return rel.test(a, b) != rel.test(b, a);
  });
  if (bad >= 0) {
    c.symmetric = false;
    c.witness = {static_cast<int>(bad / m), static_cast<int>(bad % m)};
    return c;
  }
  // The full relation is the subalgebra L x L; nothing to scan.
  if (count_bits(rel) == m * m) return c;
  // Compatibility: related (a,b) and (c,d) force related joins and meets.
  // Quantifying over the related-pair list only; same violations, just a
  // denser index space.
  std::vector<std::pair<int, int>> prs;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (rel.test(a, b)) prs.emplace_back(a, b);
  const long long r = static_cast<long long>(prs.size());
  bad = find_first(r * r, exec, [&](long long f) {
    auto [a, b] = prs[static_cast<std::size_t>(f / r)];
    auto [cc, d] = prs[static_cast<std::size_t>(f % r)];
    return !rel.test(l.join(a, cc), l.join(b, d)) ||
           !rel.test(l.meet(a, cc), l.meet(b, d));
  });
  if (bad >= 0) {
    c.compatible = false;
    auto [a, b] = prs[static_cast<std::size_t>(bad / r)];
    auto [cc, d] = prs[static_cast<std::size_t>(bad % r)];
    c.witness = {a, b, cc, d};
  }
  return c;
}

BitMatrix tolerance_closure(const FiniteLattice& l,
                            const std::vector<std::pair<int, int>>& seeds,
                            Exec exec) {
  const int m = l.size();
  BitMatrix rel(m, m);
  for (int a = 0; a < m; ++a) rel.set(a, a);

  // Ordered pair list; every related pair appears in both directions so
  // the products (join of firsts, join of seconds) cover all combinations.
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(seeds.size() * 2 + m);
  for (int a = 0; a < m; ++a) pairs.emplace_back(a, a);
  for (auto [a, b] : seeds) {
    if (a < 0 || a >= m || b < 0 || b >= m)
      throw DomainError("tolerance seed pair (" + std::to_string(a) + ", " +
                        std::to_string(b) + ") out of range");
    if (rel.set_atomic(a, b)) pairs.emplace_back(a, b);
    if (rel.set_atomic(b, a)) pairs.emplace_back(b, a);
  }

  // Every fresh bit appends exactly one ordered pair, so a pair list of
  // m*m entries means the full relation: nothing left to add.
  const std::size_t full = static_cast<std::size_t>(m) * m;
  if (exec == Exec::serial) {
    // Worklist: each new ordered pair is combined with everything known.
    for (std::size_t head = 0; head < pairs.size() && pairs.size() < full;
         ++head) {
      auto [a, b] = pairs[head];
      for (std::size_t k = 0; k <= head; ++k) {
        auto [c, d] = pairs[k];
        int ja = l.join(a, c), jb = l.join(b, d);
        if (rel.set_atomic(ja, jb)) pairs.emplace_back(ja, jb);
        if (rel.set_atomic(jb, ja)) pairs.emplace_back(jb, ja);
        int ma = l.meet(a, c), mb = l.meet(b, d);
        if (rel.set_atomic(ma, mb)) pairs.emplace_back(ma, mb);
        if (rel.set_atomic(mb, ma)) pairs.emplace_back(mb, ma);
      }
    }
    return rel;
  }

  // Parallel rounds: combine the last round's fresh pairs against the
  // whole accumulated list; set_atomic claims each bit exactly once.
  std::size_t frontier_begin = 0;
  while (frontier_begin < pairs.size()) {
    const std::size_t frontier_end = pairs.size();
    std::vector<std::vector<std::pair<int, int>>> found(frontier_end -
                                                        frontier_begin);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::size_t h = frontier_begin; h < frontier_end; ++h) {
      auto [a, b] = pairs[h];
      auto& mine = found[h - frontier_begin];
      for (std::size_t k = 0; k < frontier_end; ++k) {
        auto [c, d] = pairs[k];
        int ja = l.join(a, c), jb = l.join(b, d);
        if (rel.set_atomic(ja, jb)) mine.emplace_back(ja, jb);
        if (rel.set_atomic(jb, ja)) mine.emplace_back(jb, ja);
        int ma = l.meet(a, c), mb = l.meet(b, d);
        if (rel.set_atomic(ma, mb)) mine.emplace_back(ma, mb);
        if (rel.set_atomic(mb, ma)) mine.emplace_back(mb, ma);
      }
    }
    frontier_begin = frontier_end;
    for (auto& bucket : found)
      for (auto pr : bucket) pairs.push_back(pr);
    if (pairs.size() >= full) break;
  }
  return rel;
}

BitMatrix skeleton_tolerance(const FiniteLattice& l, Exec exec) {
  return tolerance_closure(l, l.cover_pairs(), exec);
}

std::vector<ToleranceBlock> tolerance_blocks(const FiniteLattice& l,
                                             const BitMatrix& rel,
                                             const Caps& caps, Exec exec) {
  ToleranceCheck chk = check_tolerance(l, rel, exec);
  if (!chk.valid())
    throw DomainError("relation is not a compatible tolerance");

  std::vector<ToleranceBlock> blocks =
      static_cast<std::size_t>(l.size()) <= caps.max_block_enum
          ? blocks_by_cliques(l, rel)
          : blocks_by_hulls(l, rel);

  std::sort(blocks.begin(), blocks.end(),
            [](const ToleranceBlock& a, const ToleranceBlock& b) {
              if (a.lo != b.lo) return a.lo < b.lo;
              return a.hi < b.hi;
            });

  // Every related pair must live inside some block.
  const int m = l.size();
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      if (!rel.test(a, b)) continue;
      bool covered = false;
      for (const auto& blk : blocks) {
        if (l.leq(blk.lo, a) && l.leq(a, blk.hi) && l.leq(blk.lo, b) &&
            l.leq(b, blk.hi)) {
          covered = true;
          break;
        }
      }
      if (!covered)
        throw StructureError("related pair (" + std::to_string(a) + ", " +
                             std::to_string(b) + ") lies in no block");
    }
  return blocks;
}

FiniteLattice factor_lattice(const FiniteLattice& l,
                             const std::vector<ToleranceBlock>& blocks,
                             Exec exec) {
  const int k = static_cast<int>(blocks.size());
  if (k == 0) throw DomainError("factor lattice of an empty block list");
  BitMatrix leq(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (l.leq(blocks[i].lo, blocks[j].lo) &&
          l.leq(blocks[i].hi, blocks[j].hi))
        leq.set(i, j);
  return FiniteLattice::from_leq(leq, exec);
}

bool is_glued_tolerance(const FiniteLattice& l, const BitMatrix& rel) {
  for (auto [a, b] : l.cover_pairs())
    if (!rel.test(a, b)) return false;
  return true;
}

bool is_glued_by_geometric(const FiniteLattice& l, const Caps& caps,
                           Exec exec) {
  BitMatrix skel = skeleton_tolerance(l, exec);
  std::vector<ToleranceBlock> blocks = tolerance_blocks(l, skel, caps, exec);
  for (const auto& blk : blocks) {
    FiniteLattice piece = l.interval_sublattice(blk.lo, blk.hi, nullptr, exec);
    if (!is_geometric(piece, exec).holds) return false;
  }
  return true;
}

}  // namespace declat
