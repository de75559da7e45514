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

#include "declat/finite_lattice.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>

#include "declat/errors.hpp"

namespace declat {

namespace {

void atomic_min(std::atomic<long long>& slot, long long value) {
  long long cur = slot.load(std::memory_order_relaxed);
  while (value < cur &&
         !slot.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
  }
}

// First set bit of (row(a) & row(b) [& ~row(u)]), or -1.
int first_common(const BitMatrix& m, int a, int b) {
  const std::uint64_t *ra = m.row(a), *rb = m.row(b);
  for (int w = 0; w < m.words_per_row(); ++w) {
    std::uint64_t word = ra[w] & rb[w];
    if (word) return w * 64 + std::countr_zero(word);
  }
  return -1;
}

int first_common_not(const BitMatrix& m, int a, int b, int u) {
  const std::uint64_t *ra = m.row(a), *rb = m.row(b), *ru = m.row(u);
  for (int w = 0; w < m.words_per_row(); ++w) {
    std::uint64_t word = ra[w] & rb[w] & ~ru[w];
    if (word) return w * 64 + std::countr_zero(word);
  }
  return -1;
}

}  // namespace

FiniteLattice FiniteLattice::from_leq(const BitMatrix& leq, Exec exec) {
  const int m = leq.rows();
  if (m < 1 || leq.cols() != m)
    throw DomainError("order relation must be square and nonempty");

  FiniteLattice l;
  l.m_ = m;
  l.up_ = leq;

  for (int a = 0; a < m; ++a)
    if (!leq.test(a, a))
      throw StructureError("relation is not reflexive at element " +
                           std::to_string(a));

  const long long pairs = static_cast<long long>(m) * m;
  long long bad = find_first(pairs, exec, [&](long long i) {
    int a = static_cast<int>(i / m), b = static_cast<int>(i % m);
    if (a == b || !leq.test(a, b)) return false;
    if (leq.test(b, a)) return true;                // antisymmetry
    return !leq.row_subset_of(b, a) ? true : false;  // transitivity
  });
  if (bad >= 0) {
    int a = static_cast<int>(bad / m), b = static_cast<int>(bad % m);
    if (leq.test(b, a))
      throw StructureError("relation is not antisymmetric: " +
                           std::to_string(a) + " <= " + std::to_string(b) +
                           " <= " + std::to_string(a));
    throw StructureError("relation is not transitive at " + std::to_string(a) +
                         " <= " + std::to_string(b));
  }

  l.down_ = leq.transposed();

  l.bottom_ = l.top_ = -1;
  for (int a = 0; a < m; ++a) {
    if (l.up_.row_count(a) == m) {
      if (l.bottom_ >= 0)
        throw StructureError("two bottom elements: " +
                             std::to_string(l.bottom_) + ", " +
                             std::to_string(a));
      l.bottom_ = a;
    }
    if (l.down_.row_count(a) == m) {
      if (l.top_ >= 0)
        throw StructureError("two top elements: " + std::to_string(l.top_) +
                             ", " + std::to_string(a));
      l.top_ = a;
    }
  }
  if (l.bottom_ < 0) throw StructureError("order has no bottom element");
  if (l.top_ < 0) throw StructureError("order has no top element");

  // Linear extension: |down(a)| strictly grows along the order, so sorting
  // by it gives a topological order. With columns permuted accordingly, the
  // least upper bound of {a, b} is the first set bit of up(a) & up(b).
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> dcount(m);
  for (int a = 0; a < m; ++a) dcount[a] = l.down_.row_count(a);
  std::sort(perm.begin(), perm.end(), [&](int x, int y) {
    return dcount[x] != dcount[y] ? dcount[x] < dcount[y] : x < y;
  });
  std::vector<int> pos(m);
  for (int i = 0; i < m; ++i) pos[perm[i]] = i;

  // up_t: column pos[b], so the first set bit of an intersection is the
  // topologically least common upper bound. down_r reverses the permutation,
  // so the first set bit is the topologically greatest common lower bound.
  BitMatrix up_t(m, m), down_r(m, m);
  for (int a = 0; a < m; ++a)
    for (int b : l.up_.row_elements(a)) {
      up_t.set(a, pos[b]);
      down_r.set(b, m - 1 - pos[a]);
    }

  l.join_.assign(static_cast<std::size_t>(m) * m, -1);
  l.meet_.assign(static_cast<std::size_t>(m) * m, -1);
  std::atomic<long long> bad_join{pairs}, bad_meet{pairs};
  for_each_index(pairs, exec, [&](long long i) {
    int a = static_cast<int>(i / m), b = static_cast<int>(i % m);
    if (a > b) return;
    if (a == b) {
      l.join_[i] = l.meet_[i] = a;
      return;
    }
    int ju = first_common(up_t, a, b);
    if (ju < 0 || first_common_not(up_t, a, b, perm[ju]) >= 0)
      atomic_min(bad_join, i);
    else
      l.join_[i] = l.join_[l.idx(b, a)] = perm[ju];
    int mu = first_common(down_r, a, b);
    if (mu < 0) {
      atomic_min(bad_meet, i);
      return;
    }
    int glb = perm[m - 1 - mu];
    if (first_common_not(down_r, a, b, glb) >= 0)
      atomic_min(bad_meet, i);
    else
      l.meet_[i] = l.meet_[l.idx(b, a)] = glb;
  });
  if (bad_join.load() < pairs) {
    long long i = bad_join.load();
    int a = static_cast<int>(i / m), b = static_cast<int>(i % m);
    throw StructureError("no least upper bound for elements " +
                         std::to_string(a) + ", " + std::to_string(b));
  }
  if (bad_meet.load() < pairs) {
    long long i = bad_meet.load();
    int a = static_cast<int>(i / m), b = static_cast<int>(i % m);
    throw StructureError("no greatest lower bound for elements " +
                         std::to_string(a) + ", " + std::to_string(b));
  }

  l.cover_ = BitMatrix(m, m);
  for_each_index(m, exec, [&](long long row) {
    int a = static_cast<int>(row);
    for (int b = 0; b < m; ++b) {
      if (a == b || !l.up_.test(a, b)) continue;
      // a < b covers when [a, b] has exactly the two endpoints.
      const std::uint64_t *ua = l.up_.row(a), *db = l.down_.row(b);
      int count = 0;
      for (int w = 0; w < l.up_.words_per_row(); ++w)
        count += std::popcount(ua[w] & db[w]);
      if (count == 2) l.cover_.set(a, b);
    }
  });
  l.lower_covers_.assign(m, {});
  l.upper_covers_.assign(m, {});
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (l.cover_.test(a, b)) {
        l.covers_.emplace_back(a, b);
        l.upper_covers_[a].push_back(b);
        l.lower_covers_[b].push_back(a);
      }

  l.heights_.assign(m, 0);
  for (int i = 0; i < m; ++i) {
    int a = perm[i];
    for (int b : l.upper_covers_[a])
      l.heights_[b] = std::max(l.heights_[b], l.heights_[a] + 1);
  }

  return l;
}

int FiniteLattice::join_all(const std::vector<int>& xs) const {
  int acc = bottom_;
  for (int x : xs) acc = join(acc, x);
  return acc;
}

int FiniteLattice::meet_all(const std::vector<int>& xs) const {
  int acc = top_;
  for (int x : xs) acc = meet(acc, x);
  return acc;
}

FiniteLattice FiniteLattice::dual(Exec exec) const {
  return from_leq(up_.transposed(), exec);
}

FiniteLattice FiniteLattice::interval_sublattice(int lo, int hi,
                                                 std::vector<int>* members,
                                                 Exec exec) const {
  if (lo < 0 || lo >= m_ || hi < 0 || hi >= m_ || !leq(lo, hi))
    throw DomainError("interval_sublattice needs lo <= hi");
  std::vector<int> mem;
  for (int x = 0; x < m_; ++x)
    if (leq(lo, x) && leq(x, hi)) mem.push_back(x);
  const int k = static_cast<int>(mem.size());
  BitMatrix sub(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (leq(mem[i], mem[j])) sub.set(i, j);
  if (members) *members = mem;
  return from_leq(sub, exec);
}

}  // namespace declat
