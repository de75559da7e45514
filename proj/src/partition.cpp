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

#include "declat/partition.hpp"

#include <algorithm>
#include <numeric>

#include "declat/errors.hpp"

namespace declat {

Partition::Partition(int n, std::vector<Subset> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n < 1 || n > kMaxGroundSize)
    throw DomainError("partition ground size must be in [1, 64], got " +
                      std::to_string(n));
  Subset seen = 0;
  for (Subset b : blocks_) {
    if (b == 0) throw DomainError("partition block is empty");
    if (!subset_of(b, full_set(n)))
      throw DomainError("partition block " + set_label(b) +
                        " leaves ground set of size " + std::to_string(n));
    if (b & seen)
      throw DomainError("partition blocks overlap at " + set_label(b & seen));
    seen |= b;
  }
  if (seen != full_set(n))
    throw DomainError("partition misses elements " +
                      set_label(full_set(n) & ~seen));
  std::sort(blocks_.begin(), blocks_.end(),
            [](Subset a, Subset b) { return min_element(a) < min_element(b); });
  block_of_.assign(n, -1);
  for (int i = 0; i < static_cast<int>(blocks_.size()); ++i)
    for (int e : set_elements(blocks_[i])) block_of_[e] = i;
}

Partition Partition::finest(int n) {
  std::vector<Subset> blocks;
  blocks.reserve(n);
  for (int i = 0; i < n; ++i) blocks.push_back(Subset{1} << i);
  return Partition(n, std::move(blocks));
}

Partition Partition::coarsest(int n) { return Partition(n, {full_set(n)}); }

Partition Partition::with_block(int n, Subset a) {
  if (a == 0) throw DomainError("with_block needs a nonempty block");
  std::vector<Subset> blocks{a};
  for (int i = 0; i < n; ++i)
    if (!set_contains(a, i)) blocks.push_back(Subset{1} << i);
  return Partition(n, std::move(blocks));
}

bool Partition::refines(const Partition& coarser) const {
  if (n_ != coarser.n_)
    throw DomainError("refines across different ground sets");
  for (Subset b : blocks_)
    if (!subset_of(b, coarser.block_containing(min_element(b)))) return false;
  return true;
}

std::string Partition::label() const {
  std::string out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += "|";
    bool first = true;
    for (int e : set_elements(blocks_[i])) {
      if (!first && n_ > 10) out += ",";
      out += std::to_string(e);
      first = false;
    }
  }
  return out;
}

Partition meet(const Partition& p, const Partition& q) {
  if (p.ground_size() != q.ground_size())
    throw DomainError("meet across different ground sets");
  std::vector<Subset> blocks;
  for (Subset a : p.blocks())
    for (Subset b : q.blocks())
      if (a & b) blocks.push_back(a & b);
  return Partition(p.ground_size(), std::move(blocks));
}

Partition join(const Partition& p, const Partition& q) {
  int n = p.ground_size();
  if (n != q.ground_size())
    throw DomainError("join across different ground sets");
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const Partition* part : {&p, &q})
    for (Subset b : part->blocks()) {
      int head = min_element(b);
      for (int e : set_elements(b)) unite(head, e);
    }
  std::vector<Subset> acc(n, 0);
  for (int e = 0; e < n; ++e) acc[find(e)] |= Subset{1} << e;
  std::vector<Subset> blocks;
  for (Subset b : acc)
    if (b) blocks.push_back(b);
  return Partition(n, std::move(blocks));
}

bool partition_less(const Partition& p, const Partition& q) {
  if (p.block_count() != q.block_count())
    return p.block_count() > q.block_count();
  return p.rgs() < q.rgs();
}

std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  std::vector<Subset> blocks;
  auto rec = [&](auto&& self, int elem) -> void {
    if (elem == n) {
      out.emplace_back(n, blocks);
      return;
    }
    const std::size_t existing = blocks.size();
    for (std::size_t i = 0; i < existing; ++i) {
      blocks[i] |= Subset{1} << elem;
      self(self, elem + 1);
      blocks[i] &= ~(Subset{1} << elem);
    }
    blocks.push_back(Subset{1} << elem);
    self(self, elem + 1);
    blocks.pop_back();
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), partition_less);
  return out;
}

}  // namespace declat
