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

#ifndef DECLAT_PARTITION_HPP
#define DECLAT_PARTITION_HPP

#include <string>
#include <vector>

#include "declat/bits.hpp"

namespace declat {

// A partition of {0, ..., n-1}. Blocks are stored sorted by least element,
// so equal partitions compare equal structurally.
class Partition {
 public:
  Partition() = default;
  Partition(int n, std::vector<Subset> blocks);

  static Partition finest(int n);
  static Partition coarsest(int n);
  // One block A, everything else singletons. A must be nonempty.
  static Partition with_block(int n, Subset a);

  int ground_size() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Subset>& blocks() const { return blocks_; }
  int block_index_of(int elem) const { return block_of_[elem]; }
  Subset block_containing(int elem) const { return blocks_[block_of_[elem]]; }

  // Restricted-growth string: block_of_[0..n), with block ids in order of
  // first appearance. This is the tie-breaking key of the canonical order.
  const std::vector<int>& rgs() const { return block_of_; }

  bool refines(const Partition& coarser) const;

  // "01|2" when n <= 10, otherwise comma-separated elements per block.
  std::string label() const;

  bool operator==(const Partition& o) const {
    return n_ == o.n_ && blocks_ == o.blocks_;
  }

 private:
  int n_ = 0;
  std::vector<Subset> blocks_;
  std::vector<int> block_of_;
};

Partition meet(const Partition& p, const Partition& q);
Partition join(const Partition& p, const Partition& q);

// Canonical order: finer partitions first (more blocks), ties broken by the
// restricted-growth string, ascending. finest() is first, coarsest() last.
bool partition_less(const Partition& p, const Partition& q);

// Every partition of {0..n-1} in canonical order. Exponential; intended for
// small n (oracles, brute-force lattices).
std::vector<Partition> all_partitions(int n);

}  // namespace declat

#endif  // DECLAT_PARTITION_HPP
