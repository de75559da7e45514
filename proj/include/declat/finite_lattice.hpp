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

#ifndef DECLAT_FINITE_LATTICE_HPP
#define DECLAT_FINITE_LATTICE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "declat/bits.hpp"
#include "declat/exec.hpp"

namespace declat {

// A finite lattice over elements 0..m-1 with precomputed order closure,
// covers and join/meet tables. Construction verifies that the relation is a
// partial order and that all joins/meets exist, so instances are lattices by
// construction; violations raise StructureError with a witness.
class FiniteLattice {
 public:
  FiniteLattice() = default;

  // leq is the full order relation (reflexive, antisymmetric, transitive).
  static FiniteLattice from_leq(const BitMatrix& leq, Exec exec = Exec::parallel);

  int size() const { return m_; }
  bool leq(int a, int b) const { return up_.test(a, b); }
  int join(int a, int b) const { return join_[idx(a, b)]; }
  int meet(int a, int b) const { return meet_[idx(a, b)]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  // Fold over a set of elements; empty folds yield bottom resp. top.
  int join_all(const std::vector<int>& xs) const;
  int meet_all(const std::vector<int>& xs) const;

  bool covers(int lo, int hi) const { return cover_.test(lo, hi); }
  // All cover pairs (lo, hi), ascending lexicographic.
  const std::vector<std::pair<int, int>>& cover_pairs() const { return covers_; }
  const std::vector<int>& lower_covers(int a) const { return lower_covers_[a]; }
  const std::vector<int>& upper_covers(int a) const { return upper_covers_[a]; }
  const std::vector<int>& atoms() const { return upper_covers_[bottom_]; }
  const std::vector<int>& coatoms() const { return lower_covers_[top_]; }

  // Row-bitset views of the order; up.row(a) = {x : a <= x}.
  const BitMatrix& up() const { return up_; }
  const BitMatrix& down() const { return down_; }

  // Length of a longest bottom-to-x cover chain, per element.
  const std::vector<int>& heights() const { return heights_; }

  FiniteLattice dual(Exec exec = Exec::serial) const;

  // The interval [lo, hi] as its own lattice; members (ascending element
  // indices of this lattice) are written to *members when given.
  FiniteLattice interval_sublattice(int lo, int hi,
                                    std::vector<int>* members = nullptr,
                                    Exec exec = Exec::serial) const;

 private:
  std::size_t idx(int a, int b) const {
    return static_cast<std::size_t>(a) * m_ + b;
  }

  int m_ = 0;
  BitMatrix up_, down_, cover_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> lower_covers_, upper_covers_;
  std::vector<std::int32_t> join_, meet_;
  std::vector<int> heights_;
  int bottom_ = -1, top_ = -1;
};

}  // namespace declat

#endif  // DECLAT_FINITE_LATTICE_HPP
