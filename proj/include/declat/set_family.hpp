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

#ifndef DECLAT_SET_FAMILY_HPP
#define DECLAT_SET_FAMILY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "declat/bits.hpp"
#include "declat/caps.hpp"

namespace declat {

// A family of subsets of {0, ..., n-1}, deduplicated and kept in canonical
// order (ascending size, then lexicographic on element sequences).
class SetFamily {
 public:
  SetFamily() = default;
  SetFamily(int n, std::vector<Subset> sets, const Caps& caps = Caps{});

  int ground_size() const { return n_; }
  Subset universe() const { return full_set(n_); }
  std::size_t size() const { return sets_.size(); }
  const std::vector<Subset>& sets() const { return sets_; }
  bool contains(Subset s) const;

 private:
  int n_ = 0;
  std::vector<Subset> sets_;
};

// Axiom battery for a family. Flags are independent; each failure carries
// one concrete witness.
struct AxiomReport {
  bool closure_top = false;           // universe is a member
  bool closure_intersections = true;  // pairwise intersections are members
  std::pair<Subset, Subset> closure_witness{0, 0};

  bool i0 = false;       // empty set and all singletons are members
  Subset i0_witness = 0;  // first missing required set

  bool i1 = true;  // overlapping members have their union in the family
  std::pair<Subset, Subset> i1_witness{0, 0};

  bool i2 = true;  // overlapping incomparable members have both differences
  std::pair<Subset, Subset> i2_witness{0, 0};  // .first's difference missing

  bool closure_system() const { return closure_top && closure_intersections; }
  bool interval_system() const { return closure_system() && i0 && i1 && i2; }
};

AxiomReport check_axioms(const SetFamily& f);

// A is strong when every member overlapping it is comparable to it.
// Requires A to be a member.
bool is_strong_set(const SetFamily& f, Subset a);

// A is fragile when it splits into two disjoint nonempty members.
// Witness receives such a pair (canonical order) when given.
bool is_fragile_set(const SetFamily& f, Subset a,
                    std::pair<Subset, Subset>* witness = nullptr);

// All strong members, canonical order.
std::vector<Subset> strong_sets(const SetFamily& f);

// The trace family {X ∩ A : X ∈ F} re-indexed to {0, ..., |A|-1} by
// ascending element of A. A must be nonempty.
SetFamily restrict_to(const SetFamily& f, Subset a);

}  // namespace declat

#endif  // DECLAT_SET_FAMILY_HPP
