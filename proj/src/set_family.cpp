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

#include "declat/set_family.hpp"

#include <algorithm>

#include "declat/errors.hpp"

namespace declat {

SetFamily::SetFamily(int n, std::vector<Subset> sets, const Caps& caps)
    : n_(n), sets_(std::move(sets)) {
  if (n < 1 || n > kMaxGroundSize)
    throw DomainError("family ground size must be in [1, 64], got " +
                      std::to_string(n));
  if (n > caps.max_ground)
    throw ResourceError("ground size " + std::to_string(n) +
                        " exceeds ground size cap " +
                        std::to_string(caps.max_ground));
  for (Subset s : sets_)
    if (!subset_of(s, full_set(n)))
      throw DomainError("member " + set_label(s) +
                        " leaves ground set of size " + std::to_string(n));
  std::sort(sets_.begin(), sets_.end(), SubsetLess{});
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
  if (sets_.size() > caps.max_family)
    throw ResourceError("family size " + std::to_string(sets_.size()) +
                        " exceeds family size cap " +
                        std::to_string(caps.max_family));
}

bool SetFamily::contains(Subset s) const {
  return std::binary_search(sets_.begin(), sets_.end(), s, SubsetLess{});
}

AxiomReport check_axioms(const SetFamily& f) {
  AxiomReport r;
  r.closure_top = f.contains(f.universe());

  r.i0 = true;
  if (!f.contains(0)) {
    r.i0 = false;
    r.i0_witness = 0;
  } else {
    for (int e = 0; e < f.ground_size(); ++e)
      if (!f.contains(Subset{1} << e)) {
        r.i0 = false;
        r.i0_witness = Subset{1} << e;
        break;
      }
  }

  const auto& sets = f.sets();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      Subset a = sets[i], b = sets[j];
      if (r.closure_intersections && !f.contains(a & b)) {
        r.closure_intersections = false;
        r.closure_witness = {a, b};
      }
      if (!(a & b)) continue;
      if (r.i1 && !f.contains(a | b)) {
        r.i1 = false;
        r.i1_witness = {a, b};
      }
      if (r.i2 && !subset_of(a, b) && !subset_of(b, a)) {
        if (!f.contains(a & ~b))
          r.i2 = false, r.i2_witness = {a, b};
        else if (!f.contains(b & ~a))
          r.i2 = false, r.i2_witness = {b, a};
      }
      if (!r.closure_intersections && !r.i1 && !r.i2) return r;
    }
  }
  return r;
}

bool is_strong_set(const SetFamily& f, Subset a) {
  if (!f.contains(a))
    throw DomainError("is_strong_set: " + set_label(a) + " is not a member");
  for (Subset x : f.sets())
    if ((x & a) && !subset_of(x, a) && !subset_of(a, x)) return false;
  return true;
}

bool is_fragile_set(const SetFamily& f, Subset a,
                    std::pair<Subset, Subset>* witness) {
  if (!f.contains(a))
    throw DomainError("is_fragile_set: " + set_label(a) + " is not a member");
  for (Subset b : f.sets()) {
    if (b == 0 || !subset_of(b, a) || b == a) continue;
    Subset c = a & ~b;
    if (f.contains(c)) {
      if (witness) *witness = subset_less(b, c) ? std::pair{b, c} : std::pair{c, b};
      return true;
    }
  }
  return false;
}

std::vector<Subset> strong_sets(const SetFamily& f) {
  std::vector<Subset> out;
  for (Subset a : f.sets())
    if (is_strong_set(f, a)) out.push_back(a);
  return out;
}

SetFamily restrict_to(const SetFamily& f, Subset a) {
  if (a == 0) throw DomainError("restrict_to needs a nonempty set");
  if (!subset_of(a, f.universe()))
    throw DomainError("restrict_to: " + set_label(a) + " leaves the ground set");
  std::vector<int> elems = set_elements(a);
  std::vector<Subset> traced;
  traced.reserve(f.size());
  for (Subset x : f.sets()) {
    Subset t = 0;
    for (std::size_t k = 0; k < elems.size(); ++k)
      if (set_contains(x, elems[k])) t |= Subset{1} << k;
    traced.push_back(t);
  }
  return SetFamily(static_cast<int>(elems.size()), std::move(traced));
}

}  // namespace declat
