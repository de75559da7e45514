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

#include "declat/irreducibles.hpp"

#include "declat/errors.hpp"

namespace declat {

std::vector<Irreducible> join_irreducibles(const FiniteLattice& l) {
  std::vector<Irreducible> out;
  for (int x = 0; x < l.size(); ++x)
    if (x != l.bottom() && l.lower_covers(x).size() == 1)
      out.push_back({x, l.lower_covers(x)[0]});
  return out;
}

std::vector<Irreducible> meet_irreducibles(const FiniteLattice& l) {
  std::vector<Irreducible> out;
  for (int x = 0; x < l.size(); ++x)
    if (x != l.top() && l.upper_covers(x).size() == 1)
      out.push_back({x, l.upper_covers(x)[0]});
  return out;
}

int lower_star(const FiniteLattice& l, int a) {
  if (a == l.bottom()) throw DomainError("lower_star of the bottom element");
  int acc = l.bottom();
  for (int x = 0; x < l.size(); ++x)
    if (x != a && l.leq(x, a)) acc = l.join(acc, x);
  return acc;
}

int upper_star(const FiniteLattice& l, int a) {
  if (a == l.top()) throw DomainError("upper_star of the top element");
  int acc = l.top();
  for (int x = 0; x < l.size(); ++x)
    if (x != a && l.leq(a, x)) acc = l.meet(acc, x);
  return acc;
}

std::optional<std::vector<Subset>> greatest_proper_decomposition(
    const SetFamily& f, Subset a, const Caps& caps) {
  if (a == 0) throw DomainError("greatest_proper_decomposition of empty set");
  if (!f.contains(a))
    throw DomainError("greatest_proper_decomposition: " + set_label(a) +
                      " is not a member");
  SetFamily fa = restrict_to(f, a);
  DecompLattice da = build_lattice(fa, caps, Exec::serial);
  const auto& coatoms = da.lattice.coatoms();
  if (coatoms.size() != 1) return std::nullopt;

  std::vector<int> elems = set_elements(a);
  std::vector<Subset> blocks;
  for (Subset b : da.elements[coatoms[0]].blocks()) {
    Subset mapped = 0;
    for (int k : set_elements(b)) mapped |= Subset{1} << elems[k];
    blocks.push_back(mapped);
  }
  return blocks;
}

std::vector<CharacterizedIrreducible> characterize_join_irreducibles(
    const SetFamily& f, const Caps& caps) {
  AxiomReport rep = check_axioms(f);
  if (!rep.i0)
    throw DomainError(
        "characterization needs the empty set and all singletons as members");
  std::vector<CharacterizedIrreducible> out;
  for (Subset a : f.sets()) {
    if (a == 0) continue;
    if (auto gpd = greatest_proper_decomposition(f, a, caps))
      out.push_back({a, std::move(*gpd)});
  }
  return out;
}

}  // namespace declat
