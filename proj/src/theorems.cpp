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

#include "declat/theorems.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "declat/errors.hpp"
#include "declat/irreducibles.hpp"
#include "declat/lattice_props.hpp"
#include "declat/tolerance.hpp"

namespace declat {

namespace {

TheoremCheck not_applicable() {
  TheoremCheck c;
  c.applicable = false;
  return c;
}

TheoremCheck failed(std::string detail) {
  TheoremCheck c;
  c.pass = false;
  c.detail = std::move(detail);
  return c;
}

std::string lab(const DecompLattice& d, int e) {
  return d.elements[static_cast<std::size_t>(e)].label();
}

std::string pair_text(const DecompLattice& d, int a, int b) {
  return "(" + lab(d, a) + ", " + lab(d, b) + ")";
}

bool is_improper(Subset s, int n) {
  return set_size(s) <= 1 || s == full_set(n);
}

// Indices of decompositions all of whose blocks are strong sets.
std::vector<int> strong_decomposition_indices(const DecompLattice& d) {
  std::vector<Subset> strong = strong_sets(d.family);
  std::set<Subset> strong_set(strong.begin(), strong.end());
  std::vector<int> out;
  for (std::size_t e = 0; e < d.elements.size(); ++e) {
    bool all = true;
    for (Subset b : d.elements[e].blocks())
      if (!strong_set.count(b)) {
        all = false;
        break;
      }
    if (all) out.push_back(static_cast<int>(e));
  }
  return out;
}

}  // namespace

TheoremCheck verify_lattice_bounds(const DecompLattice& d) {
  if (!d.axioms.closure_system()) return not_applicable();
  const FiniteLattice& l = d.lattice;
  const int m = l.size();
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      Partition pm = meet(d.elements[a], d.elements[b]);
      int im = d.index_of(pm);
      if (im < 0)
        return failed("blockwise intersection of " + pair_text(d, a, b) +
                      " is not a decomposition");
      if (im != l.meet(a, b))
        return failed("meet of " + pair_text(d, a, b) +
                      " differs from the blockwise intersection");
      Partition pj = join(d.elements[a], d.elements[b]);
      int lj = l.join(a, b);
      if (!pj.refines(d.elements[static_cast<std::size_t>(lj)]))
        return failed("join of " + pair_text(d, a, b) +
                      " is below the partition join");
      int ij = d.index_of(pj);
      if (ij >= 0 && ij != lj)
        return failed("partition join of " + pair_text(d, a, b) +
                      " is a decomposition but not the lattice join");
    }
  return {};
}

TheoremCheck verify_sublattice_flag(const DecompLattice& d) {
  if (!d.axioms.closure_system()) return not_applicable();
  if (d.sublattice_of_partitions == d.axioms.i1) return {};
  return failed(std::string("sublattice flag is ") +
                (d.sublattice_of_partitions ? "true" : "false") +
                " but the overlapping-union axiom is " +
                (d.axioms.i1 ? "true" : "false"));
}

TheoremCheck verify_join_generation(const DecompLattice& d) {
  if (!d.axioms.closure_system() || !d.axioms.i0) return not_applicable();
  const int n = d.ground_size();
  for (std::size_t e = 0; e < d.elements.size(); ++e) {
    std::vector<int> parts;
    for (Subset b : d.elements[e].blocks()) {
      int idx = d.index_of(Partition::with_block(n, b));
      if (idx < 0)
        return failed("single-block decomposition for " + set_label(b) +
                      " is missing");
      parts.push_back(idx);
    }
    int joined = d.lattice.join_all(parts);
    if (joined != static_cast<int>(e))
      return failed(lab(d, static_cast<int>(e)) +
                    " is not the join of its single-block decompositions");
  }
  return {};
}

TheoremCheck verify_single_merge_covers(const DecompLattice& d) {
  if (!d.axioms.closure_system()) return not_applicable();
  for (auto [lo, hi] : d.lattice.cover_pairs()) {
    const Partition& fine = d.elements[static_cast<std::size_t>(lo)];
    const Partition& coarse = d.elements[static_cast<std::size_t>(hi)];
    std::set<Subset> fine_blocks(fine.blocks().begin(), fine.blocks().end());
    int merged = 0;
    Subset merged_block = 0;
    for (Subset b : coarse.blocks())
      if (!fine_blocks.count(b)) {
        ++merged;
        merged_block = b;
      }
    if (merged != 1)
      return failed("cover " + pair_text(d, lo, hi) + " changes " +
                    std::to_string(merged) + " blocks, expected exactly 1");
    int parts = 0;
    for (Subset b : fine.blocks())
      if (subset_of(b, merged_block)) ++parts;
    if (parts < 2)
      return failed("cover " + pair_text(d, lo, hi) +
                    " merges fewer than two blocks");
  }
  return {};
}

TheoremCheck verify_union_closed_semimodular(const DecompLattice& d,
                                             Exec exec) {
  if (!d.axioms.closure_system() || !d.axioms.i1) return not_applicable();
  PropertyCheck c = is_semimodular(d.lattice, exec);
  if (c.holds) return {};
  return failed("semimodularity fails at " +
                pair_text(d, c.witness[0], c.witness[1]));
}

TheoremCheck verify_irreducible_characterization(const DecompLattice& d,
                                                 const Caps& caps) {
  if (!d.axioms.closure_system() || !d.axioms.i0) return not_applicable();
  const int n = d.ground_size();
  std::vector<Irreducible> brute = join_irreducibles(d.lattice);
  std::vector<CharacterizedIrreducible> chars =
      characterize_join_irreducibles(d.family, caps);

  std::vector<int> brute_idx;
  for (const Irreducible& j : brute) brute_idx.push_back(j.elem);
  std::vector<int> char_idx;
  for (const CharacterizedIrreducible& c : chars) {
    int idx = d.index_of(Partition::with_block(n, c.member));
    if (idx < 0)
      return failed("characterized member " + set_label(c.member) +
                    " has no single-block decomposition");
    char_idx.push_back(idx);
  }
  std::sort(char_idx.begin(), char_idx.end());
  if (brute_idx != char_idx)
    return failed("join-irreducibles from covers and from greatest proper "
                  "decompositions disagree (" +
                  std::to_string(brute_idx.size()) + " vs " +
                  std::to_string(char_idx.size()) + ")");

  // The lower cover of each irreducible is its greatest proper
  // decomposition padded with singletons.
  for (const CharacterizedIrreducible& c : chars) {
    int idx = d.index_of(Partition::with_block(n, c.member));
    std::vector<Subset> blocks = c.gpd_blocks;
    for (int v = 0; v < n; ++v)
      if (!set_contains(c.member, v)) blocks.push_back(make_set({v}));
    Partition expected(n, blocks);
    int star = lower_star(d.lattice, idx);
    if (!(d.elements[static_cast<std::size_t>(star)] == expected))
      return failed("lower cover of " + lab(d, idx) +
                    " is not its greatest proper decomposition");
  }
  return {};
}

TheoremCheck verify_gpd_blocks_strong(const DecompLattice& d,
                                      const Caps& caps) {
  if (!d.axioms.interval_system()) return not_applicable();
  for (const CharacterizedIrreducible& c :
       characterize_join_irreducibles(d.family, caps)) {
    for (Subset b : c.gpd_blocks)
      if (!is_strong_set(d.family, b))
        return failed("greatest-proper-decomposition block " + set_label(b) +
                      " of " + set_label(c.member) + " is not strong");
    if (c.gpd_blocks.size() >= 3 && !is_strong_set(d.family, c.member))
      return failed("member " + set_label(c.member) +
                    " splits into three or more blocks but is not strong");
  }
  return {};
}

TheoremCheck verify_lower_star_strong(const DecompLattice& d) {
  if (!d.axioms.interval_system()) return not_applicable();
  for (const Irreducible& j : join_irreducibles(d.lattice))
    for (Subset b : d.elements[static_cast<std::size_t>(j.star)].blocks())
      if (!is_strong_set(d.family, b))
        return failed("lower cover of " + lab(d, j.elem) +
                      " has non-strong block " + set_label(b));
  return {};
}

TheoremCheck verify_atomistic_equivalences(const DecompLattice& d,
                                           const Caps& caps, Exec exec) {
  (void)caps;
  if (!d.axioms.interval_system()) return not_applicable();
  bool atomistic = is_atomistic(d.lattice, exec).holds;
  bool geometric = is_geometric(d.lattice, exec).holds;
  bool dually = is_dually_atomistic(d.lattice, exec).holds;
  bool no_proper = true;
  for (Subset s : strong_sets(d.family))
    if (!is_improper(s, d.ground_size())) {
      no_proper = false;
      break;
    }
  if (atomistic == geometric && geometric == dually && dually == no_proper)
    return {};
  auto t = [](bool b) { return b ? "true" : "false"; };
  return failed(std::string("conditions diverge: atomistic=") + t(atomistic) +
                " geometric=" + t(geometric) +
                " dually-atomistic=" + t(dually) +
                " no-proper-strong=" + t(no_proper));
}

TheoremCheck verify_strong_decompositions_standard(const DecompLattice& d,
                                                   const Caps& caps,
                                                   Exec exec) {
  if (!d.axioms.closure_system()) return not_applicable();
  const FiniteLattice& l = d.lattice;
  std::vector<int> sd = strong_decomposition_indices(d);

  for (int e : sd) {
    PropertyCheck c = is_standard_element(l, e, exec);
    if (!c.holds)
      return failed("strong decomposition " + lab(d, e) +
                    " is not standard; splits fail at " +
                    pair_text(d, c.witness[0], c.witness[1]));
  }

  std::set<int> sd_set(sd.begin(), sd.end());
  for (int a : sd)
    for (int b : sd) {
      if (!sd_set.count(l.join(a, b)))
        return failed("join of strong decompositions " + pair_text(d, a, b) +
                      " is not strong");
      if (!sd_set.count(l.meet(a, b)))
        return failed("meet of strong decompositions " + pair_text(d, a, b) +
                      " is not strong");
      // Also a sublattice of the partition lattice.
      Partition pj = join(d.elements[static_cast<std::size_t>(a)],
                          d.elements[static_cast<std::size_t>(b)]);
      if (!(pj == d.elements[static_cast<std::size_t>(l.join(a, b))]))
        return failed("join of strong decompositions " + pair_text(d, a, b) +
                      " differs from their partition join");
    }

  // The strong members form their own family; its decompositions must be
  // exactly the strong decompositions.
  SetFamily strong_family(d.ground_size(), strong_sets(d.family), caps);
  std::vector<Partition> sd_enum = enumerate_decompositions(strong_family, caps);
  if (sd_enum.size() != sd.size())
    return failed("strong-member family has " +
                  std::to_string(sd_enum.size()) +
                  " decompositions, expected " + std::to_string(sd.size()));
  for (std::size_t k = 0; k < sd.size(); ++k)
    if (!(sd_enum[k] == d.elements[static_cast<std::size_t>(sd[k])]))
      return failed("strong-member family decompositions diverge at " +
                    sd_enum[k].label());

  // Distributivity of the induced lattice.
  const int k = static_cast<int>(sd.size());
  BitMatrix leq(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (l.leq(sd[static_cast<std::size_t>(i)],
                sd[static_cast<std::size_t>(j)]))
        leq.set(i, j);
  try {
    FiniteLattice sdl = FiniteLattice::from_leq(leq, exec);
    PropertyCheck c = is_distributive(sdl, exec);
    if (!c.holds)
      return failed("strong decompositions fail distributivity at (" +
                    lab(d, sd[static_cast<std::size_t>(c.witness[0])]) + ", " +
                    lab(d, sd[static_cast<std::size_t>(c.witness[1])]) + ", " +
                    lab(d, sd[static_cast<std::size_t>(c.witness[2])]) + ")");
  } catch (const StructureError& err) {
    return failed(std::string("strong decompositions do not form a lattice: ") +
                  err.what());
  }
  return {};
}

TheoremCheck verify_standard_split_identity(const DecompLattice& d,
                                            Exec exec) {
  if (!d.axioms.interval_system()) return not_applicable();
  const FiniteLattice& l = d.lattice;
  std::vector<Irreducible> irr = join_irreducibles(l);
  const long long m = l.size();
  const long long total = static_cast<long long>(irr.size()) * m;
  long long bad = find_first(total, exec, [&](long long f) {
    const Irreducible& j = irr[static_cast<std::size_t>(f / m)];
    int x = static_cast<int>(f % m);
    return l.meet(j.elem, l.join(j.star, x)) !=
           l.join(j.star, l.meet(j.elem, x));
  });
  if (bad < 0) return {};
  const Irreducible& j = irr[static_cast<std::size_t>(bad / m)];
  return failed("split identity fails for irreducible " + lab(d, j.elem) +
                " at " + lab(d, static_cast<int>(bad % m)));
}

TheoremCheck verify_interval_balanced_korp(const DecompLattice& d,
                                           const Caps& caps, Exec exec) {
  if (!d.axioms.interval_system()) return not_applicable();
  const FiniteLattice& l = d.lattice;
  PropertyCheck balanced = is_balanced(l, exec);
  if (!balanced.holds)
    return failed("balance fails at " +
                  pair_text(d, balanced.witness[0], balanced.witness[1]));
  PropertyCheck korp = has_join_korp(l, caps);
  if (!korp.holds)
    return failed("join replacement fails for " + lab(d, korp.witness[0]) +
                  " at part " + lab(d, korp.witness[1]));
  PropertyCheck strong = is_strong_lattice(l, exec);
  if (!strong.holds)
    return failed("strength fails at " +
                  pair_text(d, strong.witness[0], strong.witness[1]));
  PropertyCheck consistent = is_consistent(l, exec);
  if (!consistent.holds)
    return failed("consistency fails at " +
                  pair_text(d, consistent.witness[0], consistent.witness[1]));
  return {};
}

TheoremCheck verify_nonfragile_strong(const DecompLattice& d) {
  if (!d.axioms.interval_system()) return not_applicable();
  for (Subset a : d.family.sets()) {
    if (a == 0) continue;
    if (!is_fragile_set(d.family, a) && !is_strong_set(d.family, a))
      return failed("nonfragile member " + set_label(a) + " is not strong");
  }
  return {};
}

TheoremCheck verify_strong_family_axioms(const DecompLattice& d,
                                         const Caps& caps) {
  if (!d.axioms.closure_system()) return not_applicable();
  SetFamily strong_family(d.ground_size(), strong_sets(d.family), caps);
  AxiomReport rep = check_axioms(strong_family);
  if (!rep.closure_system())
    return failed("strong members are not intersection-closed at (" +
                  set_label(rep.closure_witness.first) + ", " +
                  set_label(rep.closure_witness.second) + ")");
  if (!rep.i1)
    return failed("strong members break the overlapping-union axiom at (" +
                  set_label(rep.i1_witness.first) + ", " +
                  set_label(rep.i1_witness.second) + ")");
  if (!rep.i2)
    return failed("strong members break the difference axiom at (" +
                  set_label(rep.i2_witness.first) + ", " +
                  set_label(rep.i2_witness.second) + ")");
  if (d.axioms.i0 && !rep.i0)
    return failed("strong members miss " + set_label(rep.i0_witness));
  return {};
}

TheoremCheck verify_restrictions_preserve_axioms(const DecompLattice& d,
                                                 const Caps& caps) {
  if (!d.axioms.closure_system()) return not_applicable();
  for (Subset a : d.family.sets()) {
    if (a == 0) continue;
    SetFamily sub = restrict_to(d.family, a);
    (void)caps;
    AxiomReport rep = check_axioms(sub);
    if (!rep.closure_system())
      return failed("restriction to " + set_label(a) +
                    " is not a closure system");
    if (d.axioms.interval_system() && !rep.interval_system())
      return failed("restriction to " + set_label(a) +
                    " is not an interval system");
  }
  return {};
}

TheoremCheck verify_glued_by_geometric_interval(const DecompLattice& d,
                                                const Caps& caps, Exec exec) {
  if (!d.axioms.interval_system()) return not_applicable();
  if (is_glued_by_geometric(d.lattice, caps, exec)) return {};
  return failed("some skeleton block is not geometric");
}

TheoremCheck verify_semimodular_equivalences(const FiniteLattice& l,
                                             const Caps& caps, Exec exec) {
  bool semi = is_semimodular(l, exec).holds;
  bool korp = has_join_korp(l, caps).holds;
  bool balanced = is_balanced(l, exec).holds;
  bool consistent = is_consistent(l, exec).holds;
  bool strong = is_strong_lattice(l, exec).holds;
  bool a = semi && korp, b = semi && balanced, c = semi && consistent,
       e = semi && strong;
  if (a == b && b == c && c == e) return {};
  auto t = [](bool v) { return v ? "true" : "false"; };
  return failed(std::string("with semimodularity ") + t(semi) +
                ": replacement=" + t(korp) + " balanced=" + t(balanced) +
                " consistent=" + t(consistent) + " strong=" + t(strong));
}

TheoremCheck verify_korp_consistent_agree(const FiniteLattice& l,
                                          const Caps& caps, Exec exec) {
  bool korp = has_join_korp(l, caps).holds;
  bool consistent = is_consistent(l, exec).holds;
  if (korp == consistent) return {};
  return failed(std::string("replacement property is ") +
                (korp ? "true" : "false") + " but consistency is " +
                (consistent ? "true" : "false"));
}

TheoremCheck verify_balanced_strong_duality(const FiniteLattice& l,
                                            Exec exec) {
  bool balanced = is_balanced(l, exec).holds;
  bool both = is_strong_lattice(l, exec).holds && is_dually_strong(l, exec).holds;
  if (balanced == both) return {};
  return failed(std::string("balanced is ") + (balanced ? "true" : "false") +
                " but strong-on-both-sides is " + (both ? "true" : "false"));
}

TheoremCheck verify_semimodular_dually_strong(const FiniteLattice& l,
                                              Exec exec) {
  if (!is_semimodular(l, exec).holds) return not_applicable();
  PropertyCheck c = is_dually_strong(l, exec);
  if (c.holds) return {};
  return failed("dual strength fails at (" + std::to_string(c.witness[0]) +
                ", " + std::to_string(c.witness[1]) + ")");
}

TheoremCheck verify_glued_matches_equivalences(const FiniteLattice& l,
                                               const Caps& caps, Exec exec) {
  bool glued = is_glued_by_geometric(l, caps, exec);
  bool semi_strong = is_semimodular(l, exec).holds &&
                     is_strong_lattice(l, exec).holds;
  if (glued == semi_strong) return {};
  return failed(std::string("glued-by-geometric is ") +
                (glued ? "true" : "false") + " but semimodular-and-strong is " +
                (semi_strong ? "true" : "false"));
}

}  // namespace declat
