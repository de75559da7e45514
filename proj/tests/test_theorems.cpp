#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "declat/corpus.hpp"
#include "declat/decomp_lattice.hpp"
#include "declat/instances.hpp"
#include "declat/lattice_props.hpp"
#include "declat/theorems.hpp"

using namespace declat;

namespace {

SetFamily random_closed_family(std::mt19937_64& rng) {
  int n = 2 + static_cast<int>(rng() % 4);
  std::vector<Subset> sets = {0, full_set(n)};
  for (int e = 0; e < n; ++e) sets.push_back(Subset{1} << e);
  const int extra = 1 + static_cast<int>(rng() % 6);
  for (int i = 0; i < extra; ++i) sets.push_back(rng() & full_set(n));
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Subset> cur = sets;
    for (Subset a : cur)
      for (Subset b : cur)
        if (std::find(sets.begin(), sets.end(), a & b) == sets.end()) {
          sets.push_back(a & b);
          grew = true;
        }
  }
  return SetFamily(n, sets);
}

std::vector<TheoremCheck> family_checks(const DecompLattice& d) {
  return {verify_lattice_bounds(d),
          verify_sublattice_flag(d),
          verify_join_generation(d),
          verify_single_merge_covers(d),
          verify_union_closed_semimodular(d),
          verify_irreducible_characterization(d),
          verify_gpd_blocks_strong(d),
          verify_lower_star_strong(d),
          verify_atomistic_equivalences(d),
          verify_strong_decompositions_standard(d),
          verify_standard_split_identity(d),
          verify_interval_balanced_korp(d),
          verify_nonfragile_strong(d),
          verify_strong_family_axioms(d),
          verify_restrictions_preserve_axioms(d),
          verify_glued_by_geometric_interval(d)};
}

std::vector<TheoremCheck> lattice_checks(const FiniteLattice& l) {
  return {verify_semimodular_equivalences(l), verify_korp_consistent_agree(l),
          verify_balanced_strong_duality(l), verify_semimodular_dually_strong(l),
          verify_glued_matches_equivalences(l)};
}

FiniteLattice from_pairs(int m, const std::vector<std::pair<int, int>>& ps) {
  BitMatrix leq(m, m);
  for (int a = 0; a < m; ++a) leq.set(a, a);
  for (auto [a, b] : ps) leq.set(a, b);
  for (int k = 0; k < m; ++k)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (leq.test(a, k) && leq.test(k, b)) leq.set(a, b);
  return FiniteLattice::from_leq(leq);
}

}  // namespace

TEST_CASE("every family-level check holds on named families") {
  std::vector<SetFamily> pool = {
      nested_family(), powerset_family(1), powerset_family(2),
      powerset_family(3), union_gap_family(), linear_order_intervals(4),
      tree_subtrees(TreeInstance(4, {{0, 1}, {0, 2}, {0, 3}}))};
  for (const SetFamily& f : pool) {
    DecompLattice d = build_lattice(f);
    for (const TheoremCheck& c : family_checks(d)) {
      CAPTURE(c.detail);
      CHECK(c.ok());
    }
  }
}

TEST_CASE("every family-level check holds on random closed families") {
  std::mt19937_64 rng(113);
  for (int it = 0; it < 60; ++it) {
    DecompLattice d = build_lattice(random_closed_family(rng));
    for (const TheoremCheck& c : family_checks(d)) {
      CAPTURE(c.detail);
      CHECK(c.ok());
    }
  }
}

TEST_CASE("every family-level check holds across the graph and tree corpus") {
  for (const CorpusEntry& e : build_corpus("small-graphs", 7)) {
    DecompLattice d = build_lattice(e.family);
    for (const TheoremCheck& c : family_checks(d)) {
      CAPTURE(e.name);
      CAPTURE(c.detail);
      CHECK(c.ok());
    }
  }
  for (const CorpusEntry& e : build_corpus("trees", 7)) {
    DecompLattice d = build_lattice(e.family);
    REQUIRE(e.tree.has_value());
    CHECK(verify_tree_boolean_isomorphism(*e.tree));
    for (const TheoremCheck& c : family_checks(d)) {
      CAPTURE(e.name);
      CAPTURE(c.detail);
      CHECK(c.ok());
    }
  }
}

TEST_CASE("interval-only checks skip families that fail the axioms") {
  DecompLattice d = build_lattice(union_gap_family());
  REQUIRE_FALSE(d.axioms.i1);
  CHECK_FALSE(verify_union_closed_semimodular(d).applicable);
  CHECK_FALSE(verify_gpd_blocks_strong(d).applicable);
  CHECK_FALSE(verify_atomistic_equivalences(d).applicable);
  CHECK_FALSE(verify_interval_balanced_korp(d).applicable);
  CHECK_FALSE(verify_glued_by_geometric_interval(d).applicable);
  // and indeed its lattice is not semimodular
  CHECK_FALSE(is_semimodular(d.lattice).holds);
  // applicability follows the axiom bit, not the lattice shape
  DecompLattice ok = build_lattice(nested_family());
  CHECK(verify_union_closed_semimodular(ok).applicable);
}

TEST_CASE("lattice-level checks hold on named and random lattices") {
  FiniteLattice n5 =
      from_pairs(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
  FiniteLattice m3 =
      from_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
  FiniteLattice b3 = from_pairs(
      8, {{0, 1}, {0, 2}, {0, 4}, {1, 3}, {2, 3}, {1, 5}, {4, 5},
          {2, 6}, {4, 6}, {3, 7}, {5, 7}, {6, 7}});
  for (const FiniteLattice& l : {n5, m3, b3}) {
    for (const TheoremCheck& c : lattice_checks(l)) {
      CAPTURE(c.detail);
      CHECK(c.ok());
    }
  }
  // the dual-strength implication only engages on semimodular inputs
  CHECK_FALSE(verify_semimodular_dually_strong(n5).applicable);
  CHECK(verify_semimodular_dually_strong(m3).applicable);
  for (const TheoremCheck& c : lattice_checks(b3)) CHECK(c.applicable);
  std::mt19937_64 rng(127);
  for (int it = 0; it < 30; ++it) {
    DecompLattice d = build_lattice(random_closed_family(rng));
    for (const TheoremCheck& c : lattice_checks(d.lattice)) {
      CAPTURE(c.detail);
      CHECK(c.ok());
    }
  }
}

TEST_CASE("tampered inputs make the checks fail loudly") {
  DecompLattice d = build_lattice(powerset_family(3));

  DecompLattice flag = d;
  flag.sublattice_of_partitions = !flag.sublattice_of_partitions;
  TheoremCheck c1 = verify_sublattice_flag(flag);
  CHECK(c1.applicable);
  CHECK_FALSE(c1.pass);
  CHECK_FALSE(c1.detail.empty());

  DecompLattice axioms = d;
  axioms.axioms.i1 = false;
  CHECK_FALSE(verify_union_closed_semimodular(axioms).applicable);

  // swapping two elements desynchronizes labels from the order
  DecompLattice swapped = d;
  std::swap(swapped.elements[1], swapped.elements[2]);
  bool bounds_break = !verify_lattice_bounds(swapped).ok();
  bool join_break = !verify_join_generation(swapped).ok();
  CHECK((bounds_break || join_break));
}

TEST_CASE("check details name the first counterexample") {
  DecompLattice d = build_lattice(union_gap_family());
  TheoremCheck c = verify_sublattice_flag(d);
  CHECK(c.ok());  // flag correctly says "not a sublattice"
  DecompLattice lied = d;
  lied.sublattice_of_partitions = true;
  TheoremCheck c2 = verify_sublattice_flag(lied);
  CHECK_FALSE(c2.ok());
  CHECK(c2.detail.find("overlapping-union") != std::string::npos);
}
