#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <omp.h>

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "declat/corpus.hpp"
#include "declat/decomp_lattice.hpp"
#include "declat/exec.hpp"
#include "declat/instances.hpp"
#include "declat/lattice_props.hpp"
#include "declat/theorems.hpp"
#include "declat/tolerance.hpp"

using namespace declat;

namespace {

struct ThreadSetup {
  ThreadSetup() { omp_set_num_threads(4); }
};
const ThreadSetup setup;

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

FiniteLattice boolean_lattice(int k) {
  const int m = 1 << k;
  BitMatrix leq(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if ((a & ~b) == 0) leq.set(a, b);
  return FiniteLattice::from_leq(leq);
}

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

std::vector<FiniteLattice> lattice_pool() {
  std::vector<FiniteLattice> pool;
  for (int k = 2; k <= 6; ++k) pool.push_back(boolean_lattice(k));
  pool.push_back(from_pairs(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}));
  pool.push_back(build_lattice(union_gap_family()).lattice);
  pool.push_back(build_lattice(powerset_family(3)).lattice);
  std::mt19937_64 rng(131);
  for (int it = 0; it < 12; ++it)
    pool.push_back(build_lattice(random_closed_family(rng)).lattice);
  return pool;
}

bool same_check(const PropertyCheck& a, const PropertyCheck& b) {
  return a.holds == b.holds && a.witness == b.witness;
}

bool same_check(const TheoremCheck& a, const TheoremCheck& b) {
  return a.applicable == b.applicable && a.pass == b.pass &&
         a.detail == b.detail;
}

bool same_lattice(const FiniteLattice& a, const FiniteLattice& b) {
  return a.size() == b.size() && a.up() == b.up() &&
         a.bottom() == b.bottom() && a.top() == b.top() &&
         a.cover_pairs() == b.cover_pairs();
}

}  // namespace

TEST_CASE("the index scans agree between routes") {
  std::mt19937_64 rng(137);
  for (int it = 0; it < 50; ++it) {
    const long long total = 1 + static_cast<long long>(rng() % 4000);
    const long long target = static_cast<long long>(rng() % (2 * total));
    auto pred = [&](long long i) { return i >= target; };
    CHECK(find_first(total, Exec::serial, pred) ==
          find_first(total, Exec::parallel, pred));
  }
  std::vector<int> hits_serial(300, 0), hits_parallel(300, 0);
  for_each_index(300, Exec::serial,
                 [&](long long i) { hits_serial[static_cast<std::size_t>(i)]++; });
  for_each_index(300, Exec::parallel, [&](long long i) {
    hits_parallel[static_cast<std::size_t>(i)]++;
  });
  CHECK(hits_serial == hits_parallel);
  CHECK(std::all_of(hits_serial.begin(), hits_serial.end(),
                    [](int v) { return v == 1; }));
}

TEST_CASE("order construction is identical on both routes") {
  for (const FiniteLattice& l : lattice_pool()) {
    FiniteLattice rebuilt_s = FiniteLattice::from_leq(l.up(), Exec::serial);
    FiniteLattice rebuilt_p =
        FiniteLattice::from_leq(l.up(), Exec::parallel);
    CHECK(same_lattice(rebuilt_s, rebuilt_p));
    CHECK(same_lattice(rebuilt_s, l));
  }
}

TEST_CASE("property scans return identical witnesses on both routes") {
  for (const FiniteLattice& l : lattice_pool()) {
    CHECK(same_check(is_semimodular(l, Exec::serial),
                     is_semimodular(l, Exec::parallel)));
    CHECK(same_check(is_atomistic(l, Exec::serial),
                     is_atomistic(l, Exec::parallel)));
    CHECK(same_check(is_dually_atomistic(l, Exec::serial),
                     is_dually_atomistic(l, Exec::parallel)));
    CHECK(same_check(is_geometric(l, Exec::serial),
                     is_geometric(l, Exec::parallel)));
    CHECK(same_check(is_distributive(l, Exec::serial),
                     is_distributive(l, Exec::parallel)));
    CHECK(same_check(is_strong_lattice(l, Exec::serial),
                     is_strong_lattice(l, Exec::parallel)));
    CHECK(same_check(is_dually_strong(l, Exec::serial),
                     is_dually_strong(l, Exec::parallel)));
    CHECK(same_check(is_consistent(l, Exec::serial),
                     is_consistent(l, Exec::parallel)));
    CHECK(same_check(is_balanced(l, Exec::serial),
                     is_balanced(l, Exec::parallel)));
    CHECK(standard_elements(l, Exec::serial) ==
          standard_elements(l, Exec::parallel));
    for (int a = 0; a < l.size(); ++a)
      CHECK(same_check(is_standard_element(l, a, Exec::serial),
                       is_standard_element(l, a, Exec::parallel)));
  }
}

TEST_CASE("full property reports are identical on both routes") {
  for (const FiniteLattice& l : lattice_pool()) {
    PropertyReport s = check_properties(l, Caps{}, Exec::serial);
    PropertyReport p = check_properties(l, Caps{}, Exec::parallel);
    CHECK(same_check(s.semimodular, p.semimodular));
    CHECK(same_check(s.atomistic, p.atomistic));
    CHECK(same_check(s.dually_atomistic, p.dually_atomistic));
    CHECK(same_check(s.geometric, p.geometric));
    CHECK(same_check(s.distributive, p.distributive));
    CHECK(same_check(s.strong, p.strong));
    CHECK(same_check(s.dually_strong, p.dually_strong));
    CHECK(same_check(s.consistent, p.consistent));
    CHECK(same_check(s.balanced, p.balanced));
    CHECK(same_check(s.korp, p.korp));
    CHECK(s.standard == p.standard);
  }
}

TEST_CASE("tolerance kernels are identical on both routes") {
  std::mt19937_64 rng(139);
  for (const FiniteLattice& l : lattice_pool()) {
    if (l.size() > 40) continue;
    CHECK(skeleton_tolerance(l, Exec::serial) ==
          skeleton_tolerance(l, Exec::parallel));
    for (int it = 0; it < 6; ++it) {
      std::vector<std::pair<int, int>> seeds;
      int k = static_cast<int>(rng() % 3);
      for (int i = 0; i < k; ++i)
        seeds.emplace_back(static_cast<int>(rng() % l.size()),
                           static_cast<int>(rng() % l.size()));
      BitMatrix rel_s = tolerance_closure(l, seeds, Exec::serial);
      BitMatrix rel_p = tolerance_closure(l, seeds, Exec::parallel);
      CHECK(rel_s == rel_p);
      ToleranceCheck cs = check_tolerance(l, rel_s, Exec::serial);
      ToleranceCheck cp = check_tolerance(l, rel_s, Exec::parallel);
      CHECK(cs.valid() == cp.valid());
      CHECK(cs.witness == cp.witness);
      std::vector<ToleranceBlock> bs = tolerance_blocks(l, rel_s, Caps{},
                                                        Exec::serial);
      std::vector<ToleranceBlock> bp = tolerance_blocks(l, rel_s, Caps{},
                                                        Exec::parallel);
      REQUIRE(bs.size() == bp.size());
      for (std::size_t i = 0; i < bs.size(); ++i) {
        CHECK(bs[i].lo == bp[i].lo);
        CHECK(bs[i].hi == bp[i].hi);
        CHECK(bs[i].members == bp[i].members);
      }
      CHECK(same_lattice(factor_lattice(l, bs, Exec::serial),
                         factor_lattice(l, bs, Exec::parallel)));
    }
  }
}

TEST_CASE("an invalid relation yields the same witness on both routes") {
  FiniteLattice l = boolean_lattice(2);
  BitMatrix rel(l.size(), l.size());
  for (int a = 0; a < l.size(); ++a) rel.set(a, a);
  rel.set(1, 2);
  rel.set(2, 1);
  ToleranceCheck s = check_tolerance(l, rel, Exec::serial);
  ToleranceCheck p = check_tolerance(l, rel, Exec::parallel);
  REQUIRE_FALSE(s.valid());
  CHECK(s.compatible == p.compatible);
  CHECK(s.witness == p.witness);
}

TEST_CASE("lattice building from families is identical on both routes") {
  std::mt19937_64 rng(149);
  for (int it = 0; it < 15; ++it) {
    SetFamily f = random_closed_family(rng);
    DecompLattice s = build_lattice(f, Caps{}, Exec::serial);
    DecompLattice p = build_lattice(f, Caps{}, Exec::parallel);
    REQUIRE(s.elements.size() == p.elements.size());
    for (std::size_t i = 0; i < s.elements.size(); ++i)
      CHECK(s.elements[i].label() == p.elements[i].label());
    CHECK(s.sublattice_of_partitions == p.sublattice_of_partitions);
    CHECK(same_lattice(s.lattice, p.lattice));
  }
}

TEST_CASE("theorem verifiers report identically on both routes") {
  std::mt19937_64 rng(151);
  for (int it = 0; it < 10; ++it) {
    DecompLattice d = build_lattice(random_closed_family(rng));
    CHECK(same_check(verify_union_closed_semimodular(d, Exec::serial),
                     verify_union_closed_semimodular(d, Exec::parallel)));
    CHECK(same_check(verify_atomistic_equivalences(d, Caps{}, Exec::serial),
                     verify_atomistic_equivalences(d, Caps{}, Exec::parallel)));
    CHECK(same_check(
        verify_strong_decompositions_standard(d, Caps{}, Exec::serial),
        verify_strong_decompositions_standard(d, Caps{}, Exec::parallel)));
    CHECK(same_check(verify_standard_split_identity(d, Exec::serial),
                     verify_standard_split_identity(d, Exec::parallel)));
    CHECK(same_check(verify_interval_balanced_korp(d, Caps{}, Exec::serial),
                     verify_interval_balanced_korp(d, Caps{}, Exec::parallel)));
    CHECK(same_check(
        verify_glued_by_geometric_interval(d, Caps{}, Exec::serial),
        verify_glued_by_geometric_interval(d, Caps{}, Exec::parallel)));
    const FiniteLattice& l = d.lattice;
    CHECK(same_check(verify_semimodular_equivalences(l, Caps{}, Exec::serial),
                     verify_semimodular_equivalences(l, Caps{}, Exec::parallel)));
    CHECK(same_check(verify_korp_consistent_agree(l, Caps{}, Exec::serial),
                     verify_korp_consistent_agree(l, Caps{}, Exec::parallel)));
    CHECK(same_check(verify_balanced_strong_duality(l, Exec::serial),
                     verify_balanced_strong_duality(l, Exec::parallel)));
    CHECK(same_check(verify_semimodular_dually_strong(l, Exec::serial),
                     verify_semimodular_dually_strong(l, Exec::parallel)));
    CHECK(same_check(verify_glued_matches_equivalences(l, Caps{}, Exec::serial),
                     verify_glued_matches_equivalences(l, Caps{}, Exec::parallel)));
  }
}
