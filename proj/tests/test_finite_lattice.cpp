#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <vector>

#include "declat/errors.hpp"
#include "declat/finite_lattice.hpp"
#include "declat/partition.hpp"

using namespace declat;

namespace {

// Boolean lattice on k bits: element i <= j iff i's bits sit inside j's.
FiniteLattice boolean_lattice(int k) {
  const int m = 1 << k;
  BitMatrix leq(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if ((a & ~b) == 0) leq.set(a, b);
  return FiniteLattice::from_leq(leq);
}

FiniteLattice from_pairs(int m, const std::vector<std::pair<int, int>>& ps) {
  BitMatrix leq(m, m);
  for (int a = 0; a < m; ++a) leq.set(a, a);
  for (auto [a, b] : ps) leq.set(a, b);
  // transitive closure
  for (int k = 0; k < m; ++k)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (leq.test(a, k) && leq.test(k, b)) leq.set(a, b);
  return FiniteLattice::from_leq(leq);
}

// Least upper bound by scanning every element; -1 when none or ambiguous.
int naive_join(const FiniteLattice& l, int a, int b) {
  int best = -1;
  for (int x = 0; x < l.size(); ++x) {
    if (!l.leq(a, x) || !l.leq(b, x)) continue;
    if (best == -1 || l.leq(x, best)) best = x;
  }
  for (int x = 0; x < l.size(); ++x)
    if (l.leq(a, x) && l.leq(b, x) && !l.leq(best, x)) return -1;
  return best;
}

int naive_meet(const FiniteLattice& l, int a, int b) {
  int best = -1;
  for (int x = 0; x < l.size(); ++x) {
    if (!l.leq(x, a) || !l.leq(x, b)) continue;
    if (best == -1 || l.leq(best, x)) best = x;
  }
  for (int x = 0; x < l.size(); ++x)
    if (l.leq(x, a) && l.leq(x, b) && !l.leq(x, best)) return -1;
  return best;
}

bool naive_covers(const FiniteLattice& l, int a, int b) {
  if (a == b || !l.leq(a, b)) return false;
  for (int z = 0; z < l.size(); ++z)
    if (z != a && z != b && l.leq(a, z) && l.leq(z, b)) return false;
  return true;
}

}  // namespace

TEST_CASE("boolean lattice joins and meets are bitwise") {
  FiniteLattice l = boolean_lattice(3);
  REQUIRE(l.size() == 8);
  CHECK(l.bottom() == 0);
  CHECK(l.top() == 7);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      CHECK(l.join(a, b) == (a | b));
      CHECK(l.meet(a, b) == (a & b));
    }
  CHECK(l.atoms() == std::vector<int>{1, 2, 4});
  CHECK(l.coatoms() == std::vector<int>{3, 5, 6});
  for (int a = 0; a < 8; ++a) CHECK(l.heights()[a] == std::popcount(unsigned(a)));
}

TEST_CASE("covers match the two-point interval definition") {
  FiniteLattice l = boolean_lattice(4);
  for (int a = 0; a < l.size(); ++a)
    for (int b = 0; b < l.size(); ++b)
      CHECK(l.covers(a, b) == naive_covers(l, a, b));
  auto pairs = l.cover_pairs();
  CHECK(pairs.size() == 32);  // 16 elements, 4 bits to flip, /2
  CHECK(std::is_sorted(pairs.begin(), pairs.end()));
  for (auto [lo, hi] : pairs) CHECK(naive_covers(l, lo, hi));
}

TEST_CASE("join and meet tables equal order-derived bounds on Part(4)") {
  std::vector<Partition> all = all_partitions(4);
  const int m = static_cast<int>(all.size());
  BitMatrix leq(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (all[a].refines(all[b])) leq.set(a, b);
  FiniteLattice l = FiniteLattice::from_leq(leq);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      CHECK(l.join(a, b) == naive_join(l, a, b));
      CHECK(l.meet(a, b) == naive_meet(l, a, b));
      CHECK(all[l.join(a, b)] == join(all[a], all[b]));
      CHECK(all[l.meet(a, b)] == meet(all[a], all[b]));
    }
}

TEST_CASE("fold operations handle empty input") {
  FiniteLattice l = boolean_lattice(2);
  CHECK(l.join_all({}) == l.bottom());
  CHECK(l.meet_all({}) == l.top());
  CHECK(l.join_all({1, 2}) == 3);
  CHECK(l.meet_all({3, 1}) == 1);
}

TEST_CASE("pentagon and diamond are accepted") {
  // 0 < 1 < 2 < 4 and 0 < 3 < 4
  FiniteLattice n5 = from_pairs(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
  CHECK(n5.join(1, 3) == 4);
  CHECK(n5.meet(2, 3) == 0);
  CHECK(n5.cover_pairs().size() == 5);

  FiniteLattice m3 = from_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4},
                                    {3, 4}});
  CHECK(m3.join(1, 2) == 4);
  CHECK(m3.meet(1, 2) == 0);
}

TEST_CASE("non-lattices are rejected with a structural error") {
  // two maximal elements
  CHECK_THROWS_AS(from_pairs(3, {{0, 1}, {0, 2}}), StructureError);
  // bowtie: {1,2} have two minimal upper bounds {3,4}
  CHECK_THROWS_AS(
      from_pairs(6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4},
                     {3, 5}, {4, 5}}),
      StructureError);
}

TEST_CASE("order-axiom violations are rejected") {
  BitMatrix not_reflexive(2, 2);
  not_reflexive.set(0, 0);
  CHECK_THROWS_AS(FiniteLattice::from_leq(not_reflexive), StructureError);

  BitMatrix cyclic(2, 2);
  cyclic.set(0, 0);
  cyclic.set(1, 1);
  cyclic.set(0, 1);
  cyclic.set(1, 0);
  CHECK_THROWS_AS(FiniteLattice::from_leq(cyclic), StructureError);

  BitMatrix not_transitive(3, 3);
  for (int i = 0; i < 3; ++i) not_transitive.set(i, i);
  not_transitive.set(0, 1);
  not_transitive.set(1, 2);
  CHECK_THROWS_AS(FiniteLattice::from_leq(not_transitive), StructureError);
}

TEST_CASE("dual flips the order and swaps tables") {
  FiniteLattice l = boolean_lattice(3);
  FiniteLattice d = l.dual();
  REQUIRE(d.size() == l.size());
  CHECK(d.bottom() == l.top());
  CHECK(d.top() == l.bottom());
  for (int a = 0; a < l.size(); ++a)
    for (int b = 0; b < l.size(); ++b) {
      CHECK(d.leq(a, b) == l.leq(b, a));
      CHECK(d.join(a, b) == l.meet(a, b));
      CHECK(d.meet(a, b) == l.join(a, b));
    }
}

TEST_CASE("interval sublattice of a boolean lattice is boolean") {
  FiniteLattice l = boolean_lattice(4);
  std::vector<int> members;
  FiniteLattice sub = l.interval_sublattice(1, 11, &members);  // [0001, 1011]
  CHECK(members == std::vector<int>{1, 3, 9, 11});
  REQUIRE(sub.size() == 4);
  CHECK(sub.join(1, 2) == 3);  // {3, 9} join to 11 inside the interval
  CHECK(sub.meet(1, 2) == 0);
  CHECK_THROWS_AS(l.interval_sublattice(3, 4), DomainError);
}

TEST_CASE("one-element lattice works") {
  BitMatrix one(1, 1);
  one.set(0, 0);
  FiniteLattice l = FiniteLattice::from_leq(one);
  CHECK(l.size() == 1);
  CHECK(l.bottom() == 0);
  CHECK(l.top() == 0);
  CHECK(l.cover_pairs().empty());
  CHECK(l.join_all({}) == 0);
}
