#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "declat/errors.hpp"
#include "declat/partition.hpp"

using namespace declat;

namespace {

// p refines q per the raw definition: each p-block sits inside some q-block.
bool naive_refines(const Partition& p, const Partition& q) {
  for (Subset b : p.blocks()) {
    bool inside = false;
    for (Subset c : q.blocks()) inside = inside || subset_of(b, c);
    if (!inside) return false;
  }
  return true;
}

Partition random_partition(int n, std::mt19937_64& rng) {
  std::vector<int> assign(n);
  int used = 0;
  for (int i = 0; i < n; ++i) {
    assign[i] = static_cast<int>(rng() % (used + 1));
    used = std::max(used, assign[i] + 1);
  }
  std::vector<Subset> blocks(used, 0);
  for (int i = 0; i < n; ++i) blocks[assign[i]] |= Subset{1} << i;
  return Partition(n, blocks);
}

}  // namespace

TEST_CASE("construction normalizes block order") {
  Partition p(3, {make_set({2}), make_set({1, 0})});
  CHECK(p.label() == "01|2");
  CHECK(p.block_count() == 2);
  CHECK(p.blocks()[0] == make_set({0, 1}));
  CHECK(p.block_containing(2) == make_set({2}));
  CHECK(p.block_index_of(1) == 0);
  CHECK(p == Partition(3, {make_set({0, 1}), make_set({2})}));
}

TEST_CASE("construction validates a true partition") {
  CHECK_THROWS_AS(Partition(3, {make_set({0, 1})}), DomainError);
  CHECK_THROWS_AS(Partition(3, {make_set({0, 1}), make_set({1, 2})}),
                  DomainError);
  CHECK_THROWS_AS(Partition(3, {make_set({0, 1}), make_set({2}), Subset{0}}),
                  DomainError);
  CHECK_THROWS_AS(Partition(2, {make_set({0, 1, 2})}), DomainError);
}

TEST_CASE("finest coarsest with_block") {
  CHECK(Partition::finest(3).label() == "0|1|2");
  CHECK(Partition::coarsest(3).label() == "012");
  CHECK(Partition::finest(1) == Partition::coarsest(1));
  CHECK(Partition::with_block(4, make_set({1, 3})).label() == "0|13|2");
  CHECK(Partition::with_block(3, make_set({1})) == Partition::finest(3));
}

TEST_CASE("rgs uses first-appearance ids") {
  Partition p(4, {make_set({1, 3}), make_set({0}), make_set({2})});
  CHECK(p.rgs() == std::vector<int>{0, 1, 2, 1});
}

TEST_CASE("refines matches the definition on all pairs for n=4") {
  std::vector<Partition> all = all_partitions(4);
  REQUIRE(all.size() == 15);
  for (const Partition& p : all)
    for (const Partition& q : all)
      CHECK(p.refines(q) == naive_refines(p, q));
}

TEST_CASE("meet and join are the refinement-order glb and lub") {
  std::vector<Partition> all = all_partitions(4);
  for (const Partition& p : all)
    for (const Partition& q : all) {
      Partition m = meet(p, q);
      CHECK(m.refines(p));
      CHECK(m.refines(q));
      for (const Partition& r : all)
        if (r.refines(p) && r.refines(q)) CHECK(r.refines(m));

      Partition j = join(p, q);
      CHECK(p.refines(j));
      CHECK(q.refines(j));
      for (const Partition& r : all)
        if (p.refines(r) && q.refines(r)) CHECK(j.refines(r));
    }
}

TEST_CASE("meet is blockwise intersection") {
  Partition p(5, {make_set({0, 1, 2}), make_set({3, 4})});
  Partition q(5, {make_set({0, 1}), make_set({2, 3}), make_set({4})});
  CHECK(meet(p, q).label() == "01|2|3|4");
  CHECK(join(p, q).label() == "01234");
}

TEST_CASE("all_partitions counts Bell numbers and is canonically sorted") {
  const int bell[] = {1, 1, 2, 5, 15, 52};
  for (int n = 1; n <= 5; ++n) {
    std::vector<Partition> all = all_partitions(n);
    CHECK(static_cast<int>(all.size()) == bell[n]);
    CHECK(all.front() == Partition::finest(n));
    CHECK(all.back() == Partition::coarsest(n));
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
      CHECK(partition_less(all[i], all[i + 1]));
      CHECK_FALSE(partition_less(all[i + 1], all[i]));
    }
    std::set<std::string> labels;
    for (const Partition& p : all) labels.insert(p.label());
    CHECK(labels.size() == all.size());
  }
}

TEST_CASE("canonical order sorts by block count then rgs") {
  std::vector<Partition> all = all_partitions(3);
  std::vector<std::string> labels;
  for (const Partition& p : all) labels.push_back(p.label());
  CHECK(labels ==
        std::vector<std::string>{"0|1|2", "01|2", "02|1", "0|12", "012"});
}

TEST_CASE("random partitions round-trip through blocks and rgs") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    int n = 1 + static_cast<int>(rng() % 10);
    Partition p = random_partition(n, rng);
    CHECK(p == Partition(n, p.blocks()));
    Subset all = 0;
    for (Subset b : p.blocks()) {
      CHECK((all & b) == 0);
      all |= b;
    }
    CHECK(all == full_set(n));
    for (int e = 0; e < n; ++e)
      CHECK(set_contains(p.block_containing(e), e));
  }
}

TEST_CASE("join via transitive chaining") {
  Partition p(6, {make_set({0, 1}), make_set({2, 3}), make_set({4}),
                  make_set({5})});
  Partition q(6, {make_set({1, 2}), make_set({3}), make_set({4, 5}),
                  make_set({0})});
  CHECK(join(p, q).label() == "0123|45");
}
