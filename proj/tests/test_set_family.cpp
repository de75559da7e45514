#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "declat/errors.hpp"
#include "declat/set_family.hpp"

using namespace declat;

namespace {

bool overlapping(Subset a, Subset b) {
  return (a & b) != 0 && !subset_of(a, b) && !subset_of(b, a);
}

// Straight re-statement of the axioms, quantifier by quantifier.
bool naive_closure_top(const SetFamily& f) { return f.contains(f.universe()); }

bool naive_closure_intersections(const SetFamily& f) {
  for (Subset a : f.sets())
    for (Subset b : f.sets())
      if (!f.contains(a & b)) return false;
  return true;
}

bool naive_i0(const SetFamily& f) {
  if (!f.contains(0)) return false;
  for (int e = 0; e < f.ground_size(); ++e)
    if (!f.contains(Subset{1} << e)) return false;
  return true;
}

bool naive_i1(const SetFamily& f) {
  for (Subset a : f.sets())
    for (Subset b : f.sets())
      if ((a & b) != 0 && !f.contains(a | b)) return false;
  return true;
}

bool naive_i2(const SetFamily& f) {
  for (Subset a : f.sets())
    for (Subset b : f.sets())
      if (overlapping(a, b) && !f.contains(a & ~b)) return false;
  return true;
}

bool naive_strong(const SetFamily& f, Subset a) {
  for (Subset b : f.sets())
    if (overlapping(a, b)) return false;
  return true;
}

bool naive_fragile(const SetFamily& f, Subset a) {
  for (Subset b : f.sets())
    for (Subset c : f.sets())
      if (b != 0 && c != 0 && (b & c) == 0 && (b | c) == a) return true;
  return false;
}

SetFamily linear3() {
  return SetFamily(3, {0, make_set({0}), make_set({1}), make_set({2}),
                       make_set({0, 1}), make_set({1, 2}),
                       make_set({0, 1, 2})});
}

SetFamily star_subtrees() {
  return SetFamily(
      4, {0, make_set({0}), make_set({1}), make_set({2}), make_set({3}),
          make_set({0, 1}), make_set({0, 2}), make_set({0, 3}),
          make_set({0, 1, 2}), make_set({0, 1, 3}), make_set({0, 2, 3}),
          make_set({0, 1, 2, 3})});
}

SetFamily union_gap() {
  return SetFamily(4, {0, make_set({0}), make_set({1}), make_set({2}),
                       make_set({3}), make_set({0, 1}), make_set({1, 2}),
                       make_set({2, 3}), make_set({0, 1, 2, 3})});
}

SetFamily random_family(int n, std::mt19937_64& rng, bool close) {
  std::vector<Subset> sets = {full_set(n)};
  const int extra = 2 + static_cast<int>(rng() % 8);
  for (int i = 0; i < extra; ++i) sets.push_back(rng() & full_set(n));
  if (close) {
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
  }
  return SetFamily(n, sets);
}

}  // namespace

TEST_CASE("members are deduplicated and canonically ordered") {
  SetFamily f(3, {make_set({0, 1, 2}), make_set({1}), make_set({1}),
                  make_set({0, 2}), Subset{0}});
  CHECK(f.size() == 4);
  CHECK(f.sets() == std::vector<Subset>{0, make_set({1}), make_set({0, 2}),
                                        make_set({0, 1, 2})});
  CHECK(f.contains(make_set({0, 2})));
  CHECK_FALSE(f.contains(make_set({0, 1})));
}

TEST_CASE("construction validates ground size and member range") {
  CHECK_THROWS_AS(SetFamily(0, {}), DomainError);
  CHECK_THROWS_AS(SetFamily(65, {}), DomainError);
  CHECK_THROWS_AS(SetFamily(2, {make_set({2})}), DomainError);
  Caps tight;
  tight.max_family = 2;
  CHECK_THROWS_AS(SetFamily(3, {0, make_set({0}), make_set({1})}, tight),
                  ResourceError);
}

TEST_CASE("linear-order intervals pass every axiom") {
  AxiomReport r = check_axioms(linear3());
  CHECK(r.closure_top);
  CHECK(r.closure_intersections);
  CHECK(r.i0);
  CHECK(r.i1);
  CHECK(r.i2);
  CHECK(r.closure_system());
  CHECK(r.interval_system());
}

TEST_CASE("star subtrees fail exactly the difference axiom") {
  AxiomReport r = check_axioms(star_subtrees());
  CHECK(r.closure_system());
  CHECK(r.i0);
  CHECK(r.i1);
  CHECK_FALSE(r.i2);
  CHECK(r.i2_witness.first == make_set({0, 2, 3}));
  CHECK(r.i2_witness.second == make_set({0, 1}));
  CHECK_FALSE(r.interval_system());
}

TEST_CASE("the union-gap family fails exactly the union axiom") {
  AxiomReport r = check_axioms(union_gap());
  CHECK(r.closure_system());
  CHECK(r.i0);
  CHECK_FALSE(r.i1);
  CHECK(r.i1_witness.first == make_set({0, 1}));
  CHECK(r.i1_witness.second == make_set({1, 2}));
  CHECK(r.i2);
}

TEST_CASE("missing top and missing intersections are flagged with witnesses") {
  AxiomReport no_top = check_axioms(SetFamily(2, {0, make_set({0})}));
  CHECK_FALSE(no_top.closure_top);

  SetFamily f(3, {make_set({0, 1}), make_set({1, 2}), make_set({0, 1, 2})});
  AxiomReport r = check_axioms(f);
  CHECK(r.closure_top);
  CHECK_FALSE(r.closure_intersections);
  CHECK((r.closure_witness.first & r.closure_witness.second) ==
        make_set({1}));
  CHECK_FALSE(r.i0);
  CHECK(r.i0_witness == 0);
}

TEST_CASE("axiom flags agree with the naive checkers on random families") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 300; ++it) {
    int n = 2 + static_cast<int>(rng() % 4);
    SetFamily f = random_family(n, rng, it % 2 == 0);
    AxiomReport r = check_axioms(f);
    CHECK(r.closure_top == naive_closure_top(f));
    CHECK(r.closure_intersections == naive_closure_intersections(f));
    CHECK(r.i0 == naive_i0(f));
    CHECK(r.i1 == naive_i1(f));
    CHECK(r.i2 == naive_i2(f));
    if (!r.closure_intersections)
      CHECK_FALSE(
          f.contains(r.closure_witness.first & r.closure_witness.second));
    if (!r.i1) {
      CHECK((r.i1_witness.first & r.i1_witness.second) != 0);
      CHECK_FALSE(f.contains(r.i1_witness.first | r.i1_witness.second));
    }
    if (!r.i2) {
      CHECK(overlapping(r.i2_witness.first, r.i2_witness.second));
      CHECK_FALSE(
          f.contains(r.i2_witness.first & ~r.i2_witness.second));
    }
  }
}

TEST_CASE("strong and fragile match their definitions") {
  std::mt19937_64 rng(29);
  for (int it = 0; it < 200; ++it) {
    int n = 2 + static_cast<int>(rng() % 4);
    SetFamily f = random_family(n, rng, true);
    for (Subset a : f.sets()) {
      CHECK(is_strong_set(f, a) == naive_strong(f, a));
      std::pair<Subset, Subset> w;
      bool fragile = is_fragile_set(f, a, &w);
      CHECK(fragile == naive_fragile(f, a));
      if (fragile) {
        CHECK(f.contains(w.first));
        CHECK(f.contains(w.second));
        CHECK((w.first & w.second) == 0);
        CHECK((w.first | w.second) == a);
        CHECK(w.first != 0);
        CHECK(w.second != 0);
      }
    }
    std::vector<Subset> strong = strong_sets(f);
    CHECK(std::is_sorted(strong.begin(), strong.end(), subset_less));
    for (Subset a : f.sets())
      CHECK(std::binary_search(strong.begin(), strong.end(), a,
                               subset_less) == naive_strong(f, a));
  }
}

TEST_CASE("strong sets of the named families") {
  CHECK(strong_sets(linear3()) ==
        std::vector<Subset>{0, make_set({0}), make_set({1}), make_set({2}),
                            make_set({0, 1, 2})});
  SetFamily nested(3, {0, make_set({0}), make_set({1}), make_set({2}),
                       make_set({0, 1}), make_set({0, 1, 2})});
  CHECK(strong_sets(nested) == nested.sets());
}

TEST_CASE("strong sets demand membership") {
  CHECK_THROWS_AS(is_strong_set(linear3(), make_set({0, 2})), DomainError);
}

TEST_CASE("restriction keeps traces and relabels to a dense ground set") {
  SetFamily f = linear3();
  SetFamily r = restrict_to(f, make_set({1, 2}));
  CHECK(r.ground_size() == 2);
  CHECK(r.sets() == std::vector<Subset>{0, make_set({0}), make_set({1}),
                                        make_set({0, 1})});
  CHECK_THROWS_AS(restrict_to(f, Subset{0}), DomainError);
}

TEST_CASE("restriction preserves the closure axioms on random systems") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 100; ++it) {
    int n = 3 + static_cast<int>(rng() % 3);
    SetFamily f = random_family(n, rng, true);
    for (Subset a : f.sets()) {
      if (a == 0) continue;
      AxiomReport r = check_axioms(restrict_to(f, a));
      CHECK(r.closure_intersections);
      if (f.contains(f.universe())) CHECK(r.closure_top);
    }
  }
}
