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

#include "declat/lattice_props.hpp"

#include <algorithm>
#include <string>

#include "declat/errors.hpp"
#include "declat/irreducibles.hpp"

namespace declat {

namespace {

PropertyCheck from_flat(long long bad, std::initializer_list<long long> dims) {
  PropertyCheck c;
  if (bad < 0) return c;
  c.holds = false;
  // Decode mixed-radix, most significant dimension first.
  std::vector<long long> radices(dims);
  c.witness.resize(radices.size());
  for (int k = static_cast<int>(radices.size()) - 1; k >= 0; --k) {
    c.witness[k] = static_cast<int>(bad % radices[k]);
    bad /= radices[k];
  }
  return c;
}

}  // namespace

PropertyCheck is_semimodular(const FiniteLattice& l, Exec exec) {
  const long long m = l.size();
  long long bad = find_first(m * m, exec, [&](long long i) {
    int a = static_cast<int>(i / m), b = static_cast<int>(i % m);
    return l.covers(l.meet(a, b), a) && !l.covers(b, l.join(a, b));
  });
  return from_flat(bad, {m, m});
}

PropertyCheck is_atomistic(const FiniteLattice& l, Exec exec) {
  long long bad = find_first(l.size(), exec, [&](long long i) {
    int x = static_cast<int>(i);
    int acc = l.bottom();
    for (int a : l.atoms())
      if (l.leq(a, x)) acc = l.join(acc, a);
    return acc != x;
  });
  return from_flat(bad, {static_cast<long long>(l.size())});
}

PropertyCheck is_dually_atomistic(const FiniteLattice& l, Exec exec) {
  long long bad = find_first(l.size(), exec, [&](long long i) {
    int x = static_cast<int>(i);
    int acc = l.top();
    for (int c : l.coatoms())
      if (l.leq(x, c)) acc = l.meet(acc, c);
    return acc != x;
  });
  return from_flat(bad, {static_cast<long long>(l.size())});
}

PropertyCheck is_geometric(const FiniteLattice& l, Exec exec) {
  PropertyCheck atomistic = is_atomistic(l, exec);
  if (!atomistic.holds) return atomistic;
  return is_semimodular(l, exec);
}

PropertyCheck is_distributive(const FiniteLattice& l, Exec exec) {
  const long long m = l.size();
  long long bad = find_first(m * m * m, exec, [&](long long i) {
    int x = static_cast<int>(i / (m * m));
    int y = static_cast<int>((i / m) % m);
    int z = static_cast<int>(i % m);
    return l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z));
  });
  return from_flat(bad, {m, m, m});
}

PropertyCheck is_standard_element(const FiniteLattice& l, int a, Exec exec) {
  const long long m = l.size();
  long long bad = find_first(m * m, exec, [&](long long i) {
    int x = static_cast<int>(i / m), y = static_cast<int>(i % m);
    return l.meet(x, l.join(a, y)) != l.join(l.meet(x, a), l.meet(x, y));
  });
  return from_flat(bad, {m, m});
}

std::vector<int> standard_elements(const FiniteLattice& l, Exec exec) {
  std::vector<int> out;
  for (int a = 0; a < l.size(); ++a)
    if (is_standard_element(l, a, exec).holds) out.push_back(a);
  return out;
}

PropertyCheck is_strong_lattice(const FiniteLattice& l, Exec exec) {
  const auto jis = join_irreducibles(l);
  const long long nj = static_cast<long long>(jis.size()), m = l.size();
  long long bad = find_first(nj * m, exec, [&](long long i) {
    const Irreducible& j = jis[static_cast<std::size_t>(i / m)];
    int x = static_cast<int>(i % m);
    return l.leq(j.elem, l.join(j.star, x)) && !l.leq(j.elem, x);
  });
  PropertyCheck c;
  if (bad < 0) return c;
  c.holds = false;
  c.witness = {jis[static_cast<std::size_t>(bad / m)].elem,
               static_cast<int>(bad % m)};
  return c;
}

PropertyCheck is_dually_strong(const FiniteLattice& l, Exec exec) {
  const auto mis = meet_irreducibles(l);
  const long long nm = static_cast<long long>(mis.size()), m = l.size();
  long long bad = find_first(nm * m, exec, [&](long long i) {
    const Irreducible& mi = mis[static_cast<std::size_t>(i / m)];
    int x = static_cast<int>(i % m);
    return l.leq(l.meet(mi.star, x), mi.elem) && !l.leq(x, mi.elem);
  });
  PropertyCheck c;
  if (bad < 0) return c;
  c.holds = false;
  c.witness = {mis[static_cast<std::size_t>(bad / m)].elem,
               static_cast<int>(bad % m)};
  return c;
}

PropertyCheck is_consistent(const FiniteLattice& l, Exec exec) {
  const auto jis = join_irreducibles(l);
  const long long nj = static_cast<long long>(jis.size()), m = l.size();
  long long bad = find_first(nj * m, exec, [&](long long i) {
    int j = jis[static_cast<std::size_t>(i / m)].elem;
    int x = static_cast<int>(i % m);
    if (l.leq(j, x)) return false;
    int v = l.join(x, j);
    // v is join-irreducible in [x, top] iff the join of [x, v) stays below v.
    int acc = x;
    for (int w = 0; w < l.size(); ++w)
      if (w != v && l.leq(x, w) && l.leq(w, v)) acc = l.join(acc, w);
    return acc == v;
  });
  PropertyCheck c;
  if (bad < 0) return c;
  c.holds = false;
  c.witness = {jis[static_cast<std::size_t>(bad / m)].elem,
               static_cast<int>(bad % m)};
  return c;
}

PropertyCheck is_balanced(const FiniteLattice& l, Exec exec) {
  const auto jis = join_irreducibles(l);
  const auto mis = meet_irreducibles(l);
  const long long nj = static_cast<long long>(jis.size());
  const long long nm = static_cast<long long>(mis.size());
  long long bad = find_first(nj * nm, exec, [&](long long i) {
    const Irreducible& j = jis[static_cast<std::size_t>(i / nm)];
    const Irreducible& mi = mis[static_cast<std::size_t>(i % nm)];
    if (l.leq(j.elem, mi.elem)) return false;
    bool up = l.join(j.elem, mi.elem) == mi.star;
    bool dn = l.meet(j.elem, mi.elem) == j.star;
    return up != dn;
  });
  PropertyCheck c;
  if (bad < 0) return c;
  c.holds = false;
  c.witness = {jis[static_cast<std::size_t>(bad / nm)].elem,
               mis[static_cast<std::size_t>(bad % nm)].elem};
  return c;
}

namespace {

// Depth-first enumeration of irredundant join-decompositions of `a` as
// antichain subsets of the join-irreducibles below it.
struct KorpSearch {
  const FiniteLattice& l;
  const std::vector<int>& ja;
  std::size_t size_cap;
  int target;
  std::vector<std::vector<int>> found;
  std::vector<int> chosen;

  bool extendable(std::size_t start, int joined) const {
    for (std::size_t i = start; i < ja.size(); ++i) {
      int j = ja[i];
      if (l.leq(j, joined)) continue;
      bool anti = true;
      for (int c : chosen)
        if (l.leq(j, c) || l.leq(c, j)) {
          anti = false;
          break;
        }
      if (anti) return true;
    }
    return false;
  }

  void run(std::size_t start, int joined) {
    if (joined == target) {
      for (std::size_t drop = 0; drop < chosen.size(); ++drop) {
        int acc = l.bottom();
        for (std::size_t k = 0; k < chosen.size(); ++k)
          if (k != drop) acc = l.join(acc, chosen[k]);
        if (acc == target) return;  // redundant part
      }
      found.push_back(chosen);
      return;
    }
    if (chosen.size() == size_cap) {
      if (extendable(start, joined))
        throw ResourceError("join-decomposition size cap " +
                            std::to_string(size_cap) + " exceeded");
      return;
    }
    for (std::size_t i = start; i < ja.size(); ++i) {
      int j = ja[i];
      if (l.leq(j, joined)) continue;
      bool anti = true;
      for (int c : chosen)
        if (l.leq(j, c) || l.leq(c, j)) {
          anti = false;
          break;
        }
      if (!anti) continue;
      chosen.push_back(j);
      run(i + 1, l.join(joined, j));
      chosen.pop_back();
    }
  }
};

}  // namespace

PropertyCheck has_join_korp(const FiniteLattice& l, const Caps& caps) {
  const auto jis = join_irreducibles(l);
  if (jis.size() > caps.max_irreducibles)
    throw ResourceError("join-irreducible count " +
                        std::to_string(jis.size()) +
                        " exceeds irreducibles cap " +
                        std::to_string(caps.max_irreducibles));
  PropertyCheck c;
  for (int a = 0; a < l.size(); ++a) {
    if (a == l.bottom()) continue;
    std::vector<int> ja;
    for (const Irreducible& j : jis)
      if (l.leq(j.elem, a)) ja.push_back(j.elem);
    KorpSearch search{l, ja, caps.max_join_decomp, a, {}, {}};
    search.run(0, l.bottom());
    const auto& decomps = search.found;
    for (const auto& p : decomps) {
      for (const auto& q : decomps) {
        for (std::size_t i = 0; i < p.size(); ++i) {
          bool replaceable = false;
          for (int k : q) {
            int acc = k;
            for (std::size_t t = 0; t < p.size(); ++t)
              if (t != i) acc = l.join(acc, p[t]);
            if (acc == a) {
              replaceable = true;
              break;
            }
          }
          if (!replaceable) {
            c.holds = false;
            c.witness = {a, p[i]};
            return c;
          }
        }
      }
    }
  }
  return c;
}

PropertyReport check_properties(const FiniteLattice& l, const Caps& caps,
                                Exec exec) {
  PropertyReport r;
  r.semimodular = is_semimodular(l, exec);
  r.atomistic = is_atomistic(l, exec);
  r.dually_atomistic = is_dually_atomistic(l, exec);
  r.geometric = is_geometric(l, exec);
  r.distributive = is_distributive(l, exec);
  r.strong = is_strong_lattice(l, exec);
  r.dually_strong = is_dually_strong(l, exec);
  r.consistent = is_consistent(l, exec);
  r.balanced = is_balanced(l, exec);
  r.korp = has_join_korp(l, caps);
  r.standard = standard_elements(l, exec);
  return r;
}

}  // namespace declat
