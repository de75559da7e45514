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

#include "declat/json_io.hpp"

#include <string>
#include <vector>

#include "declat/bits.hpp"
#include "declat/errors.hpp"
#include "declat/instances.hpp"

namespace declat {

namespace {

using nlohmann::json;

int require_int(const json& j, const std::string& path) {
  if (!j.is_number_integer())
    throw ParseError("expected an integer", path);
  long long v = j.get<long long>();
  if (v < -(1 << 30) || v > (1 << 30))
    throw ParseError("integer out of range", path);
  return static_cast<int>(v);
}

std::vector<std::pair<int, int>> require_pair_list(const json& j,
                                                   const std::string& path) {
  if (!j.is_array()) throw ParseError("expected an array of pairs", path);
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = path + "[" + std::to_string(i) + "]";
    const json& p = j[i];
    if (!p.is_array() || p.size() != 2)
      throw ParseError("expected a two-element array", at);
    out.emplace_back(require_int(p[0], at + "[0]"),
                     require_int(p[1], at + "[1]"));
  }
  return out;
}

}  // namespace

ParsedInstance parse_instance(const json& j) {
  if (!j.is_object()) throw ParseError("expected an object", "$");
  if (!j.contains("type")) throw ParseError("missing \"type\"", "$");
  if (!j["type"].is_string()) throw ParseError("expected a string", "$.type");
  if (!j.contains("n")) throw ParseError("missing \"n\"", "$");

  ParsedInstance inst;
  inst.type = j["type"].get<std::string>();
  inst.n = require_int(j["n"], "$.n");
  if (inst.n < 1) throw ParseError("\"n\" must be at least 1", "$.n");

  auto reject_unknown = [&](std::initializer_list<const char*> known) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      bool ok = it.key() == "type" || it.key() == "n";
      for (const char* k : known) ok = ok || it.key() == k;
      if (!ok) throw ParseError("unknown key", "$." + it.key());
    }
  };

  if (inst.type == "graph" || inst.type == "tree") {
    reject_unknown({"edges"});
    if (!j.contains("edges")) throw ParseError("missing \"edges\"", "$");
    inst.pairs = require_pair_list(j["edges"], "$.edges");
  } else if (inst.type == "relation") {
    reject_unknown({"pairs"});
    if (!j.contains("pairs")) throw ParseError("missing \"pairs\"", "$");
    inst.pairs = require_pair_list(j["pairs"], "$.pairs");
  } else if (inst.type == "linear_order") {
    reject_unknown({});
  } else if (inst.type == "family") {
    reject_unknown({"sets"});
    if (!j.contains("sets")) throw ParseError("missing \"sets\"", "$");
    const json& sets = j["sets"];
    if (!sets.is_array()) throw ParseError("expected an array", "$.sets");
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const std::string at = "$.sets[" + std::to_string(i) + "]";
      if (!sets[i].is_array()) throw ParseError("expected an array", at);
      std::vector<int> s;
      for (std::size_t k = 0; k < sets[i].size(); ++k)
        s.push_back(
            require_int(sets[i][k], at + "[" + std::to_string(k) + "]"));
      inst.sets.push_back(std::move(s));
    }
  } else if (inst.type == "lattice") {
    reject_unknown({"leq"});
    if (!j.contains("leq")) throw ParseError("missing \"leq\"", "$");
    inst.pairs = require_pair_list(j["leq"], "$.leq");
  } else {
    throw ParseError("unknown instance type \"" + inst.type + "\"", "$.type");
  }
  return inst;
}

ParsedInstance parse_instance_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), "$");
  }
  return parse_instance(j);
}

SetFamily family_of(const ParsedInstance& inst, const Caps& caps) {
  if (inst.type == "graph")
    return graph_modules(GraphInstance(inst.n, inst.pairs), caps);
  if (inst.type == "tree")
    return tree_subtrees(TreeInstance(inst.n, inst.pairs), caps);
  if (inst.type == "relation")
    return relation_intervals(RelationInstance(inst.n, inst.pairs), caps);
  if (inst.type == "linear_order") return linear_order_intervals(inst.n, caps);
  if (inst.type == "family") {
    if (inst.n > kMaxGroundSize)
      throw DomainError("ground set larger than " +
                        std::to_string(kMaxGroundSize));
    std::vector<Subset> sets;
    for (std::size_t i = 0; i < inst.sets.size(); ++i) {
      Subset s = 0;
      for (int e : inst.sets[i]) {
        if (e < 0 || e >= inst.n)
          throw DomainError("set member " + std::to_string(e) +
                            " outside 0.." + std::to_string(inst.n - 1));
        s |= Subset{1} << e;
      }
      sets.push_back(s);
    }
    return SetFamily(inst.n, sets, caps);
  }
  throw DomainError("instance type \"" + inst.type +
                    "\" does not describe a set family");
}

FiniteLattice lattice_of_explicit(const ParsedInstance& inst, Exec exec) {
  if (inst.type != "lattice")
    throw DomainError("expected a \"lattice\" instance");
  const int m = inst.n;
  BitMatrix leq(m, m);
  for (int a = 0; a < m; ++a) leq.set(a, a);
  for (auto [a, b] : inst.pairs) {
    if (a < 0 || a >= m || b < 0 || b >= m)
      throw DomainError("order pair (" + std::to_string(a) + ", " +
                        std::to_string(b) + ") outside 0.." +
                        std::to_string(m - 1));
    leq.set(a, b);
  }
  // Warshall over bit rows.
  for (int k = 0; k < m; ++k)
    for (int a = 0; a < m; ++a)
      if (leq.test(a, k))
        for (int w = 0; w < leq.words_per_row(); ++w)
          leq.row(a)[w] |= leq.row(k)[w];
  return FiniteLattice::from_leq(leq, exec);
}

}  // namespace declat
