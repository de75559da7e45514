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

// JSON instance descriptions and their translation into set families or
// explicit lattices.

#ifndef DECLAT_JSON_IO_HPP
#define DECLAT_JSON_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "declat/caps.hpp"
#include "declat/exec.hpp"
#include "declat/finite_lattice.hpp"
#include "declat/set_family.hpp"

namespace declat {

// One parsed input instance. Accepted shapes:
//   {"type": "graph",        "n": N, "edges": [[a, b], ...]}
//   {"type": "tree",         "n": N, "edges": [[a, b], ...]}
//   {"type": "relation",     "n": N, "pairs": [[a, b], ...]}
//   {"type": "linear_order", "n": N}
//   {"type": "family",       "n": N, "sets": [[e, ...], ...]}
//   {"type": "lattice",      "n": N, "leq": [[a, b], ...]}
struct ParsedInstance {
  std::string type;
  int n = 0;
  std::vector<std::pair<int, int>> pairs;  // edges / pairs / leq
  std::vector<std::vector<int>> sets;      // family only
};

// Throws ParseError with a JSON path for malformed input.
ParsedInstance parse_instance(const nlohmann::json& j);
ParsedInstance parse_instance_text(const std::string& text);

// Builds the set family an instance describes. Rejects "lattice" instances,
// which carry no set family.
SetFamily family_of(const ParsedInstance& inst, const Caps& caps = Caps{});

// Builds the order from an explicit "lattice" instance: reflexive-transitive
// closure of the given pairs, validated as a lattice.
FiniteLattice lattice_of_explicit(const ParsedInstance& inst,
                                  Exec exec = Exec::serial);

}  // namespace declat

#endif  // DECLAT_JSON_IO_HPP
