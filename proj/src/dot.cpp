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

#include "declat/dot.hpp"

#include <algorithm>
#include <map>

#include "declat/errors.hpp"

namespace declat {

namespace {

std::string escaped(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string hasse_dot(const FiniteLattice& l,
                      const std::vector<std::string>& labels,
                      const std::string& name) {
  if (static_cast<int>(labels.size()) != l.size())
    throw DomainError("one label per lattice element required");

  std::string out = "digraph " + name + " {\n  rankdir=BT;\n"
                    "  node [shape=box, fontsize=10];\n";
  for (int a = 0; a < l.size(); ++a)
    out += "  n" + std::to_string(a) + " [label=\"" + escaped(labels[a]) +
           "\"];\n";

  std::vector<std::pair<int, int>> covers = l.cover_pairs();
  std::sort(covers.begin(), covers.end());
  for (auto [lo, hi] : covers)
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";

  std::map<int, std::vector<int>> by_height;
  std::vector<int> hs = l.heights();
  for (int a = 0; a < l.size(); ++a) by_height[hs[a]].push_back(a);
  for (const auto& [h, elems] : by_height) {
    if (elems.size() < 2) continue;
    out += "  { rank=same;";
    for (int a : elems) out += " n" + std::to_string(a) + ";";
    out += " }\n";
  }
  return out + "}\n";
}

}  // namespace declat
