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

// Hasse-diagram rendering in Graphviz DOT.

#ifndef DECLAT_DOT_HPP
#define DECLAT_DOT_HPP

#include <string>
#include <vector>

#include "declat/finite_lattice.hpp"

namespace declat {

// Bottom-up Hasse diagram: one node per element, one edge per cover pair,
// elements of equal height on one rank.
std::string hasse_dot(const FiniteLattice& l,
                      const std::vector<std::string>& labels,
                      const std::string& name = "hasse");

}  // namespace declat

#endif  // DECLAT_DOT_HPP
