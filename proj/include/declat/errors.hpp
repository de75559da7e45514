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

#ifndef DECLAT_ERRORS_HPP
#define DECLAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace declat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid argument or violated precondition (bad ground size, non-member
// set passed where membership is required, non-closure-system input, ...).
struct DomainError : Error {
  using Error::Error;
};

// Malformed input document. `path` points at the offending JSON node.
struct ParseError : Error {
  ParseError(const std::string& what, std::string path_in)
      : Error(what + " (at " + path_in + ")"), path(std::move(path_in)) {}
  std::string path;
};

// A configured cap would be exceeded; the message names the cap.
struct ResourceError : Error {
  using Error::Error;
};

// A structural expectation failed mid-computation (relation is not a
// lattice order, a tolerance block is not an interval, ...). Reported to
// the caller, never patched over.
struct StructureError : Error {
  using Error::Error;
};

}  // namespace declat

#endif  // DECLAT_ERRORS_HPP
