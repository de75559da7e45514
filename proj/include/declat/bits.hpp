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

#ifndef DECLAT_BITS_HPP
#define DECLAT_BITS_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace declat {

// A subset of a ground set {0, ..., n-1}, n <= 64, as a bitmask.
using Subset = std::uint64_t;

inline constexpr int kMaxGroundSize = 64;

constexpr Subset full_set(int n) {
  return n >= kMaxGroundSize ? ~Subset{0} : (Subset{1} << n) - 1;
}

constexpr bool set_contains(Subset s, int i) { return (s >> i) & 1u; }

constexpr bool subset_of(Subset a, Subset b) { return (a & ~b) == 0; }

constexpr int set_size(Subset s) { return std::popcount(s); }

constexpr int min_element(Subset s) { return std::countr_zero(s); }

inline Subset make_set(std::initializer_list<int> elems) {
  Subset s = 0;
  for (int e : elems) s |= Subset{1} << e;
  return s;
}

inline std::vector<int> set_elements(Subset s) {
  std::vector<int> out;
  out.reserve(set_size(s));
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

inline std::string set_label(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : set_elements(s)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

// Canonical subset order: smaller sets first, then lexicographic on the
// ascending element sequence. For equal sizes the lexicographically smaller
// set is the one owning the lowest differing bit.
inline bool subset_less(Subset a, Subset b) {
  int sa = set_size(a), sb = set_size(b);
  if (sa != sb) return sa < sb;
  if (a == b) return false;
  Subset diff = a ^ b;
  return (a >> std::countr_zero(diff)) & 1u;
}

struct SubsetLess {
  bool operator()(Subset a, Subset b) const { return subset_less(a, b); }
};

// Dense square/rectangular bit matrix; rows are word-aligned so that row-wise
// subset tests and intersections run wordwise.
class BitMatrix {
 public:
  BitMatrix() : rows_(0), cols_(0), words_(0) {}
  BitMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64),
        bits_(static_cast<std::size_t>(rows) * words_, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int words_per_row() const { return words_; }

  bool test(int r, int c) const {
    return (bits_[static_cast<std::size_t>(r) * words_ + (c >> 6)] >> (c & 63)) & 1u;
  }
  void set(int r, int c) {
    bits_[static_cast<std::size_t>(r) * words_ + (c >> 6)] |= std::uint64_t{1} << (c & 63);
  }
  void reset(int r, int c) {
    bits_[static_cast<std::size_t>(r) * words_ + (c >> 6)] &= ~(std::uint64_t{1} << (c & 63));
  }

  // Atomically sets bit (r, c); returns true when this call flipped it.
  bool set_atomic(int r, int c) {
    std::uint64_t* w = &bits_[static_cast<std::size_t>(r) * words_ + (c >> 6)];
    std::uint64_t mask = std::uint64_t{1} << (c & 63);
    std::uint64_t prev = __atomic_fetch_or(w, mask, __ATOMIC_RELAXED);
    return (prev & mask) == 0;
  }

  const std::uint64_t* row(int r) const {
    return &bits_[static_cast<std::size_t>(r) * words_];
  }
  std::uint64_t* row(int r) { return &bits_[static_cast<std::size_t>(r) * words_]; }

  bool row_subset_of(int r1, int r2) const {
    const std::uint64_t *a = row(r1), *b = row(r2);
    for (int w = 0; w < words_; ++w)
      if (a[w] & ~b[w]) return false;
    return true;
  }

  int row_count(int r) const {
    const std::uint64_t* a = row(r);
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(a[w]);
    return c;
  }

  // First set column index of row r, or -1.
  int row_first(int r) const {
    const std::uint64_t* a = row(r);
    for (int w = 0; w < words_; ++w)
      if (a[w]) return w * 64 + std::countr_zero(a[w]);
    return -1;
  }

  std::vector<int> row_elements(int r) const {
    std::vector<int> out;
    const std::uint64_t* a = row(r);
    for (int w = 0; w < words_; ++w) {
      std::uint64_t word = a[w];
      while (word) {
        out.push_back(w * 64 + std::countr_zero(word));
        word &= word - 1;
      }
    }
    return out;
  }

  BitMatrix transposed() const {
    BitMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c)
        if (test(r, c)) t.set(c, r);
    return t;
  }

  bool operator==(const BitMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
  }

 private:
  int rows_, cols_, words_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace declat

#endif  // DECLAT_BITS_HPP
