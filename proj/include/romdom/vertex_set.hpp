// Copyright 2026 The romdom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "romdom/errors.hpp"

// Number of 64-bit words in a VertexSet. 1 gives 64-vertex graphs, 2 gives 128.
#ifndef ROMDOM_VERTEX_WORDS
#define ROMDOM_VERTEX_WORDS 1
#endif

namespace romdom {

inline constexpr int kVertexWords = ROMDOM_VERTEX_WORDS;
inline constexpr int kMaxVertices = 64 * kVertexWords;

static_assert(kVertexWords == 1 || kVertexWords == 2,
              "ROMDOM_VERTEX_WORDS must be 1 or 2");

// Runtime vertex capacity: the compiled width, optionally lowered by the
// ROMDOM_MAX_WIDTH environment variable. Read once per process.
inline int vertex_capacity() {
  static const int capacity = [] {
    const char* env = std::getenv("ROMDOM_MAX_WIDTH");
    if (env == nullptr || *env == '\0') return kMaxVertices;
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || value < 1) return kMaxVertices;
    return value < kMaxVertices ? static_cast<int>(value) : kMaxVertices;
  }();
  return capacity;
}

inline void check_capacity(long long n, const std::string& what) {
  if (n > vertex_capacity()) {
    throw CapacityError(what + " needs " + std::to_string(n) +
                        " vertices, capacity is " +
                        std::to_string(vertex_capacity()));
  }
}

// Fixed-width set of vertex indices.
class VertexSet {
 public:
  constexpr VertexSet() = default;

  static VertexSet full(int n) {
    VertexSet s;
    for (int w = 0; w < kVertexWords; ++w) {
      int lo = 64 * w;
      if (n >= lo + 64) {
        s.words_[w] = ~std::uint64_t{0};
      } else if (n > lo) {
        s.words_[w] = (std::uint64_t{1} << (n - lo)) - 1;
      }
    }
    return s;
  }

  static VertexSet of(std::initializer_list<int> vertices) {
    VertexSet s;
    for (int v : vertices) s.insert(v);
    return s;
  }

  static VertexSet from_words(const std::array<std::uint64_t, kVertexWords>& w) {
    VertexSet s;
    s.words_ = w;
    return s;
  }

  void insert(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }

  int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  // Lowest member, or -1 when empty.
  int first() const {
    for (int w = 0; w < kVertexWords; ++w) {
      if (words_[w] != 0) return 64 * w + std::countr_zero(words_[w]);
    }
    return -1;
  }

  bool intersects(const VertexSet& o) const {
    for (int w = 0; w < kVertexWords; ++w) {
      if ((words_[w] & o.words_[w]) != 0) return true;
    }
    return false;
  }

  bool subset_of(const VertexSet& o) const {
    for (int w = 0; w < kVertexWords; ++w) {
      if ((words_[w] & ~o.words_[w]) != 0) return false;
    }
    return true;
  }

  int intersection_size(const VertexSet& o) const {
    int c = 0;
    for (int w = 0; w < kVertexWords; ++w) c += std::popcount(words_[w] & o.words_[w]);
    return c;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (int w = 0; w < kVertexWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (int w = 0; w < kVertexWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  // Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (int w = 0; w < kVertexWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  // Orders sets by their bit pattern read as an unsigned integer.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    for (int w = kVertexWords - 1; w >= 0; --w) {
      if (a.words_[w] != b.words_[w]) return a.words_[w] <=> b.words_[w];
    }
    return std::strong_ordering::equal;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (int w = 0; w < kVertexWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(64 * w + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  const std::array<std::uint64_t, kVertexWords>& words() const { return words_; }

 private:
  std::array<std::uint64_t, kVertexWords> words_{};
};

}  // namespace romdom
