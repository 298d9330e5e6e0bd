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

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "romdom/errors.hpp"
#include "romdom/graph.hpp"

namespace romdom {

// graph6: each byte is 63 plus a 6-bit chunk. The header encodes n (one byte
// for n < 63, '~' plus three bytes up to 258047, "~~" plus six bytes beyond),
// followed by the upper triangle in column order (0,1),(0,2),(1,2),(0,3),...,
// big-endian within each chunk and zero-padded to a multiple of six bits.

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

inline Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kGraph6Header)) {
    text.remove_prefix(kGraph6Header.size());
    base = kGraph6Header.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw ParseError("empty graph6 string", base);
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("byte outside 0x3F-0x7E", base + i);
  }

  auto chunk = [&](std::size_t i) -> std::uint64_t {
    return static_cast<unsigned char>(text[i]) - 63U;
  };

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (chunk(0) < 63) {
    n = chunk(0);
    pos = 1;
  } else if (text.size() >= 2 && chunk(1) == 63) {
    if (text.size() < 8) throw ParseError("truncated 8-byte length header", base + text.size());
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | chunk(i);
    pos = 8;
  } else {
    if (text.size() < 4) throw ParseError("truncated 4-byte length header", base + text.size());
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | chunk(i);
    pos = 4;
  }
  if (n < 1) throw ParseError("graph6 graphs must have at least one vertex", base);
  if (n > static_cast<std::uint64_t>(vertex_capacity())) {
    throw CapacityError("graph6 graph has " + std::to_string(n) +
                        " vertices, capacity is " + std::to_string(vertex_capacity()));
  }

  const std::uint64_t bits = n * (n - 1) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw ParseError("expected " + std::to_string(bytes) + " data bytes, found " +
                         std::to_string(text.size() - pos),
                     base + std::min<std::size_t>(text.size(), pos + bytes));
  }

  const int order = static_cast<int>(n);
  std::vector<std::pair<int, int>> edges;
  std::uint64_t k = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      std::uint64_t c = chunk(pos + k / 6);
      if ((c >> (5 - k % 6)) & 1U) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    std::uint64_t last = chunk(text.size() - 1);
    std::uint64_t pad_mask = (std::uint64_t{1} << (6 - bits % 6)) - 1;
    if ((last & pad_mask) != 0) {
      throw ParseError("nonzero padding bits", base + text.size() - 1);
    }
  }
  return Graph(order, edges);
}

inline std::string write_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

}  // namespace romdom
