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

#include <cstdint>
#include <string>
#include <vector>

#include "romdom/errors.hpp"
#include "romdom/graph.hpp"

namespace romdom {

// A labeling V -> {0, 1, 2}. B_i is the set of vertices labeled i.
class RomanFunction {
 public:
  RomanFunction() = default;

  explicit RomanFunction(std::vector<std::uint8_t> labels) : labels_(std::move(labels)) {
    for (auto l : labels_) {
      if (l > 2) throw InputError("Roman labels must be 0, 1 or 2");
    }
  }

  // Constant labeling.
  static RomanFunction constant(int n, std::uint8_t label) {
    return RomanFunction(std::vector<std::uint8_t>(static_cast<std::size_t>(n), label));
  }

  // The cheapest labeling with B_2 = twos: every vertex outside N[twos]
  // must carry a 1, every other vertex outside twos carries 0.
  static RomanFunction from_twos(const Graph& g, const VertexSet& twos) {
    std::vector<std::uint8_t> labels(static_cast<std::size_t>(g.order()), 1);
    g.closed_neighbors(twos).for_each([&](int v) { labels[v] = 0; });
    twos.for_each([&](int v) { labels[v] = 2; });
    return RomanFunction(std::move(labels));
  }

  int size() const { return static_cast<int>(labels_.size()); }
  std::uint8_t operator[](int v) const { return labels_[static_cast<std::size_t>(v)]; }
  const std::vector<std::uint8_t>& labels() const { return labels_; }

  VertexSet b(int label) const {
    VertexSet s;
    for (int v = 0; v < size(); ++v) {
      if (labels_[v] == label) s.insert(v);
    }
    return s;
  }
  VertexSet b0() const { return b(0); }
  VertexSet b1() const { return b(1); }
  VertexSet b2() const { return b(2); }

  int weight() const {
    int w = 0;
    for (auto l : labels_) w += l;
    return w;
  }

  friend bool operator==(const RomanFunction&, const RomanFunction&) = default;

 private:
  std::vector<std::uint8_t> labels_;
};

// True iff every vertex labeled 0 has a neighbor labeled 2.
inline bool validate_rdf(const Graph& g, const RomanFunction& f) {
  if (f.size() != g.order()) {
    throw InputError("labeling has " + std::to_string(f.size()) + " entries for a graph of order " +
                     std::to_string(g.order()));
  }
  const VertexSet twos = f.b2();
  for (int v = 0; v < g.order(); ++v) {
    if (f[v] == 0 && !g.neighbors(v).intersects(twos)) return false;
  }
  return true;
}

}  // namespace romdom
