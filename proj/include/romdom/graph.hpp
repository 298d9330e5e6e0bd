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
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "romdom/errors.hpp"
#include "romdom/vertex_set.hpp"

namespace romdom {

// Simple undirected graph on vertices 0..n-1 with bitset adjacency.
// Immutable once constructed; every constructor checks symmetry and loops.
class Graph {
 public:
  Graph(int n, const std::vector<std::pair<int, int>>& edges, std::string label = {})
      : adj_(static_cast<std::size_t>(n)), label_(std::move(label)) {
    check_order(n);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw InputError("edge endpoint out of range");
      }
      if (u == v) throw InputError("loop at vertex " + std::to_string(u));
      adj_[u].insert(v);
      adj_[v].insert(u);
    }
  }

  Graph(std::vector<VertexSet> adjacency, std::string label = {})
      : adj_(std::move(adjacency)), label_(std::move(label)) {
    check_order(static_cast<long long>(adj_.size()));
    const int n = order();
    const VertexSet all = VertexSet::full(n);
    for (int v = 0; v < n; ++v) {
      if (!adj_[v].subset_of(all)) throw InputError("neighbor index out of range");
      if (adj_[v].contains(v)) throw InputError("loop at vertex " + std::to_string(v));
      adj_[v].for_each([&](int u) {
        if (!adj_[u].contains(v)) throw InputError("asymmetric adjacency");
      });
    }
  }

  int order() const { return static_cast<int>(adj_.size()); }
  const std::string& label() const { return label_; }

  Graph with_label(std::string label) const {
    Graph g = *this;
    g.label_ = std::move(label);
    return g;
  }

  const VertexSet& neighbors(int v) const { return adj_[v]; }
  VertexSet closed_neighbors(int v) const {
    VertexSet s = adj_[v];
    s.insert(v);
    return s;
  }
  VertexSet closed_neighbors(const VertexSet& set) const {
    VertexSet s = set;
    set.for_each([&](int v) { s |= adj_[v]; });
    return s;
  }
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  int degree(int v) const { return adj_[v].size(); }
  VertexSet vertices() const { return VertexSet::full(order()); }

  int edge_count() const {
    int twice = 0;
    for (const auto& a : adj_) twice += a.size();
    return twice / 2;
  }

  // Edges (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order(); ++u) {
      adj_[u].for_each([&](int v) {
        if (u < v) out.emplace_back(u, v);
      });
    }
    return out;
  }

  int min_degree() const {
    int d = order();
    for (int v = 0; v < order(); ++v) d = std::min(d, degree(v));
    return d;
  }
  int max_degree() const {
    int d = 0;
    for (int v = 0; v < order(); ++v) d = std::max(d, degree(v));
    return d;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  static void check_order(long long n) {
    if (n < 1) throw InputError("graph needs at least one vertex");
    check_capacity(n, "graph");
  }

  std::vector<VertexSet> adj_;
  std::string label_;
};

// ---------------------------------------------------------------------------
// Named families

enum class FamilyKind { path, cycle, complete, star, spider, hypercube, random };

// Parameters used by each kind:
//   path/cycle/complete: n
//   star: r (K_{1,r})
//   spider: r and subdivide_mask (bit i set => spoke i is subdivided)
//   hypercube: d
//   random: n, edge probability p_num/p_den, seed
struct FamilySpec {
  FamilyKind kind = FamilyKind::path;
  int n = 1;
  int r = 1;
  std::uint64_t subdivide_mask = 0;
  int d = 1;
  std::uint64_t p_num = 1;
  std::uint64_t p_den = 2;
  std::uint64_t seed = 0;

  static FamilySpec path(int n) { return {.kind = FamilyKind::path, .n = n}; }
  static FamilySpec cycle(int n) { return {.kind = FamilyKind::cycle, .n = n}; }
  static FamilySpec complete(int n) { return {.kind = FamilyKind::complete, .n = n}; }
  static FamilySpec star(int r) { return {.kind = FamilyKind::star, .r = r}; }
  static FamilySpec spider(int r, std::uint64_t mask) {
    return {.kind = FamilyKind::spider, .r = r, .subdivide_mask = mask};
  }
  static FamilySpec hypercube(int d) { return {.kind = FamilyKind::hypercube, .d = d}; }
  static FamilySpec random(int n, std::uint64_t p_num, std::uint64_t p_den,
                           std::uint64_t seed) {
    return {.kind = FamilyKind::random, .n = n, .p_num = p_num, .p_den = p_den,
            .seed = seed};
  }
};

// SplitMix64 (Steele, Lea, Flood 2014). The random family draws one value per
// vertex pair (i, j), i < j, in lexicographic order, starting from state = seed,
// and keeps the edge iff value % p_den < p_num.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

inline std::string family_label(const FamilySpec& s) {
  switch (s.kind) {
    case FamilyKind::path: return "P" + std::to_string(s.n);
    case FamilyKind::cycle: return "C" + std::to_string(s.n);
    case FamilyKind::complete: return "K" + std::to_string(s.n);
    case FamilyKind::star: return "K1," + std::to_string(s.r);
    case FamilyKind::spider:
      return "spider(" + std::to_string(s.r) + "," + std::to_string(s.subdivide_mask) + ")";
    case FamilyKind::hypercube: return "Q" + std::to_string(s.d);
    case FamilyKind::random:
      return "random(" + std::to_string(s.n) + "," + std::to_string(s.p_num) + "/" +
             std::to_string(s.p_den) + "," + std::to_string(s.seed) + ")";
  }
  return "?";
}

// Vertex numbering: path/cycle in ring order; star center 0 and leaves
// 1..r; spider likewise, with the subdivision vertex of spoke i appended after
// the leaves (in increasing i) and attached to leaf i+1; hypercube vertices are
// d-bit indices adjacent when they differ in one bit.
inline Graph make_family(const FamilySpec& s) {
  std::vector<std::pair<int, int>> edges;
  int n = 0;
  switch (s.kind) {
    case FamilyKind::path:
      if (s.n < 1) throw ParameterError("path needs n >= 1");
      n = s.n;
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case FamilyKind::cycle:
      if (s.n < 3) throw ParameterError("cycle needs n >= 3");
      n = s.n;
      for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
      break;
    case FamilyKind::complete:
      if (s.n < 1) throw ParameterError("complete graph needs n >= 1");
      n = s.n;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      break;
    case FamilyKind::star:
      if (s.r < 1) throw ParameterError("star needs r >= 1");
      check_capacity(1LL + s.r, "star");
      n = s.r + 1;
      for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
      break;
    case FamilyKind::spider: {
      if (s.r < 1) throw ParameterError("spider needs r >= 1");
      if (s.r < 64 && (s.subdivide_mask >> s.r) != 0) {
        throw ParameterError("spider subdivision mask names a spoke beyond r");
      }
      check_capacity(1LL + s.r + std::popcount(s.subdivide_mask), "spider");
      n = s.r + 1;
      for (int i = 1; i <= s.r; ++i) edges.emplace_back(0, i);
      for (int i = 0; i < s.r; ++i) {
        if ((s.subdivide_mask >> i) & 1U) edges.emplace_back(i + 1, n++);
      }
      break;
    }
    case FamilyKind::hypercube:
      if (s.d < 1) throw ParameterError("hypercube needs d >= 1");
      if (s.d > 30) throw CapacityError("hypercube dimension too large");
      check_capacity(1LL << s.d, "hypercube");
      n = 1 << s.d;
      for (int v = 0; v < n; ++v)
        for (int b = 0; b < s.d; ++b) {
          int u = v ^ (1 << b);
          if (v < u) edges.emplace_back(v, u);
        }
      break;
    case FamilyKind::random: {
      if (s.n < 1) throw ParameterError("random graph needs n >= 1");
      if (s.p_den == 0 || s.p_num > s.p_den) {
        throw ParameterError("random graph needs 0 <= p_num <= p_den, p_den > 0");
      }
      n = s.n;
      check_capacity(n, "random graph");
      SplitMix64 rng(s.seed);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (rng.next() % s.p_den < s.p_num) edges.emplace_back(i, j);
      break;
    }
  }
  return Graph(n, edges, family_label(s));
}

// ---------------------------------------------------------------------------
// Products and derived graphs

enum class ProductKind { cartesian, strong };

inline const char* to_string(ProductKind k) {
  return k == ProductKind::cartesian ? "cartesian" : "strong";
}

namespace detail {
inline std::string wrap_label(const std::string& s) {
  return s.find(' ') == std::string::npos ? s : "(" + s + ")";
}
}  // namespace detail

// Vertex (i, j) of the product is numbered i * |V(h)| + j (row-major).
inline Graph product(const Graph& g, const Graph& h, ProductKind kind) {
  const int n1 = g.order();
  const int n2 = h.order();
  check_capacity(static_cast<long long>(n1) * n2, "product");
  std::vector<VertexSet> adj(static_cast<std::size_t>(n1 * n2));
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      VertexSet& a = adj[i * n2 + j];
      h.neighbors(j).for_each([&](int l) { a.insert(i * n2 + l); });
      g.neighbors(i).for_each([&](int k) {
        a.insert(k * n2 + j);
        if (kind == ProductKind::strong) {
          h.neighbors(j).for_each([&](int l) { a.insert(k * n2 + l); });
        }
      });
    }
  }
  std::string label = detail::wrap_label(g.label()) + " x " + detail::wrap_label(h.label());
  if (kind == ProductKind::strong) label += " strong";
  return Graph(std::move(adj), std::move(label));
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
  const int n1 = g.order();
  check_capacity(static_cast<long long>(n1) + h.order(), "disjoint union");
  auto edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(u + n1, v + n1);
  return Graph(n1 + h.order(), edges,
               detail::wrap_label(g.label()) + " + " + detail::wrap_label(h.label()));
}

// Same vertices; u ~ v iff 1 <= dist(u, v) <= 2.
inline Graph square(const Graph& g) {
  std::vector<VertexSet> adj(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    VertexSet reach = g.neighbors(v);
    g.neighbors(v).for_each([&](int u) { reach |= g.neighbors(u); });
    reach.erase(v);
    adj[v] = reach;
  }
  return Graph(std::move(adj), g.label().empty() ? "" : detail::wrap_label(g.label()) + "^2");
}

// Connected components, ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet comp;
    comp.insert(unseen.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      frontier.for_each([&](int v) { next |= g.neighbors(v); });
      next -= comp;
      comp |= next;
      frontier = next;
    }
    unseen -= comp;
    out.push_back(comp);
  }
  return out;
}

inline bool is_connected(const Graph& g) { return components(g).size() == 1; }

inline bool has_component_larger_than(const Graph& g, int size) {
  for (const auto& c : components(g)) {
    if (c.size() > size) return true;
  }
  return false;
}

}  // namespace romdom
