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

// Brute-force reference implementations. They only read the edge list and
// never call the library's solvers.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "romdom/graph.hpp"

namespace romdom::oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix(const Graph& g) {
  Matrix m(g.order(), std::vector<bool>(g.order(), false));
  for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = true;
  return m;
}

inline bool dominates(const Matrix& m, std::uint64_t set) {
  const int n = static_cast<int>(m.size());
  for (int v = 0; v < n; ++v) {
    bool ok = (set >> v) & 1U;
    for (int u = 0; u < n && !ok; ++u) ok = ((set >> u) & 1U) && m[u][v];
    if (!ok) return false;
  }
  return true;
}

inline int gamma(const Graph& g) {
  const Matrix m = matrix(g);
  int best = g.order();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
    if (dominates(m, s)) best = std::min(best, __builtin_popcountll(s));
  }
  return best;
}

// All labelings in {0,1,2}^n, as base-3 digits of a counter.
inline std::vector<std::vector<int>> all_labelings(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> l(n, 0);
  for (;;) {
    out.push_back(l);
    int i = 0;
    while (i < n && l[i] == 2) l[i++] = 0;
    if (i == n) break;
    ++l[i];
  }
  return out;
}

inline bool is_rdf(const Matrix& m, const std::vector<int>& l) {
  const int n = static_cast<int>(m.size());
  for (int v = 0; v < n; ++v) {
    if (l[v] != 0) continue;
    bool served = false;
    for (int u = 0; u < n; ++u) served = served || (m[u][v] && l[u] == 2);
    if (!served) return false;
  }
  return true;
}

// Every minimum-weight Roman dominating function, as label vectors.
inline std::pair<int, std::vector<std::vector<int>>> optimal_rdfs(const Graph& g) {
  const Matrix m = matrix(g);
  int best = 3 * g.order() + 1;
  std::vector<std::vector<int>> out;
  for (const auto& l : all_labelings(g.order())) {
    if (!is_rdf(m, l)) continue;
    int w = 0;
    for (int x : l) w += x;
    if (w < best) {
      best = w;
      out.clear();
    }
    if (w == best) out.push_back(l);
  }
  return {best, out};
}

inline int gamma_r(const Graph& g) { return optimal_rdfs(g).first; }

// BFS distances; -1 for unreachable.
inline std::vector<std::vector<int>> distances(const Graph& g) {
  const Matrix m = matrix(g);
  const int n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    std::vector<int> queue{s};
    d[s][s] = 0;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      int x = queue[k];
      for (int y = 0; y < n; ++y) {
        if (m[x][y] && d[s][y] < 0) {
          d[s][y] = d[s][x] + 1;
          queue.push_back(y);
        }
      }
    }
  }
  return d;
}

inline int packing(const Graph& g) {
  const auto d = distances(g);
  const int n = g.order();
  int best = 0;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = a + 1; b < n && ok; ++b)
        if (((s >> a) & 1U) && ((s >> b) & 1U) && d[a][b] >= 0 && d[a][b] <= 2) ok = false;
    if (ok) best = std::max(best, __builtin_popcountll(s));
  }
  return best;
}

// Perfect codes as bit masks, ascending.
inline std::vector<std::uint64_t> perfect_codes(const Graph& g) {
  const Matrix m = matrix(g);
  const int n = g.order();
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      int hits = ((s >> v) & 1U) ? 1 : 0;
      for (int u = 0; u < n; ++u) hits += (((s >> u) & 1U) && m[u][v]) ? 1 : 0;
      ok = hits == 1;
    }
    if (ok) out.push_back(s);
  }
  return out;
}

// Independent graph6 decoder for n < 63.
inline std::vector<std::pair<int, int>> decode_graph6_small(const std::string& s) {
  const int n = s[0] - 63;
  std::vector<int> bits;
  for (std::size_t i = 1; i < s.size(); ++i)
    for (int b = 5; b >= 0; --b) bits.push_back(((s[i] - 63) >> b) & 1);
  std::vector<std::pair<int, int>> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (bits.at(k)) edges.emplace_back(i, j);
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace romdom::oracle
