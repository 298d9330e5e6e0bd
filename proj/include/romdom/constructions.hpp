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
#include "romdom/roman_function.hpp"
#include "romdom/solvers.hpp"

namespace romdom {

// How the factor functions feeding a construction were chosen.
enum class SelectionMode {
  optimized,      // best choice over all enumerated optimal functions
  solver_witness  // the solvers' deterministic witness (enumeration not run or guard tripped)
};

inline const char* to_string(SelectionMode m) {
  return m == SelectionMode::optimized ? "optimized" : "solver-witness";
}

// A Roman dominating function on a product graph built from factor
// functions, with the bound it certifies.
struct ConstructionOutcome {
  Graph product;
  RomanFunction rdf;
  long long claimed_bound = 0;
  SelectionMode selection_mode = SelectionMode::solver_witness;
  // False when the theorem's hypothesis fails and claimed_bound is the raw
  // weight identity instead of the theorem's right-hand side.
  bool theorem_applies = true;
};

namespace detail {

inline int count_label(const RomanFunction& f, int label) { return f.b(label).size(); }

// Picks the first optimal function maximizing score; falls back to the
// solver witness when the graph is too large to enumerate.
template <typename Score>
RomanFunction select_optimal(const Graph& g, const SolverLimits& limits, Score score,
                             SelectionMode& mode) {
  if (g.order() > limits.enumerate_max_n) {
    mode = SelectionMode::solver_witness;
    return roman_domination_number(g, limits).witness;
  }
  auto all = enumerate_optimal_rdfs(g, limits);
  std::size_t best = 0;
  for (std::size_t i = 1; i < all.size(); ++i) {
    if (score(all[i]) > score(all[best])) best = i;
  }
  return all[best];
}

inline RomanFunction tabulate(int n1, int n2, auto&& label_of) {
  std::vector<std::uint8_t> labels(static_cast<std::size_t>(n1 * n2));
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < n2; ++v) labels[u * n2 + v] = static_cast<std::uint8_t>(label_of(u, v));
  return RomanFunction(std::move(labels));
}

}  // namespace detail

// Copies an optimal function of one factor onto every fiber of the other:
// f(u, v) = f_h(v) (weight n1 γ_R(h)) or f(u, v) = f_g(u) (weight n2 γ_R(g)).
// Keeps the lighter, preferring the first on ties.
inline ConstructionOutcome replicate_construction(const Graph& g, const Graph& h,
                                                  const SolverLimits& limits = {}) {
  const int n1 = g.order();
  const int n2 = h.order();
  Graph prod = product(g, h, ProductKind::cartesian);
  const RomanFunction fg = roman_domination_number(g, limits).witness;
  const RomanFunction fh = roman_domination_number(h, limits).witness;
  const long long along_h = 1LL * n1 * fh.weight();
  const long long along_g = 1LL * n2 * fg.weight();
  RomanFunction f = along_h <= along_g
                        ? detail::tabulate(n1, n2, [&](int, int v) { return fh[v]; })
                        : detail::tabulate(n1, n2, [&](int u, int) { return fg[u]; });
  return {std::move(prod), std::move(f), std::min(along_h, along_g),
          SelectionMode::solver_witness, true};
}

// f(u, v) = f_h(v), except on (A_0 ∪ A_2) × B_1 where it copies f_g(u)'s
// 0 or 2. Weight n γ_R(h) - |B_1| (|A_0| - |A_2|). The factor functions
// maximize |A_0| - |A_2| and |B_1| over all optimal functions.
inline ConstructionOutcome swap_construction(const Graph& g, const Graph& h,
                                             const SolverLimits& limits = {}) {
  const int n1 = g.order();
  const int n2 = h.order();
  Graph prod = product(g, h, ProductKind::cartesian);
  SelectionMode mode_g = SelectionMode::optimized;
  SelectionMode mode_h = SelectionMode::optimized;
  const RomanFunction fg = detail::select_optimal(
      g, limits,
      [](const RomanFunction& f) {
        return detail::count_label(f, 0) - detail::count_label(f, 2);
      },
      mode_g);
  const RomanFunction fh = detail::select_optimal(
      h, limits, [](const RomanFunction& f) { return detail::count_label(f, 1); }, mode_h);

  RomanFunction f = detail::tabulate(n1, n2, [&](int u, int v) -> int {
    if (fh[v] == 1 && fg[u] != 1) return fg[u];
    return fh[v];
  });

  const long long raw = 1LL * n1 * fh.weight() -
                        1LL * detail::count_label(fh, 1) *
                            (detail::count_label(fg, 0) - detail::count_label(fg, 2));
  const bool applies = has_component_larger_than(g, 2);
  long long claimed = raw;
  if (applies) {
    claimed = 1LL * (n1 + 1) * fh.weight() - 2LL * domination_number(h, limits).value;
  }
  const SelectionMode mode = (mode_g == SelectionMode::optimized && mode_h == SelectionMode::optimized)
                                 ? SelectionMode::optimized
                                 : SelectionMode::solver_witness;
  return {std::move(prod), std::move(f), claimed, mode, applies};
}

// B_2 = S_1 × S_2, B_1 = (V_1 - S_1) × (V_2 - S_2) for minimum dominating
// sets S_1, S_2. Weight 2γ(g)γ(h) + (n1 - γ(g))(n2 - γ(h)).
inline ConstructionOutcome cross_construction(const Graph& g, const Graph& h,
                                              const SolverLimits& limits = {}) {
  const int n1 = g.order();
  const int n2 = h.order();
  Graph prod = product(g, h, ProductKind::cartesian);
  const VertexSet s1 = domination_number(g, limits).witness;
  const VertexSet s2 = domination_number(h, limits).witness;
  RomanFunction f = detail::tabulate(n1, n2, [&](int u, int v) {
    const bool in1 = s1.contains(u);
    const bool in2 = s2.contains(v);
    if (in1 && in2) return 2;
    if (!in1 && !in2) return 1;
    return 0;
  });
  const long long g1 = s1.size();
  const long long g2 = s2.size();
  const long long claimed = 2 * g1 * g2 + (n1 - g1) * (n2 - g2);
  return {std::move(prod), std::move(f), claimed, SelectionMode::solver_witness, true};
}

// Strong product labeling from f_g = (A_0, A_1, A_2), f_h = (B_0, B_1, B_2):
//   2 on (A_1 × B_2) ∪ (A_2 × B_1) ∪ (A_2 × B_2), 1 on A_1 × B_1, 0 elsewhere.
// Weight f_g(V) f_h(V) - 2|A_2||B_2|.
inline ConstructionOutcome strong_case_from(const Graph& g, const Graph& h,
                                            const RomanFunction& fg, const RomanFunction& fh,
                                            SelectionMode mode) {
  if (fg.size() != g.order() || fh.size() != h.order()) {
    throw InputError("factor labeling size does not match its graph");
  }
  Graph prod = product(g, h, ProductKind::strong);
  RomanFunction f = detail::tabulate(g.order(), h.order(), [&](int u, int v) {
    const int a = fg[u];
    const int b = fh[v];
    if (a == 0 || b == 0) return 0;
    if (a == 1 && b == 1) return 1;
    return 2;
  });
  const long long claimed = 1LL * fg.weight() * fh.weight() -
                            2LL * detail::count_label(fg, 2) * detail::count_label(fh, 2);
  return {std::move(prod), std::move(f), claimed, mode, true};
}

// strong_case_from with |A_2| and |B_2| each maximized over all optimal
// functions, giving weight γ_R(g) γ_R(h) - 2 max|A_2| max|B_2|.
inline ConstructionOutcome strong_case_construction(const Graph& g, const Graph& h,
                                                    const SolverLimits& limits = {}) {
  SelectionMode mode_g = SelectionMode::optimized;
  SelectionMode mode_h = SelectionMode::optimized;
  auto twos = [](const RomanFunction& f) { return detail::count_label(f, 2); };
  const RomanFunction fg = detail::select_optimal(g, limits, twos, mode_g);
  const RomanFunction fh = detail::select_optimal(h, limits, twos, mode_h);
  const SelectionMode mode = (mode_g == SelectionMode::optimized && mode_h == SelectionMode::optimized)
                                 ? SelectionMode::optimized
                                 : SelectionMode::solver_witness;
  return strong_case_from(g, h, fg, fh, mode);
}

// For each block X of factor-1 vertices, the labeling v -> max_{u in X} f(u, v)
// on factor 2. f uses the row-major product numbering u * h_size + v.
inline std::vector<RomanFunction> project_max(const RomanFunction& f,
                                              const std::vector<VertexSet>& blocks,
                                              int h_size) {
  if (h_size < 1 || f.size() % h_size != 0) {
    throw InputError("labeling size is not a multiple of the second factor's order");
  }
  const int n1 = f.size() / h_size;
  VertexSet seen;
  for (const auto& block : blocks) {
    if (block.intersects(seen)) throw InputError("projection blocks overlap");
    seen |= block;
  }
  if (seen != VertexSet::full(n1)) {
    throw InputError("projection blocks do not cover the first factor");
  }
  std::vector<RomanFunction> out;
  out.reserve(blocks.size());
  for (const auto& block : blocks) {
    std::vector<std::uint8_t> labels(static_cast<std::size_t>(h_size), 0);
    block.for_each([&](int u) {
      for (int v = 0; v < h_size; ++v) labels[v] = std::max(labels[v], f[u * h_size + v]);
    });
    out.emplace_back(std::move(labels));
  }
  return out;
}

// Closed neighborhoods of the members of `set`, in ascending member order.
inline std::vector<VertexSet> closed_neighborhood_blocks(const Graph& g, const VertexSet& set) {
  std::vector<VertexSet> out;
  set.for_each([&](int u) { out.push_back(g.closed_neighbors(u)); });
  return out;
}

}  // namespace romdom
