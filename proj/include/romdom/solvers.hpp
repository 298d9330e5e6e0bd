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
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "romdom/errors.hpp"
#include "romdom/graph.hpp"
#include "romdom/roman_function.hpp"

namespace romdom {

// Size guards and search budget. These are configuration; nothing below
// hard-codes them.
struct SolverLimits {
  std::uint64_t node_budget = 100'000'000;
  int solve_max_n = kMaxVertices;
  int enumerate_max_n = 26;
};

struct SetResult {
  int value = 0;
  VertexSet witness;
  std::uint64_t node_count = 0;
};

struct RomanResult {
  int value = 0;
  RomanFunction witness;
  std::uint64_t node_count = 0;
};

namespace detail {

inline void check_solve_size(const Graph& g, const SolverLimits& limits) {
  if (g.order() > limits.solve_max_n) {
    throw CapacityError("graph of order " + std::to_string(g.order()) +
                        " exceeds the solver size guard " +
                        std::to_string(limits.solve_max_n));
  }
}

class NodeCounter {
 public:
  explicit NodeCounter(std::uint64_t budget) : budget_(budget) {}

  void tick() {
    if (++count_ > budget_) {
      throw BudgetExceeded("search exceeded " + std::to_string(budget_) + " nodes");
    }
  }
  std::uint64_t count() const { return count_; }

 private:
  std::uint64_t budget_;
  std::uint64_t count_ = 0;
};

// Shared state for the covering searches: closed neighborhoods and the
// bounds that depend only on (undominated, allowed).
class CoverModel {
 public:
  explicit CoverModel(const Graph& g) : n_(g.order()) {
    for (int v = 0; v < n_; ++v) closed_[v] = g.closed_neighbors(v);
  }

  int order() const { return n_; }
  const VertexSet& closed(int v) const { return closed_[v]; }

  // coverage[v] = |N[v] ∩ undominated| for v in allowed, 0 otherwise.
  void coverage(const VertexSet& undominated, const VertexSet& allowed,
                std::array<int, kMaxVertices>& out) const {
    for (int v = 0; v < n_; ++v) out[v] = 0;
    allowed.for_each([&](int v) { out[v] = closed_[v].intersection_size(undominated); });
  }

  // Undominated vertex with the fewest allowed dominators; lowest index on
  // ties. Returns {vertex, candidate count}.
  std::pair<int, int> branch_vertex(const VertexSet& undominated,
                                    const VertexSet& allowed) const {
    int best = -1;
    int best_count = n_ + 1;
    undominated.for_each([&](int u) {
      if (best_count == 0) return;
      int c = closed_[u].intersection_size(allowed);
      if (c < best_count) {
        best = u;
        best_count = c;
      }
    });
    return {best, best_count};
  }

  // Per-vertex max coverage over its allowed dominators (0 if none).
  void max_cover(const VertexSet& undominated, const VertexSet& allowed,
                 const std::array<int, kMaxVertices>& cov,
                 std::array<int, kMaxVertices>& out) const {
    undominated.for_each([&](int u) {
      int m = 0;
      (closed_[u] & allowed).for_each([&](int v) { m = std::max(m, cov[v]); });
      out[u] = m;
    });
  }

  // Fewest dominators needed: each set covers at most cov[v] elements, and
  // each element u can share a set with at most max_cover(u) - 1 others.
  int domination_bound(const VertexSet& undominated, const VertexSet& allowed) const {
    const int remaining = undominated.size();
    if (remaining == 0) return 0;
    std::array<int, kMaxVertices> cov;
    coverage(undominated, allowed, cov);

    // Greedy max-coverage bound.
    std::array<int, kMaxVertices> sorted;
    int m = 0;
    allowed.for_each([&](int v) {
      if (cov[v] > 0) sorted[m++] = cov[v];
    });
    std::sort(sorted.begin(), sorted.begin() + m, std::greater<>());
    int greedy = 0;
    for (int covered = 0; covered < remaining && greedy < m; ++greedy) covered += sorted[greedy];

    // Fractional bound: sum over elements of 1 / max_cover.
    std::array<int, kMaxVertices> mc;
    max_cover(undominated, allowed, cov, mc);
    double frac = 0.0;
    bool infeasible = false;
    undominated.for_each([&](int u) {
      if (mc[u] == 0) {
        infeasible = true;
      } else {
        frac += 1.0 / mc[u];
      }
    });
    if (infeasible) return n_ + 1;
    int weighted = static_cast<int>(std::ceil(frac - 1e-9));
    return std::max(greedy, weighted);
  }

  // Lower bound on min over T ⊆ allowed of 2|T| + |undominated \ N[T]|.
  int roman_bound(const VertexSet& undominated, const VertexSet& allowed) const {
    const int remaining = undominated.size();
    if (remaining == 0) return 0;
    std::array<int, kMaxVertices> cov;
    coverage(undominated, allowed, cov);

    // Top-k coverage: k sets cover at most the k largest coverages.
    std::array<int, kMaxVertices> sorted;
    int m = 0;
    allowed.for_each([&](int v) {
      if (cov[v] > 2) sorted[m++] = cov[v];
    });
    std::sort(sorted.begin(), sorted.begin() + m, std::greater<>());
    int greedy = remaining;
    int covered = 0;
    for (int k = 1; k <= m; ++k) {
      covered += sorted[k - 1];
      greedy = std::min(greedy, 2 * k + std::max(0, remaining - covered));
    }

    // Fractional bound: an element costs 1 if left undominated, or its share
    // 2 / |cover| of a dominator's cost.
    std::array<int, kMaxVertices> mc;
    max_cover(undominated, allowed, cov, mc);
    double frac = 0.0;
    undominated.for_each([&](int u) { frac += mc[u] > 2 ? 2.0 / mc[u] : 1.0; });
    int weighted = static_cast<int>(std::ceil(frac - 1e-9));
    return std::max(greedy, weighted);
  }

 private:
  int n_;
  std::array<VertexSet, kMaxVertices> closed_{};
};

class DominationSearch {
 public:
  DominationSearch(const Graph& g, const SolverLimits& limits)
      : model_(g), counter_(limits.node_budget) {}

  SetResult run() {
    const int n = model_.order();
    best_ = greedy_size() + 1;
    search(VertexSet::full(n), VertexSet::full(n), VertexSet{}, 0);
    return {best_, best_set_, counter_.count()};
  }

 private:
  int greedy_size() const {
    VertexSet undominated = VertexSet::full(model_.order());
    int k = 0;
    while (!undominated.empty()) {
      int pick = -1;
      int gain = 0;
      for (int v = 0; v < model_.order(); ++v) {
        int c = model_.closed(v).intersection_size(undominated);
        if (c > gain) {
          gain = c;
          pick = v;
        }
      }
      undominated -= model_.closed(pick);
      ++k;
    }
    return k;
  }

  void search(const VertexSet& undominated, VertexSet allowed, VertexSet chosen, int size) {
    counter_.tick();
    if (undominated.empty()) {
      if (size < best_) {
        best_ = size;
        best_set_ = chosen;
      }
      return;
    }
    if (size + 1 >= best_) return;
    if (size + model_.domination_bound(undominated, allowed) >= best_) return;
    auto [u, count] = model_.branch_vertex(undominated, allowed);
    if (count == 0) return;
    const VertexSet candidates = model_.closed(u) & allowed;
    candidates.for_each([&](int v) {
      if (size + 1 >= best_) return;
      allowed.erase(v);
      VertexSet next = chosen;
      next.insert(v);
      search(undominated - model_.closed(v), allowed, next, size + 1);
    });
  }

  CoverModel model_;
  NodeCounter counter_;
  int best_ = 0;
  VertexSet best_set_;
};

class RomanSearch {
 public:
  RomanSearch(const Graph& g, const SolverLimits& limits)
      : model_(g), counter_(limits.node_budget) {}

  // Returns the optimal B_2 set and the weight 2|S| + n - |N[S]|.
  std::pair<int, VertexSet> run() {
    const int n = model_.order();
    best_ = greedy_weight() + 1;
    search(VertexSet::full(n), VertexSet::full(n), VertexSet{}, 0);
    return {best_, best_set_};
  }

  std::uint64_t node_count() const { return counter_.count(); }

 private:
  int greedy_weight() const {
    VertexSet undominated = VertexSet::full(model_.order());
    int weight = 0;
    for (;;) {
      int pick = -1;
      int gain = 2;
      for (int v = 0; v < model_.order(); ++v) {
        int c = model_.closed(v).intersection_size(undominated);
        if (c > gain) {
          gain = c;
          pick = v;
        }
      }
      if (pick < 0) break;
      undominated -= model_.closed(pick);
      weight += 2;
    }
    return weight + undominated.size();
  }

  // cost = 2|chosen| + number of vertices already committed to label 1.
  void search(VertexSet undominated, VertexSet allowed, VertexSet chosen, int cost) {
    counter_.tick();
    // Vertices with no remaining dominator are committed to label 1.
    VertexSet stuck;
    undominated.for_each([&](int u) {
      if (!model_.closed(u).intersects(allowed)) stuck.insert(u);
    });
    cost += stuck.size();
    undominated -= stuck;

    if (undominated.empty()) {
      if (cost < best_) {
        best_ = cost;
        best_set_ = chosen;
      }
      return;
    }
    if (cost + 1 >= best_) return;
    if (cost + model_.roman_bound(undominated, allowed) >= best_) return;

    auto [u, count] = model_.branch_vertex(undominated, allowed);
    const VertexSet candidates = model_.closed(u) & allowed;
    bool pruned = false;
    candidates.for_each([&](int v) {
      if (pruned || cost + 2 >= best_) {
        pruned = true;
        return;
      }
      allowed.erase(v);
      VertexSet next = chosen;
      next.insert(v);
      search(undominated - model_.closed(v), allowed, next, cost + 2);
    });
    // u is dominated by none of its candidates: it carries label 1.
    allowed -= candidates;
    VertexSet rest = undominated;
    rest.erase(u);
    if (cost + 1 < best_) search(rest, allowed, chosen, cost + 1);
  }

  CoverModel model_;
  NodeCounter counter_;
  int best_ = 0;
  VertexSet best_set_;
};

// Maximum independent set by branch and bound with a greedy clique-cover
// bound (each clique contributes at most one vertex).
class IndependentSetSearch {
 public:
  IndependentSetSearch(const Graph& g, const SolverLimits& limits)
      : graph_(g), counter_(limits.node_budget) {}

  SetResult run() {
    best_ = 0;
    expand(graph_.vertices(), VertexSet{}, 0);
    return {best_, best_set_, counter_.count()};
  }

 private:
  void expand(VertexSet candidates, const VertexSet& chosen, int size) {
    counter_.tick();
    if (candidates.empty()) {
      if (size > best_) {
        best_ = size;
        best_set_ = chosen;
      }
      return;
    }
    // Clique cover in ascending vertex order; bound[i] = cliques used by the
    // first i+1 vertices of `order`.
    std::array<int, kMaxVertices> order;
    std::array<int, kMaxVertices> bound;
    int m = 0;
    int cliques = 0;
    VertexSet uncovered = candidates;
    while (!uncovered.empty()) {
      ++cliques;
      VertexSet open = uncovered;
      while (!open.empty()) {
        int v = open.first();
        open &= graph_.neighbors(v);
        uncovered.erase(v);
        order[m] = v;
        bound[m] = cliques;
        ++m;
      }
    }
    for (int i = m - 1; i >= 0; --i) {
      if (size + bound[i] <= best_) return;
      int v = order[i];
      VertexSet next = chosen;
      next.insert(v);
      expand(candidates - graph_.closed_neighbors(v), next, size + 1);
      candidates.erase(v);
    }
    if (size > best_) {
      best_ = size;
      best_set_ = chosen;
    }
  }

  const Graph& graph_;
  NodeCounter counter_;
  int best_ = 0;
  VertexSet best_set_;
};

}  // namespace detail

// γ(g) with a minimum dominating set as witness.
inline SetResult domination_number(const Graph& g, const SolverLimits& limits = {}) {
  detail::check_solve_size(g, limits);
  return detail::DominationSearch(g, limits).run();
}

// γ_R(g). The search runs over candidate sets S = B_2 only: once B_2 is
// fixed, the cheapest valid labeling puts 1 exactly on V \ N[S] (those
// vertices cannot be 0, and any other 1 could drop to 0), so
// γ_R(g) = min_S 2|S| + n - |N[S]|.
inline RomanResult roman_domination_number(const Graph& g, const SolverLimits& limits = {}) {
  detail::check_solve_size(g, limits);
  detail::RomanSearch search(g, limits);
  auto [value, twos] = search.run();
  return {value, RomanFunction::from_twos(g, twos), search.node_count()};
}

// P_2(g): a largest set of vertices pairwise at distance > 2, found as a
// maximum independent set of the square graph.
inline SetResult two_packing_number(const Graph& g, const SolverLimits& limits = {}) {
  detail::check_solve_size(g, limits);
  const Graph sq = square(g);
  return detail::IndependentSetSearch(sq, limits).run();
}

// All optimal Roman dominating functions, ordered by B_2 bit pattern.
// Optimal functions correspond one-to-one to sets S with
// 2|S| + n - |N[S]| = γ_R(g) (B_1 is forced to V \ N[S]).
inline std::vector<RomanFunction> enumerate_optimal_rdfs(const Graph& g,
                                                         const SolverLimits& limits = {}) {
  if (g.order() > limits.enumerate_max_n) {
    throw CapacityError("enumeration of optimal Roman functions is limited to " +
                        std::to_string(limits.enumerate_max_n) + " vertices");
  }
  const int target = roman_domination_number(g, limits).value;
  const int n = g.order();
  detail::CoverModel model(g);
  detail::NodeCounter counter(limits.node_budget);
  std::vector<VertexSet> found;

  // Decide vertices in ascending order; `allowed` holds the undecided ones.
  auto recurse = [&](auto&& self, int next, const VertexSet& chosen,
                     const VertexSet& undominated) -> void {
    counter.tick();
    const int cost = 2 * chosen.size();
    VertexSet allowed;
    for (int v = next; v < n; ++v) allowed.insert(v);
    if (cost + model.roman_bound(undominated, allowed) > target) return;
    if (next == n) {
      if (cost + undominated.size() == target) found.push_back(chosen);
      return;
    }
    VertexSet with = chosen;
    with.insert(next);
    self(self, next + 1, with, undominated - model.closed(next));
    self(self, next + 1, chosen, undominated);
  };
  recurse(recurse, 0, VertexSet{}, VertexSet::full(n));

  std::sort(found.begin(), found.end());
  std::vector<RomanFunction> out;
  out.reserve(found.size());
  for (const auto& s : found) out.push_back(RomanFunction::from_twos(g, s));
  return out;
}

// Every perfect code (efficient dominating set): closed neighborhoods of its
// members partition V. Empty iff g has no perfect code. Sorted by bit pattern.
inline std::vector<VertexSet> efficient_dominating_sets(const Graph& g,
                                                        const SolverLimits& limits = {}) {
  detail::check_solve_size(g, limits);
  const int n = g.order();
  detail::CoverModel model(g);
  detail::NodeCounter counter(limits.node_budget);
  std::vector<VertexSet> out;

  auto recurse = [&](auto&& self, const VertexSet& covered, const VertexSet& chosen) -> void {
    counter.tick();
    const VertexSet open = VertexSet::full(n) - covered;
    if (open.empty()) {
      out.push_back(chosen);
      return;
    }
    // Exact cover: pick the uncovered vertex with the fewest usable dominators.
    int pick = -1;
    int pick_count = n + 1;
    VertexSet pick_options;
    open.for_each([&](int u) {
      if (pick_count == 0) return;
      VertexSet options;
      model.closed(u).for_each([&](int v) {
        if (!model.closed(v).intersects(covered)) options.insert(v);
      });
      if (options.size() < pick_count) {
        pick = u;
        pick_count = options.size();
        pick_options = options;
      }
    });
    if (pick_count == 0) return;
    pick_options.for_each([&](int v) {
      VertexSet next = chosen;
      next.insert(v);
      self(self, covered | model.closed(v), next);
    });
  };
  recurse(recurse, VertexSet{}, VertexSet{});
  std::sort(out.begin(), out.end());

  if (!out.empty()) {
    const int gamma = domination_number(g, limits).value;
    for (const auto& code : out) {
      if (code.size() != gamma) {
        throw std::logic_error("perfect code size differs from the domination number");
      }
    }
  }
  return out;
}

inline bool has_perfect_code(const Graph& g, const SolverLimits& limits = {}) {
  return !efficient_dominating_sets(g, limits).empty();
}

// γ_R(g) = 2γ(g). When g is small enough to enumerate, also confirms the
// equivalent form: some optimal function has no vertex labeled 1.
inline bool is_roman(const Graph& g, const SolverLimits& limits = {}) {
  const bool roman = roman_domination_number(g, limits).value ==
                     2 * domination_number(g, limits).value;
  if (g.order() <= limits.enumerate_max_n) {
    bool no_ones = false;
    for (const auto& f : enumerate_optimal_rdfs(g, limits)) {
      if (f.b1().empty()) {
        no_ones = true;
        break;
      }
    }
    if (no_ones != roman) {
      throw std::logic_error("Roman graph characterizations disagree on " + g.label());
    }
  }
  return roman;
}

// Some vertex has degree n - γ(g).
inline bool has_full_degree_vertex(const Graph& g, const SolverLimits& limits = {}) {
  const int target = g.order() - domination_number(g, limits).value;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == target) return true;
  }
  return false;
}

}  // namespace romdom
