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
#include <atomic>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "romdom/constructions.hpp"
#include "romdom/graph.hpp"
#include "romdom/graph6.hpp"
#include "romdom/solvers.hpp"
#include "romdom/theorems.hpp"

namespace romdom {

// ---------------------------------------------------------------------------
// Corpora

// Every labeled graph on 1..max_n vertices: by order, then by edge mask where
// bit k is the k-th vertex pair in graph6 order.
inline std::vector<Graph> exhaustive_labeled(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    const std::uint64_t masks = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      std::vector<std::pair<int, int>> edges;
      for (std::size_t k = 0; k < pairs.size(); ++k)
        if ((mask >> k) & 1U) edges.push_back(pairs[k]);
      out.emplace_back(n, edges, "L" + std::to_string(n) + "#" + std::to_string(mask));
    }
  }
  return out;
}

// P2..P5, C3..C5, K2..K4, K1,2, K1,3, spider(3,1), Q3 and K2 + K1.
inline std::vector<Graph> default_family_corpus() {
  std::vector<Graph> out;
  for (int n = 2; n <= 5; ++n) out.push_back(make_family(FamilySpec::path(n)));
  for (int n = 3; n <= 5; ++n) out.push_back(make_family(FamilySpec::cycle(n)));
  for (int n = 2; n <= 4; ++n) out.push_back(make_family(FamilySpec::complete(n)));
  out.push_back(make_family(FamilySpec::star(2)));
  out.push_back(make_family(FamilySpec::star(3)));
  out.push_back(make_family(FamilySpec::spider(3, 1)));
  out.push_back(make_family(FamilySpec::hypercube(3)));
  out.push_back(disjoint_union(make_family(FamilySpec::complete(2)),
                               make_family(FamilySpec::complete(1))));
  return out;
}

// `count` graphs with order drawn uniformly from [n_min, n_max] and edge
// probability 1/2; graph i uses seed + i.
inline std::vector<Graph> random_corpus(int count, int n_min, int n_max, std::uint64_t seed) {
  std::vector<Graph> out;
  SplitMix64 orders(seed);
  for (int i = 0; i < count; ++i) {
    const int n = n_min + static_cast<int>(orders.next() % static_cast<std::uint64_t>(n_max - n_min + 1));
    out.push_back(make_family(FamilySpec::random(n, 1, 2, seed + static_cast<std::uint64_t>(i))));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Suites

struct SuiteSpec {
  std::string name = "suite";
  std::string corpus_description;
  std::vector<Graph> graphs;
  // Explicit ordered pairs evaluated after the corpus pairs.
  std::vector<std::pair<Graph, Graph>> extra_pairs;
  bool all_pairs = true;
  std::vector<TheoremId> theorems = all_theorems();
  std::set<ProductKind> products = {ProductKind::cartesian, ProductKind::strong};
  // Pairs whose product exceeds this order are left out of the corpus.
  int max_product_order = kMaxVertices;
  SolverLimits limits;
  int jobs = 1;
};

struct Summary {
  long long records = 0;
  long long checked = 0;
  long long held = 0;
  long long violated = 0;
  long long tight = 0;
  long long hypothesis_skipped = 0;
  long long budget_skipped = 0;
  long long construction_failures = 0;
};

struct Report {
  std::string suite;
  std::string corpus;
  std::vector<BoundRecord> records;
  Summary summary;

  bool all_held() const { return summary.violated == 0 && summary.construction_failures == 0; }
};

inline Summary summarize(const std::vector<BoundRecord>& records) {
  Summary s;
  for (const auto& r : records) {
    ++s.records;
    switch (r.status) {
      case RecordStatus::checked:
        ++s.checked;
        if (r.holds) {
          ++s.held;
        } else {
          ++s.violated;
        }
        if (r.tight) ++s.tight;
        if (r.construction_ok == false) ++s.construction_failures;
        break;
      case RecordStatus::hypothesis_skipped: ++s.hypothesis_skipped; break;
      case RecordStatus::budget_skipped: ++s.budget_skipped; break;
    }
  }
  return s;
}

namespace detail {

struct WorkItem {
  int g = -1;
  int h = -1;  // -1 for single-graph checks
  const Graph* g_graph = nullptr;
  const Graph* h_graph = nullptr;
};

}  // namespace detail

// Evaluates every selected theorem on the corpus. Records come out in
// corpus order × theorem order: single-graph checks for each graph first,
// then each ordered pair (and the explicit extra pairs). Work items may run
// on several threads; each writes only its own slot, so the report does not
// depend on `jobs`.
inline Report run_suite(const SuiteSpec& spec) {
  std::vector<TheoremId> unary;
  std::vector<TheoremId> binary;
  for (TheoremId t : spec.theorems) {
    const auto& info = theorem_info(t);
    if (info.arity == 1) {
      unary.push_back(t);
    } else if (spec.products.contains(*info.product)) {
      binary.push_back(t);
    }
  }

  std::vector<Analysis> factors;
  factors.reserve(spec.graphs.size());
  for (const auto& g : spec.graphs) factors.emplace_back(g, spec.limits);

  std::vector<detail::WorkItem> items;
  if (!unary.empty()) {
    for (int i = 0; i < static_cast<int>(spec.graphs.size()); ++i) items.push_back({i, -1});
  }
  auto fits = [&](const Graph& g, const Graph& h) {
    return static_cast<long long>(g.order()) * h.order() <= spec.max_product_order;
  };
  if (!binary.empty()) {
    if (spec.all_pairs) {
      for (int i = 0; i < static_cast<int>(spec.graphs.size()); ++i)
        for (int j = 0; j < static_cast<int>(spec.graphs.size()); ++j)
          if (fits(spec.graphs[i], spec.graphs[j])) items.push_back({i, j});
    }
    for (const auto& [g, h] : spec.extra_pairs)
      if (fits(g, h)) items.push_back({-1, -1, &g, &h});
  }

  // Factor invariants are shared between threads, so compute them up front.
  for (auto& a : factors) a.precompute();

  std::vector<std::vector<BoundRecord>> slots(items.size());
  auto work = [&](std::size_t k) {
    const auto& item = items[k];
    if (item.g_graph != nullptr) {
      Analysis ga(*item.g_graph, spec.limits);
      Analysis ha(*item.h_graph, spec.limits);
      PairContext ctx(ga, &ha);
      for (TheoremId t : binary) slots[k].push_back(evaluate(t, ctx));
      return;
    }
    // Copies keep lazily computed state thread-local.
    Analysis ga = factors[item.g];
    if (item.h < 0) {
      PairContext ctx(ga, nullptr);
      for (TheoremId t : unary) slots[k].push_back(evaluate(t, ctx));
      return;
    }
    Analysis ha = factors[item.h];
    PairContext ctx(ga, &ha);
    for (TheoremId t : binary) slots[k].push_back(evaluate(t, ctx));
  };

  const int jobs = std::max(1, spec.jobs);
  if (jobs == 1) {
    for (std::size_t k = 0; k < items.size(); ++k) work(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < items.size(); k = next++) work(k);
      });
    }
    for (auto& th : pool) th.join();
  }

  Report report;
  report.suite = spec.name;
  report.corpus = spec.corpus_description;
  for (auto& slot : slots)
    for (auto& r : slot) report.records.push_back(std::move(r));
  report.summary = summarize(report.records);
  return report;
}

inline Json to_json(const Summary& s) {
  return Json{{"records", s.records},
              {"checked", s.checked},
              {"held", s.held},
              {"violated", s.violated},
              {"tight", s.tight},
              {"hypothesis_skipped", s.hypothesis_skipped},
              {"budget_skipped", s.budget_skipped},
              {"construction_failures", s.construction_failures}};
}

inline Json to_json(const Report& report) {
  Json records = Json::array();
  for (const auto& r : report.records) records.push_back(to_json(r));
  return Json{{"suite", report.suite},
              {"corpus", report.corpus},
              {"records", std::move(records)},
              {"summary", to_json(report.summary)}};
}

namespace detail {
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}
}  // namespace detail

// One row per record, witnesses omitted.
inline std::string to_csv(const Report& report) {
  std::ostringstream os;
  os << "theorem,g,h,product,status,hypotheses_met,relation,scale,lhs,rhs_low,rhs,holds,tight,"
        "construction_ok,reason\n";
  for (const auto& r : report.records) {
    const bool checked = r.status == RecordStatus::checked;
    os << to_string(r.theorem) << ',' << detail::csv_field(r.g_label) << ','
       << detail::csv_field(r.h_label) << ',' << (r.product ? to_string(*r.product) : "") << ','
       << to_string(r.status) << ',' << (r.hypotheses_met ? "true" : "false") << ','
       << (checked ? to_string(r.relation) : "") << ',';
    if (checked) {
      os << r.scale << ',' << r.lhs << ',' << (r.rhs_low ? std::to_string(*r.rhs_low) : "")
         << ',' << r.rhs << ',' << (r.holds ? "true" : "false") << ','
         << (r.tight ? "true" : "false");
    } else {
      os << ",,,,,";
    }
    os << ',' << (r.construction_ok ? (*r.construction_ok ? "true" : "false") : "") << ','
       << detail::csv_field(r.reason) << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Path / cycle premise check

enum class PathOrCycle { path, cycle };

struct PremiseRecord {
  int n = 0;
  PathOrCycle kind = PathOrCycle::path;
  std::vector<int> b2_sizes;  // distinct |B2| over all optimal functions
  int expected = 0;           // floor(n / 3)
  bool premise_holds = false;
  std::string partner;        // the non-empty graph G in G*H
  long long exact = 0;        // gammaR(G*H)
  long long bound = 0;        // the displayed right-hand side
  bool inequality_holds = false;
  // strong_case_from with an H function whose |B2| = floor(n/3), when one exists.
  std::optional<ConstructionOutcome> forced;
  bool forced_valid = false;
};

// Enumerates every optimal Roman function of P_n or C_n and reports which
// |B2| values occur, separately from the displayed inequality evaluated on
// partner ⊠ H.
inline PremiseRecord check_pncn_premise(int n, PathOrCycle kind, const Graph& partner,
                                        const SolverLimits& limits = {}) {
  if (n < 3) throw ParameterError("premise check needs n >= 3");
  if (n > limits.enumerate_max_n) {
    throw CapacityError("premise check is limited to n <= " + std::to_string(limits.enumerate_max_n));
  }
  if (partner.edge_count() == 0) throw ParameterError("partner graph must have an edge");
  const Graph h = make_family(kind == PathOrCycle::path ? FamilySpec::path(n) : FamilySpec::cycle(n));
  PremiseRecord rec;
  rec.n = n;
  rec.kind = kind;
  rec.expected = n / 3;
  rec.partner = partner.label();

  const auto rdfs = enumerate_optimal_rdfs(h, limits);
  std::set<int> sizes;
  const RomanFunction* forced_h = nullptr;
  for (const auto& f : rdfs) {
    sizes.insert(f.b2().size());
    if (forced_h == nullptr && f.b2().size() == rec.expected) forced_h = &f;
  }
  rec.b2_sizes.assign(sizes.begin(), sizes.end());
  rec.premise_holds = rec.b2_sizes == std::vector<int>{rec.expected};

  const long long rG = roman_domination_number(partner, limits).value;
  const long long factor = n % 3 == 1 ? (2LL * n + 1) / 3 : 2LL * ((n + 2) / 3);
  rec.bound = factor * rG - 2LL * rec.expected;
  rec.exact = roman_domination_number(product(partner, h, ProductKind::strong), limits).value;
  rec.inequality_holds = rec.exact <= rec.bound;

  if (forced_h != nullptr) {
    SelectionMode mode = SelectionMode::optimized;
    const RomanFunction fg = detail::select_optimal(
        partner, limits, [](const RomanFunction& f) { return f.b2().size(); }, mode);
    rec.forced = strong_case_from(partner, h, fg, *forced_h, mode);
    rec.forced_valid = validate_rdf(rec.forced->product, rec.forced->rdf);
  }
  return rec;
}

inline Json to_json(const PremiseRecord& r) {
  Json j{{"n", r.n},
         {"kind", r.kind == PathOrCycle::path ? "path" : "cycle"},
         {"b2_sizes", r.b2_sizes},
         {"expected", r.expected},
         {"premise_holds", r.premise_holds},
         {"partner", r.partner},
         {"exact", r.exact},
         {"bound", r.bound},
         {"inequality_holds", r.inequality_holds}};
  if (r.forced) {
    Json c = to_json(*r.forced);
    c["valid"] = r.forced_valid;
    j["forced_construction"] = std::move(c);
  } else {
    j["forced_construction"] = nullptr;
  }
  return j;
}

}  // namespace romdom
