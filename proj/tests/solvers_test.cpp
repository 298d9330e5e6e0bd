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

#include "romdom/solvers.hpp"

#include <algorithm>

#include "gtest/gtest.h"
#include "oracle.hpp"
#include "romdom/graph6.hpp"
#include "romdom/suite.hpp"

namespace romdom {
namespace {

Graph P(int n) { return make_family(FamilySpec::path(n)); }
Graph C(int n) { return make_family(FamilySpec::cycle(n)); }
Graph K(int n) { return make_family(FamilySpec::complete(n)); }
Graph Star(int r) { return make_family(FamilySpec::star(r)); }
Graph Spider31() { return make_family(FamilySpec::spider(3, 1)); }
Graph Q(int d) { return make_family(FamilySpec::hypercube(d)); }

std::vector<int> labels_of(const RomanFunction& f) {
  return {f.labels().begin(), f.labels().end()};
}

// All labeled graphs on n <= 5 plus seeded random graphs on n = 6.
std::vector<Graph> small_corpus() {
  auto out = exhaustive_labeled(5);
  for (std::uint64_t s = 0; s < 40; ++s) out.push_back(make_family(FamilySpec::random(6, 1, 2, s)));
  return out;
}

TEST(Domination, Examples) {
  EXPECT_EQ(domination_number(P(4)).value, 2);
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(domination_number(K(n)).value, 1);
  EXPECT_EQ(domination_number(Spider31()).value, 2);
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(domination_number(P(n)).value, (n + 2) / 3);
}

TEST(Domination, WitnessDominates) {
  for (const auto& g : small_corpus()) {
    auto r = domination_number(g);
    EXPECT_EQ(r.witness.size(), r.value);
    EXPECT_EQ(g.closed_neighbors(r.witness), g.vertices()) << write_graph6(g);
  }
}

TEST(RomanDomination, Examples) {
  EXPECT_EQ(roman_domination_number(P(4)).value, 3);
  EXPECT_EQ(roman_domination_number(P(6)).value, 4);
  for (int r = 2; r <= 6; ++r) EXPECT_EQ(roman_domination_number(Star(r)).value, 2);
  EXPECT_EQ(roman_domination_number(K(1)).value, 1);
  EXPECT_EQ(labels_of(roman_domination_number(K(1)).witness), std::vector<int>{1});
}

TEST(RomanDomination, IsolatedVertices) {
  Graph g(4, {{0, 1}});
  auto r = roman_domination_number(g);
  EXPECT_EQ(r.value, 4);  // K2 costs 2, each isolated vertex 1
  EXPECT_TRUE(validate_rdf(g, r.witness));
}

TEST(Packing, Examples) {
  EXPECT_EQ(two_packing_number(C(6)).value, 2);
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(two_packing_number(K(n)).value, 1);
  EXPECT_EQ(two_packing_number(P(7)).value, 3);
}

TEST(PerfectCodes, Examples) {
  auto p3 = efficient_dominating_sets(P(3));
  ASSERT_EQ(p3.size(), 1U);
  EXPECT_EQ(p3[0], VertexSet::of({1}));
  EXPECT_TRUE(efficient_dominating_sets(C(4)).empty());
  auto q3 = efficient_dominating_sets(Q(3));
  ASSERT_EQ(q3.size(), 4U);
  for (const auto& code : q3) EXPECT_EQ(code.size(), 2);
  EXPECT_TRUE(has_perfect_code(C(6)));
  EXPECT_FALSE(has_perfect_code(C(5)));
}

TEST(EnumerateRdfs, Examples) {
  auto p4 = enumerate_optimal_rdfs(P(4));
  ASSERT_EQ(p4.size(), 2U);
  EXPECT_EQ(p4[0].b2(), VertexSet::of({1}));
  EXPECT_EQ(p4[0].b1(), VertexSet::of({3}));
  EXPECT_EQ(p4[1].b2(), VertexSet::of({2}));
  EXPECT_EQ(p4[1].b1(), VertexSet::of({0}));

  auto k2 = enumerate_optimal_rdfs(K(2));
  ASSERT_EQ(k2.size(), 3U);
  EXPECT_EQ(labels_of(k2[0]), (std::vector<int>{1, 1}));
  EXPECT_EQ(labels_of(k2[1]), (std::vector<int>{2, 0}));
  EXPECT_EQ(labels_of(k2[2]), (std::vector<int>{0, 2}));

  auto k1 = enumerate_optimal_rdfs(K(1));
  ASSERT_EQ(k1.size(), 1U);
  EXPECT_EQ(labels_of(k1[0]), std::vector<int>{1});
}

TEST(EnumerateRdfs, Guard) {
  SolverLimits limits;
  limits.enumerate_max_n = 5;
  EXPECT_THROW(enumerate_optimal_rdfs(P(6), limits), CapacityError);
  EXPECT_NO_THROW(enumerate_optimal_rdfs(P(5), limits));
}

TEST(Budget, Exceeded) {
  SolverLimits limits;
  limits.node_budget = 3;
  EXPECT_THROW(roman_domination_number(Q(4), limits), BudgetExceeded);
  EXPECT_THROW(domination_number(Q(4), limits), BudgetExceeded);
}

TEST(SolveGuard, Configurable) {
  SolverLimits limits;
  limits.solve_max_n = 4;
  EXPECT_THROW(domination_number(P(5), limits), CapacityError);
}

TEST(Roman, Examples) {
  EXPECT_TRUE(is_roman(C(5)));
  EXPECT_FALSE(is_roman(P(4)));
  EXPECT_TRUE(is_roman(Star(3)));
  EXPECT_TRUE(is_roman(Q(3)));
  for (int k = 1; k <= 3; ++k) {
    EXPECT_TRUE(is_roman(C(3 * k)));
    EXPECT_TRUE(is_roman(P(3 * k)));
    EXPECT_TRUE(is_roman(P(3 * k + 2)));
    EXPECT_FALSE(is_roman(P(3 * k + 1)));
    EXPECT_TRUE(is_roman(C(3 * k + 2)));
  }
}

TEST(FullDegree, Examples) {
  EXPECT_TRUE(has_full_degree_vertex(Star(3)));
  EXPECT_FALSE(has_full_degree_vertex(C(6)));
  // spider(3,1): gamma = 2, n = 5, the center has degree 3.
  EXPECT_TRUE(has_full_degree_vertex(Spider31()));
}

// Branch and bound agrees with brute force on every labeled graph with
// n <= 5 and a batch of random graphs on 6 vertices.
TEST(OracleEquivalence, AllInvariants) {
  for (const auto& g : small_corpus()) {
    const std::string tag = write_graph6(g);
    ASSERT_EQ(domination_number(g).value, oracle::gamma(g)) << tag;
    ASSERT_EQ(two_packing_number(g).value, oracle::packing(g)) << tag;
    std::vector<std::uint64_t> codes;
    for (const auto& s : efficient_dominating_sets(g)) codes.push_back(s.words()[0]);
    ASSERT_EQ(codes, oracle::perfect_codes(g)) << tag;

    auto [value, all] = oracle::optimal_rdfs(g);
    ASSERT_EQ(roman_domination_number(g).value, value) << tag;
    auto enumerated = enumerate_optimal_rdfs(g);
    std::vector<std::vector<int>> got;
    for (const auto& f : enumerated) got.push_back(labels_of(f));
    std::sort(got.begin(), got.end());
    std::sort(all.begin(), all.end());
    ASSERT_EQ(got, all) << tag;
  }
}

TEST(Properties, SandwichLemmaAndPacking) {
  for (const auto& g : small_corpus()) {
    const std::string tag = write_graph6(g);
    const int gm = domination_number(g).value;
    const int gr = roman_domination_number(g).value;
    const int p2 = two_packing_number(g).value;
    EXPECT_LE(gm, gr) << tag;
    EXPECT_LE(gr, 2 * gm) << tag;
    EXPECT_LE(p2, gm) << tag;
    // gamma >= n / (Delta + 1)
    EXPECT_GE(gm * (g.max_degree() + 1), g.order()) << tag;
    for (const auto& f : enumerate_optimal_rdfs(g)) {
      EXPECT_LE(f.b2().size(), gr - gm) << tag;
      EXPECT_GE(f.b1().size(), 2 * gm - gr) << tag;
      EXPECT_TRUE(validate_rdf(g, f)) << tag;
      EXPECT_EQ(f.weight(), gr) << tag;
    }
    if (has_perfect_code(g)) {
      EXPECT_EQ(p2, gm) << tag;
      const int delta = g.min_degree();
      EXPECT_LE(gm * (delta + 1), g.order()) << tag;
      if (delta == g.max_degree()) {
        EXPECT_EQ(gm * (delta + 1), g.order()) << tag;
      }
    }
  }
}

// Connected graphs with n >= 2: gammaR = gamma + 1 iff some vertex has
// degree n - gamma. K1 is the exception (gammaR = gamma = 1).
TEST(Properties, GammaPlusOneCharacterization) {
  EXPECT_TRUE(has_full_degree_vertex(K(1)));
  EXPECT_EQ(roman_domination_number(K(1)).value, 1);
  for (const auto& g : exhaustive_labeled(5)) {
    if (!is_connected(g) || g.order() < 2) continue;
    const int gm = domination_number(g).value;
    const int gr = roman_domination_number(g).value;
    EXPECT_EQ(gr == gm + 1, has_full_degree_vertex(g)) << write_graph6(g);
  }
}

TEST(Properties, RomanIffOptimalWithoutOnes) {
  for (const auto& g : exhaustive_labeled(5)) {
    bool no_ones = false;
    for (const auto& f : enumerate_optimal_rdfs(g)) no_ones = no_ones || f.b1().empty();
    EXPECT_EQ(is_roman(g), no_ones) << write_graph6(g);
  }
}

TEST(Properties, Deterministic) {
  Graph g = product(C(5), P(4), ProductKind::cartesian);
  auto a = roman_domination_number(g);
  auto b = roman_domination_number(g);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.node_count, b.node_count);
  EXPECT_EQ(domination_number(g).witness, domination_number(g).witness);
  EXPECT_EQ(two_packing_number(g).witness, two_packing_number(g).witness);
}

TEST(LargerInstances, KnownValues) {
  EXPECT_EQ(roman_domination_number(product(P(4), P(4), ProductKind::cartesian)).value, 8);
  EXPECT_EQ(domination_number(Q(4)).value, 4);
  EXPECT_EQ(domination_number(product(C(6), C(6), ProductKind::strong)).value, 4);
  for (int n = 3; n <= 12; ++n) {
    // gammaR(C_n) = ceil(2n / 3)
    EXPECT_EQ(roman_domination_number(C(n)).value, (2 * n + 2) / 3) << n;
  }
}

}  // namespace
}  // namespace romdom
