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

#include "romdom/graph.hpp"

#include <bit>
#include <set>
#include <string>

#include "gtest/gtest.h"
#include "oracle.hpp"
#include "romdom/graph6.hpp"
#include "romdom/suite.hpp"

namespace romdom {
namespace {

using Edges = std::vector<std::pair<int, int>>;

Graph P(int n) { return make_family(FamilySpec::path(n)); }
Graph C(int n) { return make_family(FamilySpec::cycle(n)); }
Graph K(int n) { return make_family(FamilySpec::complete(n)); }

void expect_simple(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    EXPECT_FALSE(g.adjacent(v, v));
    for (int u = 0; u < g.order(); ++u) EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
  }
}

TEST(Families, PathEdges) {
  EXPECT_EQ(P(4).edges(), (Edges{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(P(4).label(), "P4");
}

TEST(Families, Hypercube) {
  Graph q = make_family(FamilySpec::hypercube(3));
  EXPECT_EQ(q.order(), 8);
  EXPECT_EQ(q.edge_count(), 12);
  for (int v = 0; v < 8; ++v) {
    EXPECT_EQ(q.degree(v), 3);
    for (int u = 0; u < 8; ++u) EXPECT_EQ(q.adjacent(u, v), std::popcount(unsigned(u ^ v)) == 1);
  }
  // Q3 = K2 x K2 x K2 up to the numbering, which here is identical.
  Graph k2 = K(2);
  Graph q3 = product(product(k2, k2, ProductKind::cartesian), k2, ProductKind::cartesian);
  EXPECT_EQ(q3, q);
}

TEST(Families, StarAndSpider) {
  Graph s = make_family(FamilySpec::star(3));
  EXPECT_EQ(s.edges(), (Edges{{0, 1}, {0, 2}, {0, 3}}));
  Graph sp = make_family(FamilySpec::spider(3, 1));
  EXPECT_EQ(sp.order(), 5);
  EXPECT_EQ(sp.edges(), (Edges{{0, 1}, {0, 2}, {0, 3}, {1, 4}}));
  Graph sp2 = make_family(FamilySpec::spider(3, 0b110));
  EXPECT_EQ(sp2.edges(), (Edges{{0, 1}, {0, 2}, {0, 3}, {2, 4}, {3, 5}}));
}

TEST(Families, RandomIsReproducible) {
  auto spec = FamilySpec::random(6, 1, 2, 42);
  EXPECT_EQ(make_family(spec).edges(), make_family(spec).edges());
  auto other = FamilySpec::random(6, 1, 2, 43);
  // Pinned fixture: the first SplitMix64 outputs for seed 42.
  SplitMix64 rng(42);
  EXPECT_EQ(rng.next(), 0xbdd732262feb6e95ULL);
  EXPECT_NE(make_family(spec).edges(), make_family(other).edges());
  EXPECT_EQ(make_family(FamilySpec::random(5, 0, 1, 7)).edge_count(), 0);
  EXPECT_EQ(make_family(FamilySpec::random(5, 1, 1, 7)).edge_count(), 10);
}

TEST(Families, InvalidParameters) {
  EXPECT_THROW(make_family(FamilySpec::cycle(2)), ParameterError);
  EXPECT_THROW(make_family(FamilySpec::star(0)), ParameterError);
  EXPECT_THROW(make_family(FamilySpec::hypercube(0)), ParameterError);
  EXPECT_THROW(make_family(FamilySpec::path(0)), ParameterError);
  EXPECT_THROW(make_family(FamilySpec::spider(2, 0b100)), ParameterError);
  EXPECT_THROW(make_family(FamilySpec::random(4, 3, 2, 1)), ParameterError);
  EXPECT_THROW(make_family(FamilySpec::path(kMaxVertices + 1)), CapacityError);
  EXPECT_THROW(make_family(FamilySpec::hypercube(std::bit_width(unsigned(kMaxVertices)))),
               CapacityError);
}

TEST(GraphType, RejectsLoopsAndAsymmetry) {
  EXPECT_THROW(Graph(2, Edges{{1, 1}}), InputError);
  EXPECT_THROW(Graph(2, Edges{{0, 2}}), InputError);
  std::vector<VertexSet> adj(2);
  adj[0].insert(1);
  EXPECT_THROW(Graph(std::move(adj)), InputError);
  EXPECT_THROW(Graph(0, Edges{}), InputError);
}

TEST(Product, SmallCases) {
  Graph k2 = K(2);
  Graph c4 = product(k2, k2, ProductKind::cartesian);
  EXPECT_EQ(c4.edge_count(), 4);
  for (int v = 0; v < 4; ++v) EXPECT_EQ(c4.degree(v), 2);
  EXPECT_EQ(product(k2, k2, ProductKind::strong), K(4));

  Graph grid = product(P(3), P(3), ProductKind::cartesian);
  EXPECT_EQ(grid.order(), 9);
  EXPECT_EQ(grid.edge_count(), 12);
  EXPECT_EQ(grid.label(), "P3 x P3");
  EXPECT_EQ(product(C(5), make_family(FamilySpec::star(3)), ProductKind::strong).label(),
            "C5 x K1,3 strong");
}

TEST(Product, RowMajorNumbering) {
  Graph g = P(3);
  Graph h = P(2);
  Graph p = product(g, h, ProductKind::cartesian);
  // (i, j) -> 2 i + j
  EXPECT_TRUE(p.adjacent(0 * 2 + 0, 0 * 2 + 1));
  EXPECT_TRUE(p.adjacent(1 * 2 + 1, 2 * 2 + 1));
  EXPECT_FALSE(p.adjacent(0 * 2 + 0, 1 * 2 + 1));
  EXPECT_TRUE(product(g, h, ProductKind::strong).adjacent(0 * 2 + 0, 1 * 2 + 1));
}

TEST(Product, CapacityError) {
  const int side = kMaxVertices == 64 ? 8 : 11;  // side^2 <= capacity < (side+1)^2
  Graph big = P(side + 1);
  EXPECT_THROW(product(big, big, ProductKind::cartesian), CapacityError);
  EXPECT_NO_THROW(product(P(side), P(side), ProductKind::cartesian));
}

// Edge-count identities and Cartesian ⊆ strong over families with n <= 6.
TEST(Product, EdgeCountIdentities) {
  std::vector<Graph> fam;
  for (int n = 1; n <= 6; ++n) {
    fam.push_back(P(n));
    fam.push_back(K(n));
    if (n >= 3) fam.push_back(C(n));
    if (n >= 2) fam.push_back(make_family(FamilySpec::star(n - 1)));
  }
  fam.push_back(make_family(FamilySpec::spider(3, 1)));
  fam.push_back(make_family(FamilySpec::hypercube(2)));
  for (const auto& g : fam) {
    for (const auto& h : fam) {
      const int n1 = g.order(), n2 = h.order();
      const int e1 = g.edge_count(), e2 = h.edge_count();
      Graph cart = product(g, h, ProductKind::cartesian);
      Graph strong = product(g, h, ProductKind::strong);
      ASSERT_EQ(cart.order(), n1 * n2);
      EXPECT_EQ(cart.edge_count(), n1 * e2 + n2 * e1) << cart.label();
      EXPECT_EQ(strong.edge_count(), n1 * e2 + n2 * e1 + 2 * e1 * e2) << strong.label();
      for (int v = 0; v < cart.order(); ++v)
        EXPECT_TRUE(cart.neighbors(v).subset_of(strong.neighbors(v)));
      expect_simple(cart);
      expect_simple(strong);
    }
  }
}

TEST(Square, Examples) {
  EXPECT_EQ(square(P(4)).edges(), (Edges{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(square(K(5)), K(5));
  Graph s = square(C(6));
  EXPECT_EQ(s.order(), 6);
  for (int v = 0; v < 6; ++v) EXPECT_EQ(s.degree(v), 4);
}

// Against BFS distances for every labeled graph on n <= 5.
TEST(Square, MatchesDistanceOracle) {
  for (const auto& g : exhaustive_labeled(5)) {
    const auto d = oracle::distances(g);
    const Graph s = square(g);
    for (int u = 0; u < g.order(); ++u)
      for (int v = 0; v < g.order(); ++v)
        ASSERT_EQ(s.adjacent(u, v), d[u][v] >= 1 && d[u][v] <= 2) << write_graph6(g);
  }
}

TEST(Components, Examples) {
  auto c = components(P(4));
  ASSERT_EQ(c.size(), 1U);
  EXPECT_EQ(c[0], VertexSet::of({0, 1, 2, 3}));

  Graph k2k1(3, Edges{{0, 1}});
  c = components(k2k1);
  ASSERT_EQ(c.size(), 2U);
  EXPECT_EQ(c[0], VertexSet::of({0, 1}));
  EXPECT_EQ(c[1], VertexSet::of({2}));

  c = components(Graph(3, Edges{}));
  ASSERT_EQ(c.size(), 3U);
  for (int v = 0; v < 3; ++v) EXPECT_EQ(c[v], VertexSet::of({v}));

  EXPECT_TRUE(has_component_larger_than(disjoint_union(P(3), K(1)), 2));
  EXPECT_FALSE(has_component_larger_than(disjoint_union(K(2), K(2)), 2));
}

TEST(Graph6, Examples) {
  EXPECT_EQ(parse_graph6("C~"), K(4));
  EXPECT_EQ(oracle::decode_graph6_small("C~"), K(4).edges());
  EXPECT_EQ(write_graph6(K(1)), "@");
  EXPECT_EQ(parse_graph6("@").order(), 1);
  EXPECT_EQ(parse_graph6(">>graph6<<C~\n"), K(4));
  EXPECT_THROW(parse_graph6("garbage\x01"), ParseError);
}

TEST(Graph6, Errors) {
  try {
    parse_graph6("C~\x01");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2U);
  }
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("C~~"), ParseError);   // too many data bytes
  EXPECT_THROW(parse_graph6("C"), ParseError);     // too few
  EXPECT_THROW(parse_graph6("B@"), ParseError);    // n=3 uses 3 bits; padding bit set
  EXPECT_NO_THROW(parse_graph6("Bw"));
  EXPECT_THROW(parse_graph6("?"), ParseError);     // n = 0
  EXPECT_THROW(parse_graph6("~?A"), ParseError);   // truncated long header
}

TEST(Graph6, LongHeader) {
  Graph p = P(63);
  const std::string s = write_graph6(p);
  EXPECT_EQ(s.substr(0, 4), "~??~");
  EXPECT_EQ(parse_graph6(s), p);
}

// parse(write(g)) == g, and write agrees with the independent decoder.
TEST(Graph6, RoundTripRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const int n = 1 + static_cast<int>(seed % 7);
    Graph g = make_family(FamilySpec::random(n, 1, 2, seed));
    const std::string s = write_graph6(g);
    ASSERT_EQ(parse_graph6(s), g) << s;
    ASSERT_EQ(oracle::decode_graph6_small(s), g.edges()) << s;
  }
}

TEST(Exhaustive, CountsLabeledGraphs) {
  EXPECT_EQ(exhaustive_labeled(4).size(), 75U);
  EXPECT_EQ(exhaustive_labeled(5).size(), 75U + 1024U);
  std::set<std::string> distinct;
  for (const auto& g : exhaustive_labeled(4)) distinct.insert(write_graph6(g));
  EXPECT_EQ(distinct.size(), 75U);
}

TEST(VertexSetType, OrderingAndBasics) {
  VertexSet a = VertexSet::of({0, 3});
  VertexSet b = VertexSet::of({1, 2});
  EXPECT_LT(b, a);  // 0b0110 < 0b1001
  EXPECT_EQ(a.size(), 2);
  EXPECT_EQ(a.first(), 0);
  EXPECT_EQ(VertexSet{}.first(), -1);
  EXPECT_EQ((a | b), VertexSet::full(4));
  EXPECT_EQ(VertexSet::full(kMaxVertices).size(), kMaxVertices);
  EXPECT_EQ((VertexSet::full(4) - a), b);
}

}  // namespace
}  // namespace romdom
