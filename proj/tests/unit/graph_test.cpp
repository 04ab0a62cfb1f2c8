// Copyright 2026 The kpcst Authors
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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "core/error.hpp"
#include "core/graph.hpp"
#include "support/reference.hpp"

namespace kpcst {
namespace {

Graph Path3(int c1, int c2) { return Graph(3, {{0, 1, c1}, {1, 2, c2}}); }

std::vector<Vertex> All(int n) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

TEST(Kruskal, PathTakesBothEdges) {
  const Graph g = Path3(1, 1);
  const EdgeSet mst = KruskalMst(g);
  EXPECT_EQ(mst.size(), 2u);
  EXPECT_EQ(TotalCost(g, mst), 2);
}

TEST(Kruskal, TriangleDropsMaxEdge) {
  const Graph g(3, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}});
  const EdgeSet mst = KruskalMst(g);
  EXPECT_EQ(TotalCost(g, mst), 3);
  EXPECT_FALSE(mst.Contains({0, 2}));
}

TEST(Kruskal, TieBreakIsByEndpointIds) {
  const Graph g(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  const EdgeSet mst = KruskalMst(g);
  EXPECT_TRUE(mst.Contains({0, 1}));
  EXPECT_TRUE(mst.Contains({0, 2}));
  EXPECT_FALSE(mst.Contains({1, 2}));
}

TEST(Kruskal, MatchesBruteForceOnRandomGraphs) {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = reference::RandomConnectedGraph(rng, 8, 25, 1, 9);
    const EdgeSet mst = KruskalMst(g);
    ASSERT_EQ(mst.size(), 7u);
    EXPECT_TRUE(IsTreeOn(All(8), mst));
    EXPECT_EQ(TotalCost(g, mst), *reference::BruteForceMstCost(g))
        << "trial " << trial;
  }
}

TEST(Kruskal, CycleProperty) {
  Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = reference::RandomConnectedGraph(rng, 8, 40, 1, 6);
    const EdgeSet mst = KruskalMst(g);
    for (const Edge& e : g.edges()) {
      if (mst.Contains(e.pair())) continue;
      // Max edge on the tree path e.u -> e.v, by DFS over tree edges.
      std::vector<std::optional<Rational>> best(8);
      std::vector<Vertex> stack = {e.u};
      best[e.u] = Rational(0);
      while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        for (const VertexPair& p : mst) {
          if (p.first != x && p.second != x) continue;
          const Vertex y = p.first == x ? p.second : p.first;
          if (best[y]) continue;
          best[y] = std::max(*best[x], g.CostOf(x, y));
          stack.push_back(y);
        }
      }
      EXPECT_GE(e.cost, *best[e.v]);
    }
  }
}

TEST(Kruskal, RestrictedToSubset) {
  const Graph g(4, {{0, 1, 5}, {1, 2, 1}, {0, 2, 1}, {2, 3, 1}});
  const std::vector<Vertex> sub = {0, 1, 2};
  const EdgeSet mst = KruskalMst(g, std::span<const Vertex>(sub));
  EXPECT_EQ(TotalCost(g, mst), 2);
  EXPECT_TRUE(IsTreeOn(sub, mst));
}

TEST(Kruskal, DisconnectedThrows) {
  const Graph g(3, {{0, 1, 1}});
  try {
    KruskalMst(g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDisconnectedInput);
  }
  const std::vector<Vertex> sub = {0, 2};
  EXPECT_FALSE(TryKruskalMst(g, sub).has_value());
}

TEST(GraphValidation, RejectsBadEdges) {
  const auto rejected = [](std::vector<Edge> edges) {
    try {
      Graph(2, std::move(edges));
    } catch (const Error& e) {
      return e.code() == ErrorCode::kValidation;
    }
    return false;
  };
  EXPECT_TRUE(rejected({{0, 0, 1}}));
  EXPECT_TRUE(rejected({{0, 2, 1}}));
  EXPECT_TRUE(rejected({{0, 1, 1}, {1, 0, 2}}));
  EXPECT_TRUE(rejected({{0, 1, -1}}));
}

TEST(MetricClosure, IdentityOnMetricGraph) {
  const Graph g(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  const Graph c = MetricClosure(g);
  ASSERT_EQ(c.edges().size(), 3u);
  for (const Edge& e : g.edges()) EXPECT_EQ(c.CostOf(e.u, e.v), e.cost);
}

TEST(MetricClosure, PathAddsShortcut) {
  const Graph c = MetricClosure(Path3(1, 1));
  ASSERT_TRUE(c.HasEdge(0, 2));
  EXPECT_EQ(c.CostOf(0, 2), 2);
}

TEST(MetricClosure, MatchesSimplePathEnumeration) {
  Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = static_cast<int>(rng.Uniform(2, 8));
    const Graph g = reference::RandomConnectedGraph(rng, n, 30, 1, 12);
    const Graph c = MetricClosure(g);
    EXPECT_TRUE(c.IsComplete());
    EXPECT_TRUE(CheckTriangleInequality(c).empty());
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        EXPECT_EQ(c.CostOf(u, v), *reference::SimplePathDistance(g, u, v));
      }
    }
  }
}

TEST(TriangleCheck, Equilateral) {
  const Graph g(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  EXPECT_TRUE(CheckTriangleInequality(g).empty());
}

TEST(TriangleCheck, ReportsViolatingTriple) {
  const Graph g(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 5}});
  const auto v = CheckTriangleInequality(g);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0], (Triple{0, 1, 2}));
}

TEST(TriangleCheck, IncompleteGraphIsAnError) {
  try {
    CheckTriangleInequality(Path3(1, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIncompleteGraph);
  }
}

TEST(Components, EmptyEdgeSetGivesSingletons) {
  const Graph g(3, {{0, 1, 1}, {1, 2, 1}});
  const auto cc = ConnectedComponents(g, EdgeSet{});
  ASSERT_EQ(cc.size(), 3u);
  for (const auto& c : cc) EXPECT_EQ(c.size(), 1u);
}

TEST(Components, SpanningTreeGivesOneClass) {
  const Graph g = Path3(1, 1);
  const auto cc = ConnectedComponents(g, KruskalMst(g));
  ASSERT_EQ(cc.size(), 1u);
  EXPECT_EQ(cc[0], (std::vector<Vertex>{0, 1, 2}));
}

TEST(Components, MatchFixedPointRelaxation) {
  Rng rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = static_cast<int>(rng.Uniform(1, 9));
    const Graph g = reference::RandomConnectedGraph(rng, n, 40, 1, 5);
    EdgeSet subset;
    for (const Edge& e : g.edges()) {
      if (rng.Percent(40)) subset.Insert(e.pair());
    }
    const auto labels = reference::FixedPointLabels(n, subset);
    const auto cc = ConnectedComponents(g, subset);
    int seen = 0;
    for (const auto& c : cc) {
      for (Vertex v : c) EXPECT_EQ(labels[v], c.front());
      seen += static_cast<int>(c.size());
    }
    EXPECT_EQ(seen, n);
    for (size_t i = 1; i < cc.size(); ++i) {
      EXPECT_LT(cc[i - 1].front(), cc[i].front());
    }
  }
}

TEST(EdgeSetTest, SortedAndDeduplicated) {
  EdgeSet s;
  s.Insert({2, 1});
  s.Insert({0, 1});
  s.Insert({1, 2});
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.pairs()[0], VertexPair(0, 1));
  EXPECT_EQ(s.pairs()[1], VertexPair(1, 2));
}

}  // namespace
}  // namespace kpcst
