// Copyright 2026 The Cutlab Authors.
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

#include "cutlab/min_cut.h"

#include <gtest/gtest.h>

#include "cutlab/error.h"
#include "test_util.h"

namespace cutlab {
namespace {

using testing::Rng;

std::vector<NodeId> ids(std::initializer_list<NodeId> l) { return l; }

TEST(MinStEdgeCutTest, SingleEdge) {
  GraphBuilder b;
  b.add_nodes(2);
  b.add_edge(0, 1, Weight(5));
  const CutSolution cut = min_st_edge_cut(b.build(), ids({0}), ids({1}));
  EXPECT_EQ(cut.weight, 5);
  EXPECT_EQ(cut.members, std::vector<int>({0}));
  EXPECT_EQ(cut.components.size(), 2u);
}

TEST(MinStEdgeCutTest, K4UnitWeights) {
  GraphBuilder b;
  b.add_nodes(4);
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) b.add_edge(u, v);
  }
  const Graph g = b.build();
  const CutSolution cut = min_st_edge_cut(g, ids({0}), ids({3}));
  EXPECT_EQ(cut.weight, 3);
  EXPECT_EQ(testing::brute_min_edge_cut(g, {0}, {3})->weight, 3);
}

TEST(MinStEdgeCutTest, TwoDisjointPaths) {
  // s=0, path s-a-t weights (2,3), path s-b-t weights (4,1).
  GraphBuilder b;
  b.add_nodes(4);
  b.add_edge(0, 1, Weight(2));
  b.add_edge(1, 3, Weight(3));
  b.add_edge(0, 2, Weight(4));
  b.add_edge(2, 3, Weight(1));
  const CutSolution cut = min_st_edge_cut(b.build(), ids({0}), ids({3}));
  EXPECT_EQ(cut.weight, 3);
  EXPECT_EQ(cut.members, std::vector<int>({0, 3}));
}

TEST(MinStEdgeCutTest, InfEdgeNeverCut) {
  GraphBuilder b;
  b.add_nodes(3);
  b.add_edge(0, 1, Weight::inf());
  b.add_edge(1, 2, Weight(7));
  const CutSolution cut = min_st_edge_cut(b.build(), ids({0}), ids({2}));
  EXPECT_EQ(cut.members, std::vector<int>({1}));

  GraphBuilder c;
  c.add_nodes(2);
  c.add_edge(0, 1, Weight::inf());
  try {
    min_st_edge_cut(c.build(), ids({0}), ids({1}));
    FAIL() << "expected NoFiniteCut";
  } catch (const CutError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoFiniteCut);
  }
}

TEST(MinStEdgeCutTest, OverlappingTerminalsRejected) {
  const Graph g = testing::grid_graph(2, 2);
  try {
    min_st_edge_cut(g, ids({0, 1}), ids({1}));
    FAIL();
  } catch (const CutError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(MinStEdgeCutTest, TieBreakIsLexicographicallySmallest) {
  // A 4-cycle 0-1-2-3-0 with unit weights between 0 and 2 has four minimum
  // cuts of weight 2; edges are 0:(0,1) 1:(1,2) 2:(2,3) 3:(3,0).
  GraphBuilder b;
  b.add_nodes(4);
  b.add_edge(0, 1);
  b.add_edge(1, 2);
  b.add_edge(2, 3);
  b.add_edge(3, 0);
  const Graph g = b.build();
  const CutSolution cut = min_st_edge_cut(g, ids({0}), ids({2}));
  EXPECT_EQ(cut.members, std::vector<int>({0, 2}));
  EXPECT_EQ(cut.members, testing::brute_min_edge_cut(g, {0}, {2})->members);
}

TEST(MinStEdgeCutTest, MatchesBruteForceIncludingTies) {
  Rng rng(11);
  for (int iter = 0; iter < 150; ++iter) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const bool directed = iter % 3 == 0;
    const Graph g = testing::random_graph(rng, n, 0.5, directed, 3);
    if (g.num_edges() > 16) continue;
    const auto brute = testing::brute_min_edge_cut(g, {0}, {n - 1});
    const CutSolution cut = min_st_edge_cut(g, ids({0}), ids({n - 1}));
    ASSERT_TRUE(brute.has_value());
    EXPECT_EQ(cut.weight, brute->weight) << "iter " << iter;
    EXPECT_EQ(cut.members, brute->members) << "iter " << iter;
  }
}

TEST(MinStNodeCutTest, PathAndParallel) {
  GraphBuilder p;
  p.add_node();
  p.add_node(Weight(7));
  p.add_node();
  p.add_edge(0, 1);
  p.add_edge(1, 2);
  const CutSolution a = min_st_node_cut(p.build(), ids({0}), ids({2}));
  EXPECT_EQ(a.weight, 7);
  EXPECT_EQ(a.members, std::vector<int>({1}));

  GraphBuilder q;
  q.add_node();
  q.add_node(Weight(2));
  q.add_node(Weight(5));
  q.add_node();
  q.add_edge(0, 1);
  q.add_edge(0, 2);
  q.add_edge(1, 3);
  q.add_edge(2, 3);
  const CutSolution c = min_st_node_cut(q.build(), ids({0}), ids({3}));
  EXPECT_EQ(c.weight, 7);
  EXPECT_EQ(c.members, std::vector<int>({1, 2}));
}

TEST(MinStNodeCutTest, GridCornerToCorner) {
  const Graph g = testing::grid_graph(3, 3);
  const CutSolution c = min_st_node_cut(g, ids({0}), ids({8}));
  EXPECT_EQ(c.weight, 2);
  EXPECT_EQ(testing::brute_min_node_cut(g, {0}, {8})->weight, 2);
  EXPECT_TRUE(testing::separates(g, CutKind::kNode, c.members, {0}, {8}));
}

TEST(MinStNodeCutTest, AdjacentTerminalsHaveNoCut) {
  const Graph g = testing::grid_graph(1, 2);
  try {
    min_st_node_cut(g, ids({0}), ids({1}));
    FAIL();
  } catch (const CutError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoFiniteCut);
  }
}

TEST(MinStNodeCutTest, MinimalAndMatchesBruteForce) {
  Rng rng(5);
  int checked = 0;
  for (int iter = 0; iter < 200; ++iter) {
    const int n = 4 + static_cast<int>(rng() % 9);  // <= 12, <= 10 candidates
    const Graph g = testing::random_graph(rng, n, 0.35, iter % 4 == 0, 4);
    if (g.find_edge(0, n - 1)) continue;
    const auto brute = testing::brute_min_node_cut(g, {0}, {n - 1});
    const CutSolution c = min_st_node_cut(g, ids({0}), ids({n - 1}));
    ASSERT_TRUE(brute.has_value());
    EXPECT_EQ(c.weight, brute->weight);
    EXPECT_EQ(c.members, brute->members);
    EXPECT_TRUE(testing::separates(g, CutKind::kNode, c.members, {0}, {n - 1}));
    for (std::size_t drop = 0; drop < c.members.size(); ++drop) {
      std::vector<int> sub = c.members;
      sub.erase(sub.begin() + static_cast<long>(drop));
      EXPECT_FALSE(testing::separates(g, CutKind::kNode, sub, {0}, {n - 1}));
    }
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(MaxFlowTest, DualityOnRandomGraphs) {
  Rng rng(3);
  for (int iter = 0; iter < 100; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 49);
    const Graph g = testing::random_graph(rng, n, 4.0 / n, iter % 2, 20);
    const NodeId s[] = {0};
    const NodeId t[] = {n - 1};
    const std::int64_t flow =
        max_flow_value(cut_problem_for(g, CutKind::kEdge, s, t));
    const CutSolution cut = min_st_edge_cut(g, s, t);
    EXPECT_EQ(flow, cut.weight);
    EXPECT_TRUE(testing::separates(g, CutKind::kEdge, cut.members, {0}, {n - 1}));
  }
}

TEST(ShrinkTest, PathNoParallel) {
  GraphBuilder b;
  b.add_nodes(3);
  b.add_edge(0, 1, Weight(4));
  b.add_edge(1, 2, Weight(9));
  const ShrinkResult r = shrink_components(b.build(), {{0, 1}});
  EXPECT_EQ(r.graph.num_nodes(), 2);
  ASSERT_EQ(r.graph.num_edges(), 1);
  EXPECT_EQ(r.graph.edge(0).weight, Weight(9));
  EXPECT_EQ(r.node_map[0], r.node_map[1]);
}

TEST(ShrinkTest, ParallelEdgesGetIntermediateNode) {
  // Triangle a,b,c plus a-d and b-d.
  GraphBuilder b;
  b.add_nodes(4);
  b.add_edge(0, 1);
  b.add_edge(1, 2);
  b.add_edge(0, 2);
  b.add_edge(0, 3, Weight(2));
  b.add_edge(1, 3, Weight(5));
  const ShrinkResult r = shrink_components(b.build(), {{0, 1, 2}});
  EXPECT_EQ(r.graph.num_nodes(), 3);  // A, d, m
  EXPECT_EQ(r.graph.num_edges(), 3);
  const NodeId a = r.component_node[0];
  const NodeId d = r.node_map[3];
  ASSERT_TRUE(r.graph.find_edge(a, d).has_value());
  EXPECT_EQ(r.graph.edge(*r.graph.find_edge(a, d)).weight, Weight(2));
  const NodeId m = 2;
  EXPECT_TRUE(r.graph.node_weight(m).is_inf());
  EXPECT_EQ(r.graph.edge(*r.graph.find_edge(a, m)).weight, Weight(5));
  EXPECT_EQ(r.graph.edge(*r.graph.find_edge(m, d)).weight, Weight(5));
}

TEST(ShrinkTest, DisconnectedComponentRejected) {
  const Graph g = testing::grid_graph(1, 3);
  try {
    shrink_components(g, {{0, 2}});
    FAIL();
  } catch (const CutError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDisconnectedComponent);
  }
}

TEST(GraphBuilderTest, RejectsBadInput) {
  GraphBuilder b;
  b.add_nodes(2);
  EXPECT_THROW(b.add_edge(0, 0), CutError);
  b.add_edge(0, 1);
  EXPECT_THROW(b.add_edge(1, 0), CutError);
  EXPECT_THROW(b.add_edge(0, 1, Weight(0)), CutError);
  GraphBuilder big;
  big.add_node(Weight(kMaxWeightTotal));
  big.add_node(Weight(1));
  EXPECT_THROW(big.build(), CutError);
}

}  // namespace
}  // namespace cutlab
