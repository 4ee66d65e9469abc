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

#include "cutlab/planar.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <set>

#include "cutlab/error.h"
#include "cutlab/min_cut.h"
#include "test_util.h"

namespace cutlab {
namespace {

using testing::Rng;

Graph complete_graph(int n) {
  GraphBuilder b;
  b.add_nodes(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  return b.build();
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const CutError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no CutError";
  return ErrorCode::kInvalidArgument;
}

void expect_valid(const PlanarEmbedding& emb) {
  const Graph& g = emb.graph;
  EXPECT_EQ(g.num_nodes() - g.num_edges() + static_cast<int>(emb.faces.size()), 2);
  std::vector<int> count(2 * g.num_edges(), 0);
  for (const auto& f : emb.faces) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      ++count[f[i]];
      // Consecutive darts chain head to tail.
      EXPECT_EQ(emb.dart_head(f[i]), emb.dart_tail(f[(i + 1) % f.size()]));
    }
  }
  for (int c : count) EXPECT_EQ(c, 1);
}

TEST(EmbeddingTest, CompleteGraphs) {
  const PlanarEmbedding k4 = build_embedding(complete_graph(4));
  EXPECT_EQ(k4.faces.size(), 4u);
  expect_valid(k4);
  EXPECT_EQ(code_of([] { build_embedding(complete_graph(5)); }), ErrorCode::kNotPlanar);
}

TEST(EmbeddingTest, BipartiteK33IsNotPlanar) {
  GraphBuilder b;
  b.add_nodes(6);
  for (int u = 0; u < 3; ++u) {
    for (int v = 3; v < 6; ++v) b.add_edge(u, v);
  }
  EXPECT_EQ(code_of([&] { build_embedding(b.build()); }), ErrorCode::kNotPlanar);
}

TEST(EmbeddingTest, GridFacesBothWays) {
  const testing::PlanarSample s = testing::grid_sample(3, 3);
  const PlanarEmbedding a = build_embedding(s.graph);
  const PlanarEmbedding b = embedding_from_coordinates(s.graph, s.x, s.y);
  EXPECT_EQ(a.faces.size(), 5u);
  EXPECT_EQ(b.faces.size(), 5u);
  expect_valid(a);
  expect_valid(b);
  EXPECT_EQ(a.faces[a.outer_face].size(), 8u);
  // The drawn outer face runs counterclockwise: 5 is followed by 2.
  std::vector<NodeId> walk;
  for (int d : b.faces[b.outer_face]) walk.push_back(b.dart_tail(d));
  ASSERT_EQ(walk.size(), 8u);
  const auto it = std::find(walk.begin(), walk.end(), 5);
  EXPECT_EQ(walk[(it - walk.begin() + 1) % 8], 2);
}

TEST(EmbeddingTest, RejectsDirectedAndDisconnected) {
  GraphBuilder d(true);
  d.add_nodes(2);
  d.add_edge(0, 1);
  EXPECT_EQ(code_of([&] { build_embedding(d.build()); }), ErrorCode::kInvalidArgument);
  GraphBuilder u;
  u.add_nodes(3);
  u.add_edge(0, 1);
  EXPECT_EQ(code_of([&] { build_embedding(u.build()); }), ErrorCode::kInvalidArgument);
}

TEST(EmbeddingTest, RandomPlanarSamplesAreValid) {
  Rng rng(5);
  for (int iter = 0; iter < 60; ++iter) {
    const auto s = testing::random_planar(rng, 2 + iter % 3, 3 + iter % 2, 0.2, 0.5, 5);
    expect_valid(build_embedding(s.graph));
    expect_valid(embedding_from_coordinates(s.graph, s.x, s.y));
  }
}

TEST(PerturbTest, TwoUnitEdges) {
  GraphBuilder b;
  b.add_nodes(3);
  b.add_edge(0, 1);
  b.add_edge(1, 2);
  const PerturbedWeights pw = perturb(b.build(), CutKind::kEdge);
  EXPECT_EQ(pw.scale, 4);
  EXPECT_EQ(pw.total(0), Weight(5));
  EXPECT_EQ(pw.total(1), Weight(6));
}

TEST(PerturbTest, SubsetSumsDistinctAndOrdered) {
  Rng rng(3);
  for (int iter = 0; iter < 20; ++iter) {
    const Graph g = testing::random_graph(rng, 6, 0.5, false, 3);
    const PerturbedWeights pw = perturb(g, CutKind::kEdge);
    const int m = g.num_edges();
    std::vector<std::pair<std::int64_t, std::int64_t>> sums;  // base, total
    for (int mask = 0; mask < (1 << m); ++mask) {
      std::int64_t base = 0, total = 0;
      for (int i = 0; i < m; ++i) {
        if (mask >> i & 1) {
          base += pw.base[i].value();
          total += pw.total(i).value();
        }
      }
      sums.emplace_back(base, total);
    }
    std::set<std::int64_t> totals;
    for (auto [b, t] : sums) totals.insert(t);
    EXPECT_EQ(totals.size(), sums.size());
    std::sort(sums.begin(), sums.end());
    for (std::size_t i = 1; i < sums.size(); ++i) {
      if (sums[i - 1].first < sums[i].first) {
        EXPECT_LT(sums[i - 1].second, sums[i].second);
      }
    }
  }
}

TEST(PerturbTest, NodeModeKeepsInfinity) {
  GraphBuilder b;
  b.add_nodes(3);
  b.set_node_weight(1, Weight::inf());
  b.add_edge(0, 1);
  const PerturbedWeights pw = perturb(b.build(), CutKind::kNode);
  EXPECT_TRUE(pw.total(1).is_inf());
  EXPECT_EQ(pw.total(2), Weight(8 + 4));
}

TEST(PerturbTest, BoundExceeded) {
  GraphBuilder b;
  b.add_nodes(64);
  for (int v = 0; v + 1 < 64; ++v) b.add_edge(v, v + 1);
  EXPECT_EQ(code_of([&] { perturb(b.build(), CutKind::kEdge); }),
            ErrorCode::kArithmeticBoundExceeded);
}

TEST(PerturbTest, UniqueAndOptimalOnRandomPlanarGraphs) {
  Rng rng(11);
  for (int iter = 0; iter < 100; ++iter) {
    const auto s = testing::random_planar(rng, 3, 3 + iter % 2, 0.15, 0.5, 4);
    const Graph& g = s.graph;
    const NodeId v = static_cast<NodeId>(rng() % g.num_nodes());
    NodeId t = static_cast<NodeId>(rng() % g.num_nodes());
    if (t == v) t = (v + 1) % g.num_nodes();
    for (CutKind mode : {CutKind::kEdge, CutKind::kNode}) {
      if (mode == CutKind::kNode && g.find_edge(v, t)) continue;
      const PerturbedWeights pw = perturb(g, mode);
      const PrincipalCut pc = perturbed_min_cut(g, pw, v, t);
      EXPECT_TRUE(pc.unique) << "iter " << iter;
      const NodeId src[] = {v};
      const NodeId dst[] = {t};
      const CutSolution base = min_st_cut(g, mode, src, dst);
      EXPECT_EQ(make_cut(g, mode, pc.members, true).weight, base.weight);
    }
  }
}

TEST(PrincipalComponentTest, Examples) {
  GraphBuilder p;
  p.add_nodes(3);
  p.add_edge(0, 1);
  p.add_edge(1, 2);
  const Graph path = p.build();
  const auto pw = perturb(path, CutKind::kEdge);
  // Edge 0 is cheaper after perturbation.
  EXPECT_EQ(principal_cut_component(path, pw, 0, 2), std::vector<NodeId>({0}));
  EXPECT_EQ(principal_cut_component(path, pw, 0, 2),
            principal_cut_component(path, perturb(path, CutKind::kEdge), 0, 2));

  GraphBuilder st;
  st.add_nodes(4);
  for (int leaf = 1; leaf < 4; ++leaf) st.add_edge(0, leaf);
  const Graph star = st.build();
  EXPECT_EQ(principal_cut_component(star, perturb(star, CutKind::kEdge), 1, 0),
            std::vector<NodeId>({1}));
}

TEST(PrincipalComponentTest, HoleFreeExhaustive) {
  Rng rng(13);
  int pairs = 0;
  for (int iter = 0; iter < 40; ++iter) {
    const auto s = iter % 2 ? testing::random_planar(rng, 3, 3, 0.15, 0.5, 4)
                            : testing::random_planar(rng, 2, 5, 0.1, 0.6, 4);
    const Graph& g = s.graph;
    const PerturbedWeights pw = perturb(g, CutKind::kEdge);
    const int n = g.num_nodes();
    for (NodeId t = 0; t < n; ++t) {
      std::vector<std::vector<NodeId>> comp(n);
      for (NodeId v = 0; v < n; ++v) {
        if (v != t) comp[v] = principal_cut_component(g, pw, v, t);
      }
      for (NodeId a = 0; a < n; ++a) {
        for (NodeId b = a + 1; b < n; ++b) {
          if (a == t || b == t) continue;
          ++pairs;
          EXPECT_TRUE(hole_free(g, comp[a], comp[b], t))
              << "iter " << iter << " t " << t << " pair " << a << "," << b;
        }
      }
    }
  }
  EXPECT_GT(pairs, 5000);
}

Graph cycle4(int w01, int w12, int w23, int w30) {
  GraphBuilder b;
  b.add_nodes(4);
  b.add_edge(0, 1, Weight(w01));
  b.add_edge(1, 2, Weight(w12));
  b.add_edge(2, 3, Weight(w23));
  b.add_edge(3, 0, Weight(w30));
  return b.build();
}

TEST(TwoVersusTwoTest, SingleFeasibleCutOnCycle) {
  // Order s1, s2, s1', s2' around the cycle.
  const Graph g = cycle4(1, 1, 1, 1);
  const CutSolution sol = solve_2v2_planar_cpmec(build_embedding(g), 0, 1, 2, 3);
  EXPECT_EQ(sol.weight, 2);
  EXPECT_EQ(sol.members, std::vector<int>({1, 3}));
  const auto brute = testing::brute_cpmc(g, CutKind::kEdge, {0, 1}, {2, 3}, true);
  ASSERT_TRUE(brute);
  EXPECT_EQ(brute->members, sol.members);
}

TEST(TwoVersusTwoTest, InterleavedIsInfeasible) {
  const Graph g = cycle4(1, 1, 1, 1);
  EXPECT_FALSE(testing::brute_cpmc(g, CutKind::kEdge, {0, 2}, {1, 3}, true));
  EXPECT_EQ(code_of([&] { solve_2v2_planar_cpmec(build_embedding(g), 0, 2, 1, 3); }),
            ErrorCode::kInfeasible);
}

TEST(TwoVersusTwoTest, MatchesOraclesOnRandomPlanarGraphs) {
  Rng rng(17);
  int feasible = 0, infeasible = 0;
  for (int iter = 0; iter < 50; ++iter) {
    const auto s = testing::random_planar(rng, 3, 3, 0.15, 0.4, 5);
    const PlanarEmbedding emb = embedding_from_coordinates(s.graph, s.x, s.y);
    // s1, s2 on the boundary ring of the 3x3 grid.
    const std::vector<NodeId> ring = {0, 1, 2, 5, 8, 7, 6, 3};
    std::vector<NodeId> pool = ring;
    std::shuffle(pool.begin(), pool.end(), rng);
    const NodeId s1 = pool[0], s2 = pool[1];
    std::vector<NodeId> rest;
    for (NodeId v = 0; v < 9; ++v) {
      if (v != s1 && v != s2) rest.push_back(v);
    }
    std::shuffle(rest.begin(), rest.end(), rng);
    const NodeId s1p = rest[0], s2p = rest[1];
    const auto brute =
        testing::brute_cpmc(s.graph, CutKind::kEdge, {s1, s2}, {s1p, s2p}, true);
    if (!brute) {
      ++infeasible;
      EXPECT_EQ(code_of([&] { solve_2v2_planar_cpmec(emb, s1, s2, s1p, s2p); }),
                ErrorCode::kInfeasible);
      continue;
    }
    ++feasible;
    const CutSolution sol = solve_2v2_planar_cpmec(emb, s1, s2, s1p, s2p);
    EXPECT_EQ(sol.weight, brute->weight) << "iter " << iter;
    EXPECT_EQ(sol.members, brute->members) << "iter " << iter;
    EXPECT_TRUE(testing::cpmc_cut_ok(s.graph, CutKind::kEdge, sol.members, {s1, s2},
                                     {s1p, s2p}, true));
  }
  EXPECT_GT(feasible, 20);
  EXPECT_GT(infeasible, 0);
}

TEST(TwoVersusTwoTest, BackendIsPluggable) {
  const testing::PlanarSample s = testing::grid_sample(4, 4);
  const PlanarEmbedding emb = embedding_from_coordinates(s.graph, s.x, s.y);
  int calls = 0;
  const CpmcBackend counting = [&](const CpmcInstance& inst) {
    ++calls;
    return solve_cpmc_exact(inst);
  };
  // s1 = 0 and s2 = 10 share no face: face growth kicks in.
  const CutSolution sol = solve_2v2_planar_cpmec(emb, 0, 10, 3, 12, counting);
  EXPECT_GT(calls, 1);
  const auto brute =
      testing::brute_cpmc(s.graph, CutKind::kEdge, {0, 10}, {3, 12}, true);
  ASSERT_TRUE(brute);
  EXPECT_EQ(sol.weight, brute->weight);
}

std::optional<testing::BruteCut> brute_diversion(const Graph& g, NodeId s, NodeId t,
                                                 EdgeId e) {
  std::optional<testing::BruteCut> best;
  const int m = g.num_edges();
  for (int mask = 0; mask < (1 << m); ++mask) {
    if (mask >> e & 1) continue;
    std::vector<int> cut;
    std::int64_t w = 0;
    for (int i = 0; i < m; ++i) {
      if (mask >> i & 1) {
        cut.push_back(i);
        w += g.edge(i).weight.value();
      }
    }
    if (!diversion_holds(g, s, t, e, cut)) continue;
    if (!best || w < best->weight || (w == best->weight && cut < best->members)) {
      best = testing::BruteCut{w, cut};
    }
  }
  return best;
}

// Every surviving s-t path uses e, and at least one survives.
bool path_audit(const Graph& g, NodeId s, NodeId t, EdgeId e, const std::vector<int>& cut) {
  const auto paths = testing::simple_paths(g, s, t);
  int surviving = 0;
  for (const auto& path : paths) {
    const bool cut_hit = std::any_of(path.begin(), path.end(), [&](EdgeId x) {
      return std::binary_search(cut.begin(), cut.end(), x);
    });
    if (cut_hit) continue;
    ++surviving;
    if (std::find(path.begin(), path.end(), e) == path.end()) return false;
  }
  return surviving > 0;
}

TEST(DiversionTest, TwoParallelPaths) {
  GraphBuilder b;
  b.add_nodes(6);
  b.add_edge(0, 1, Weight(5));
  b.add_edge(1, 2, Weight(2));
  b.add_edge(2, 3, Weight(4));
  b.add_edge(0, 4, Weight(1));
  b.add_edge(4, 5, Weight(1));
  b.add_edge(5, 3, Weight(1));
  const Graph g = b.build();
  const CutSolution sol = solve_network_diversion(g, 0, 3, 4, 5);
  EXPECT_EQ(sol.members, std::vector<int>({1}));
  EXPECT_EQ(sol.weight, 2);
  EXPECT_TRUE(path_audit(g, 0, 3, 4, sol.members));
}

TEST(DiversionTest, BridgeNeedsNoCut) {
  GraphBuilder b;
  b.add_nodes(4);
  b.add_edge(0, 1);
  b.add_edge(1, 2);
  b.add_edge(2, 3);
  const CutSolution sol = solve_network_diversion(b.build(), 0, 3, 1, 2);
  EXPECT_TRUE(sol.members.empty());
  EXPECT_EQ(sol.weight, 0);
}

TEST(DiversionTest, EdgeBetweenTerminals) {
  const Graph g = cycle4(3, 1, 2, 7);
  const CutSolution sol = solve_network_diversion(g, 0, 1, 0, 1);
  EXPECT_EQ(sol.weight, 1);
  EXPECT_TRUE(path_audit(g, 0, 1, 0, sol.members));
}

TEST(DiversionTest, MatchesBruteForceAndPathAudit) {
  Rng rng(23);
  int feasible = 0;
  for (int iter = 0; iter < 30; ++iter) {
    const auto s = testing::random_planar(rng, 3, 3, 0.2, 0.3, 5);
    const Graph& g = s.graph;
    const NodeId src = static_cast<NodeId>(rng() % 9);
    NodeId dst = static_cast<NodeId>(rng() % 9);
    if (dst == src) dst = (src + 4) % 9;
    const EdgeId e = static_cast<EdgeId>(rng() % g.num_edges());
    const auto brute = brute_diversion(g, src, dst, e);
    if (!brute) {
      EXPECT_EQ(code_of([&] {
                  solve_network_diversion(g, src, dst, g.edge(e).u, g.edge(e).v);
                }),
                ErrorCode::kInfeasible);
      continue;
    }
    ++feasible;
    const CutSolution sol = solve_network_diversion(g, src, dst, g.edge(e).u, g.edge(e).v);
    EXPECT_EQ(sol.weight, brute->weight) << "iter " << iter;
    EXPECT_TRUE(path_audit(g, src, dst, e, sol.members)) << "iter " << iter;
  }
  EXPECT_GT(feasible, 10);
}

// Brute-force LCSP on a drawing with p on the left column and q on the
// right one: close the path with rays running out sideways from p and q and
// round over the top. x is above when a downward ray from just right of x
// crosses that loop an odd number of times.
bool strictly_above(const testing::PlanarSample& s, const std::vector<EdgeId>& path,
                    NodeId q, NodeId x) {
  const Graph& g = s.graph;
  int crossings = 0;
  const double rx = s.x[x] + 0.1234;
  if (rx > s.x[q] && s.y[q] < s.y[x]) ++crossings;
  for (EdgeId e : path) {
    const NodeId a = g.edge(e).u, b = g.edge(e).v;
    if (a == x || b == x) return false;
    const double lo = std::min(s.x[a], s.x[b]), hi = std::max(s.x[a], s.x[b]);
    if (!(lo < rx && rx < hi)) continue;
    const double y = s.y[a] + (s.y[b] - s.y[a]) * (rx - s.x[a]) / (s.x[b] - s.x[a]);
    if (y < s.y[x]) ++crossings;
  }
  return crossings % 2 == 1;
}

std::optional<std::int64_t> brute_lcsp(const testing::PlanarSample& s, NodeId p, NodeId q,
                                       NodeId above, NodeId below) {
  std::optional<std::int64_t> best;
  for (const auto& path : testing::simple_paths(s.graph, p, q)) {
    bool on_path = false;
    for (EdgeId e : path) {
      for (NodeId x : {s.graph.edge(e).u, s.graph.edge(e).v}) {
        if (x == above || x == below) on_path = true;
      }
    }
    if (on_path || !strictly_above(s, path, q, above) || strictly_above(s, path, q, below)) {
      continue;
    }
    std::int64_t w = 0;
    for (EdgeId e : path) w += s.graph.edge(e).weight.value();
    if (!best || w < *best) best = w;
  }
  return best;
}

TEST(LcspTest, GridMiddleRow) {
  const testing::PlanarSample s = testing::grid_sample(3, 3);
  const PlanarEmbedding emb = embedding_from_coordinates(s.graph, s.x, s.y);
  const LcspPath path = solve_two_node_lcsp(emb, 3, 5, 1, 7);
  EXPECT_EQ(path.nodes, std::vector<NodeId>({3, 4, 5}));
  EXPECT_EQ(path.weight, 2);
  EXPECT_EQ(brute_lcsp(s, 3, 5, 1, 7), 2);
}

TEST(LcspTest, HugsTheBottom) {
  // 4x3 grid; the row through 6-7-8 is expensive but the only one below 4.
  testing::PlanarSample s = testing::grid_sample(4, 3);
  GraphBuilder b;
  b.add_nodes(12);
  for (const Edge& e : s.graph.edges()) {
    const bool row2 = e.u / 3 == 2 && e.v / 3 == 2;
    b.add_edge(e.u, e.v, Weight(row2 ? 5 : 1));
  }
  s.graph = b.build();
  const PlanarEmbedding emb = embedding_from_coordinates(s.graph, s.x, s.y);
  const LcspPath path = solve_two_node_lcsp(emb, 6, 8, 4, 10);
  EXPECT_EQ(path.nodes, std::vector<NodeId>({6, 7, 8}));
  EXPECT_EQ(path.weight, 10);
  EXPECT_EQ(brute_lcsp(s, 6, 8, 4, 10), 10);
}

TEST(LcspTest, CutVertexEndpointIsAmbiguous) {
  // 2 hangs off 1 on the outer face, so 1 has two outer corners.
  GraphBuilder b;
  b.add_nodes(4);
  b.add_edge(0, 1);
  b.add_edge(1, 2);
  b.add_edge(0, 3);
  b.add_edge(1, 3);
  const std::vector<double> x = {0, 1, 2, 0.5}, y = {0, 0, 0, -1};
  const PlanarEmbedding emb = embedding_from_coordinates(b.build(), x, y);
  EXPECT_EQ(code_of([&] { solve_two_node_lcsp(emb, 0, 1, 2, 3); }),
            ErrorCode::kInvalidArgument);
}

TEST(LcspTest, SwappedSidesAreInfeasible) {
  const testing::PlanarSample s = testing::grid_sample(3, 3);
  const PlanarEmbedding emb = embedding_from_coordinates(s.graph, s.x, s.y);
  EXPECT_FALSE(brute_lcsp(s, 3, 5, 7, 1));
  EXPECT_EQ(code_of([&] { solve_two_node_lcsp(emb, 3, 5, 7, 1); }),
            ErrorCode::kInfeasible);
}

TEST(LcspTest, MatchesBruteForceOnRandomDrawings) {
  Rng rng(29);
  int feasible = 0;
  for (int iter = 0; iter < 150; ++iter) {
    const int rows = 3 + iter % 2, cols = 3;
    const auto s = testing::random_planar(rng, rows, cols, 0.1, 0.4, 6);
    const PlanarEmbedding emb = embedding_from_coordinates(s.graph, s.x, s.y);
    const NodeId p = static_cast<NodeId>(rng() % rows) * cols;
    const NodeId q = static_cast<NodeId>(rng() % rows) * cols + cols - 1;
    NodeId above, below;
    do {
      above = static_cast<NodeId>(rng() % (rows * cols));
      below = static_cast<NodeId>(rng() % (rows * cols));
    } while (above == below || above == p || above == q || below == p || below == q ||
             above / cols > below / cols);
    int corners = 0;
    for (int d : emb.faces[emb.outer_face]) {
      corners += emb.dart_tail(d) == p || emb.dart_tail(d) == q;
    }
    if (corners > 2) {
      EXPECT_EQ(code_of([&] { solve_two_node_lcsp(emb, p, q, above, below); }),
                ErrorCode::kInvalidArgument);
      continue;
    }
    const auto brute = brute_lcsp(s, p, q, above, below);
    if (!brute) {
      EXPECT_EQ(code_of([&] { solve_two_node_lcsp(emb, p, q, above, below); }),
                ErrorCode::kInfeasible)
          << "iter " << iter;
      continue;
    }
    ++feasible;
    const LcspPath path = solve_two_node_lcsp(emb, p, q, above, below);
    EXPECT_EQ(path.weight, *brute) << "iter " << iter;
    EXPECT_TRUE(strictly_above(s, path.edges, q, above));
    EXPECT_FALSE(strictly_above(s, path.edges, q, below));
  }
  EXPECT_GT(feasible, 30);
}

}  // namespace
}  // namespace cutlab
