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

#include "cutlab/tmc.h"

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <limits>

#include "cutlab/error.h"
#include "cutlab/min_cut.h"
#include "test_util.h"

namespace cutlab {
namespace {

using testing::Rng;

// A=0, services 1..4 each behind an intermediate of weight 1..4.
TmcInstance star_instance() {
  GraphBuilder b;
  b.add_nodes(9);
  for (int i = 1; i <= 4; ++i) {
    b.set_node_weight(4 + i, Weight(i));
    b.add_edge(0, 4 + i);
    b.add_edge(4 + i, i);
  }
  return TmcInstance{b.build(), {1, 2, 3, 4}, 0, 2, CutKind::kNode, std::nullopt};
}

// Subset enumeration over cut candidates (services and client excluded in
// node mode).
std::optional<testing::BruteCut> brute_tmc(const TmcInstance& inst) {
  const Graph& g = inst.graph;
  std::vector<int> cand;
  if (inst.mode == CutKind::kEdge) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) cand.push_back(e);
  } else {
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      if (v == inst.client ||
          std::find(inst.services.begin(), inst.services.end(), v) != inst.services.end()) {
        continue;
      }
      cand.push_back(v);
    }
  }
  std::optional<testing::BruteCut> best;
  for (int mask = 0; mask < (1 << cand.size()); ++mask) {
    std::vector<int> cut;
    std::int64_t w = 0;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (mask >> i & 1) {
        cut.push_back(cand[i]);
        w += member_weight(g, inst.mode, cand[i]).value();
      }
    }
    if (disconnected_services(inst, cut) < inst.threshold) continue;
    if (!best || w < best->weight || (w == best->weight && cut < best->members)) {
      best = testing::BruteCut{w, cut};
    }
  }
  return best;
}

TmcInstance random_instance(Rng& rng, int n, int k, int l, CutKind mode, double p,
                            bool connected = true) {
  TmcInstance inst;
  inst.graph = connected ? testing::random_connected_graph(rng, n, p, 5)
                         : testing::random_graph(rng, n, p, false, 5);
  inst.client = 0;
  for (int i = 1; i <= k; ++i) inst.services.push_back(n - i);
  inst.threshold = l;
  inst.mode = mode;
  if (mode == CutKind::kNode) {
    // Node cuts cannot split a service from an adjacent client.
    GraphBuilder b;
    for (NodeId v = 0; v < n; ++v) b.add_node(inst.graph.node_weight(v));
    for (const Edge& e : inst.graph.edges()) {
      const bool touches_client = e.u == inst.client || e.v == inst.client;
      const bool touches_service = e.u >= n - k || e.v >= n - k;
      if (!(touches_client && touches_service)) b.add_edge(e.u, e.v, e.weight);
    }
    inst.graph = b.build();
  }
  return inst;
}

TEST(TmcExactTest, Star) {
  const TmcInstance inst = star_instance();
  const CutSolution sol = solve_tmc_exact(inst);
  EXPECT_EQ(sol.weight, 3);
  EXPECT_EQ(sol.members, std::vector<int>({5, 6}));
  EXPECT_EQ(disconnected_services(inst, sol.members), 2);
}

TEST(TmcExactTest, ThresholdExtremes) {
  Rng rng(41);
  for (int iter = 0; iter < 40; ++iter) {
    TmcInstance inst = random_instance(rng, 9, 3, 3, CutKind::kEdge, 0.35);
    const NodeId a[] = {inst.client};
    EXPECT_EQ(solve_tmc_exact(inst).weight, min_st_edge_cut(inst.graph, a, inst.services).weight);
    inst.threshold = 1;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (NodeId s : inst.services) {
      const NodeId one[] = {s};
      best = std::min(best, min_st_edge_cut(inst.graph, a, one).weight);
    }
    EXPECT_EQ(solve_tmc_exact(inst).weight, best);
  }
}

TEST(TmcExactTest, MatchesBruteForce) {
  Rng rng(43);
  for (int iter = 0; iter < 150; ++iter) {
    const CutKind mode = iter % 2 ? CutKind::kNode : CutKind::kEdge;
    const int n = 5 + static_cast<int>(rng() % 5);
    const int k = 2 + static_cast<int>(rng() % 3);
    const int l = 1 + static_cast<int>(rng() % k);
    TmcInstance inst = random_instance(rng, n, k, l, mode, 0.35, false);
    if (mode == CutKind::kEdge && inst.graph.num_edges() > 16) continue;
    const auto brute = brute_tmc(inst);
    std::optional<CutSolution> sol;
    try {
      sol = solve_tmc_exact(inst);
    } catch (const CutError& e) {
      EXPECT_EQ(e.code(), ErrorCode::kNoFiniteCut);
    }
    ASSERT_EQ(sol.has_value(), brute.has_value()) << "iter " << iter;
    if (!brute) continue;
    EXPECT_EQ(sol->weight, brute->weight) << "iter " << iter;
    EXPECT_GE(disconnected_services(inst, sol->members), l);
  }
}

TEST(TmcExactTest, Budget) {
  TmcInstance inst = star_instance();
  inst.budget = 3;
  EXPECT_TRUE(solve_tmc_exact(inst).feasible);
  inst.budget = 2;
  EXPECT_FALSE(solve_tmc_exact(inst).feasible);
}

TEST(TmcExactTest, RejectsBadInstances) {
  TmcInstance inst = star_instance();
  inst.threshold = 5;
  EXPECT_THROW(validate(inst), CutError);
  inst.threshold = 2;
  inst.services.push_back(0);
  EXPECT_THROW(validate(inst), CutError);
}

TEST(TmncLpTest, StarEqualsOptimum) {
  const TmcInstance inst = star_instance();
  EXPECT_EQ(solve_tmnc_lp(inst).weight, 3);
  // Same instance with l^2 >= n goes through the LP.
  TmcInstance big = inst;
  big.threshold = 3;
  const TmncResult res = solve_tmnc_lp_detailed(big);
  EXPECT_TRUE(res.used_lp);
  EXPECT_EQ(res.cut.weight, solve_tmc_exact(big).weight);
  EXPECT_LE(res.lp_value, 6 + 1e-7);
}

TEST(TmncLpTest, TrivialBranchIsSortedPrefix) {
  Rng rng(47);
  for (int iter = 0; iter < 40; ++iter) {
    TmcInstance inst = random_instance(rng, 20, 5, 2, CutKind::kNode, 0.2);
    std::vector<std::pair<std::int64_t, int>> single;
    for (int i = 0; i < 5; ++i) {
      const NodeId one[] = {inst.services[i]};
      try {
        single.emplace_back(tmc_group_cut(inst, one).weight, i);
      } catch (const CutError&) {
        single.emplace_back(std::numeric_limits<std::int64_t>::max(), i);
      }
    }
    std::sort(single.begin(), single.end());
    if (single[1].first == std::numeric_limits<std::int64_t>::max()) continue;
    const NodeId pair[] = {inst.services[single[0].second], inst.services[single[1].second]};
    const TmncResult res = solve_tmnc_lp_detailed(inst);
    EXPECT_FALSE(res.used_lp);
    EXPECT_EQ(res.cut.weight, tmc_group_cut(inst, pair).weight);
    EXPECT_LE(res.cut.weight, std::sqrt(20.0) * solve_tmc_exact(inst).weight + 1e-9);
  }
}

TEST(TmncRoundingTest, TiesAtCutoff) {
  // n = 16: cutoff 0.25. Values exactly at the cutoff count as high.
  const std::vector<double> y = {0.25, 0.25, 0.25, 0.25, 0.25, 1.0};
  const std::vector<std::int64_t> c = {5, 4, 3, 2, 1, 9};
  EXPECT_EQ(tmnc_rounding(y, c, 4, 16), std::vector<int>({5, 0, 1, 2}));
  // Just under the cutoff: position 2 is the first low one, so one high
  // service plus the three cheapest of the rest.
  const std::vector<double> low = {0.2499, 0.2499, 0.2499, 0.2499, 0.2499, 1.0};
  EXPECT_EQ(tmnc_rounding(low, c, 4, 16), std::vector<int>({5, 4, 3, 2}));
}

TEST(TmncRoundingTest, ThresholdEqualsServiceCount) {
  // k = l and the last service is low: augmenting from later positions only
  // would come up short.
  const std::vector<double> y = {1.0, 1.0, 0.0};
  const std::vector<std::int64_t> c = {1, 1, 1};
  EXPECT_EQ(tmnc_rounding(y, c, 3, 9), std::vector<int>({0, 1, 2}));
}

TEST(TmncLpTest, RandomInstancesFeasibleAndBounded) {
  Rng rng(53);
  int lp_runs = 0;
  for (int iter = 0; iter < 160; ++iter) {
    int n, k, l;
    if (iter % 2) {
      // Small enough that l^2 >= n sends the instance through the LP.
      k = 4 + static_cast<int>(rng() % 3);
      l = 3 + static_cast<int>(rng() % 2);
      n = std::max(k + 2, 6 + static_cast<int>(rng() % (l * l - 5)));
    } else {
      n = 6 + static_cast<int>(rng() % 25);
      k = std::min(n - 2, 1 + static_cast<int>(rng() % 6));
      l = 1 + static_cast<int>(rng() % std::min(k, 4));
    }
    TmcInstance inst = random_instance(rng, n, k, l, CutKind::kNode, 0.25);
    std::optional<CutSolution> opt;
    try {
      opt = solve_tmc_exact(inst);
    } catch (const CutError& e) {
      ASSERT_EQ(e.code(), ErrorCode::kNoFiniteCut);
      EXPECT_THROW(solve_tmnc_lp(inst), CutError);
      continue;
    }
    const TmncResult res = solve_tmnc_lp_detailed(inst);
    EXPECT_GE(disconnected_services(inst, res.cut.members), l) << "iter " << iter;
    EXPECT_LE(res.cut.weight, 2 * std::sqrt(static_cast<double>(n)) * opt->weight + 1e-9);
    if (res.used_lp) {
      ++lp_runs;
      EXPECT_LE(res.lp_value, opt->weight + 1e-7) << "iter " << iter;
    }
  }
  EXPECT_GT(lp_runs, 10);
}

TEST(GadgetTest, PaperScaleSizes) {
  Rng rng(59);
  TmcInstance inst = random_instance(rng, 4, 3, 2, CutKind::kEdge, 0.9);
  // Unit weights keep the paper cost above the base total.
  GraphBuilder b;
  b.add_nodes(4);
  for (const Edge& e : inst.graph.edges()) b.add_edge(e.u, e.v);
  inst.graph = b.build();
  const GadgetScales paper = paper_scales(inst);
  EXPECT_EQ(paper.size, 16);
  const auto [lo, hi] = balance_range(inst, paper);
  EXPECT_EQ(lo, 2 * 16 - 4 + 2);
  EXPECT_EQ(hi, 2 * 2 * 16 + 4 - 2);
  for (std::int64_t j : {lo, hi}) {
    const BisectionGadget gad = build_bisection_gadget(inst, 0, j, paper);
    std::vector<int> clique_size(3, 0);
    int client_clique = 0;
    for (std::size_t v = 0; v < gad.origin.size(); ++v) {
      if (gad.origin[v] == NodeOrigin::kServiceClique) ++clique_size[gad.owner[v]];
      if (gad.origin[v] == NodeOrigin::kClientClique) ++client_clique;
    }
    EXPECT_EQ(clique_size, std::vector<int>({32, 16, 16}));
    EXPECT_EQ(client_clique, j);
    const std::int64_t core = 4 + 16 + 16 + 32 + j;
    EXPECT_EQ(gad.graph.num_nodes(), core + core % 2);
  }
}

TEST(GadgetTest, ScaleTooSmall) {
  const TmcInstance star = star_instance();
  TmcInstance inst = star;
  inst.mode = CutKind::kEdge;
  try {
    build_bisection_gadget(inst, 0, 3, {2, 8});
    FAIL();
  } catch (const CutError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kScaleTooSmall);
  }
}

TEST(GadgetTest, MappedCutWeighsTheBisection) {
  Rng rng(61);
  for (int iter = 0; iter < 10; ++iter) {
    const TmcInstance inst = random_instance(rng, 5, 3, 2, CutKind::kEdge, 0.5);
    const GadgetScales scales = minimal_scales(inst);
    const auto [lo, hi] = balance_range(inst, scales);
    const BisectionGadget gad = build_bisection_gadget(inst, 1, (lo + hi) / 2, scales);
    const Bisection bis = min_bisection_exact(gad.graph);
    std::int64_t base = 0;
    bool gadget = false;
    for (EdgeId e = 0; e < gad.graph.num_edges(); ++e) {
      const Edge& ed = gad.graph.edge(e);
      if (bis.side[ed.u] == bis.side[ed.v]) continue;
      if (e < gad.base_edges) {
        base += ed.weight.value();
      } else {
        gadget = true;
      }
    }
    if (!gadget) EXPECT_EQ(base, bis.weight);
  }
}

TEST(TmecBisectionTest, ExactBackendEqualsOracle) {
  Rng rng(67);
  const BisectionSolver exact = [](const Graph& g) { return min_bisection_exact(g); };
  const BisectionSolver local = [](const Graph& g) { return min_bisection_local(g); };
  for (int iter = 0; iter < 8; ++iter) {
    const int n = 4 + iter % 2;
    const TmcInstance inst = random_instance(rng, n, 3, 2, CutKind::kEdge, 0.6);
    const GadgetScales scales = minimal_scales(inst);
    const CutSolution opt = solve_tmc_exact(inst);
    const TmecScanResult res = solve_tmec_via_bisection_detailed(inst, exact, scales);
    EXPECT_EQ(res.cut.weight, opt.weight) << "iter " << iter;
    EXPECT_GE(disconnected_services(inst, res.cut.members), 2);
    const CutSolution ls = solve_tmec_via_bisection(inst, local, scales);
    EXPECT_GE(ls.weight, opt.weight);
    EXPECT_GE(disconnected_services(inst, ls.members), 2);
  }
}

TEST(TmecBisectionTest, FullSeparationDegenerate) {
  Rng rng(71);
  const BisectionSolver exact = [](const Graph& g) { return min_bisection_exact(g); };
  for (int iter = 0; iter < 4; ++iter) {
    const TmcInstance inst = random_instance(rng, 4, 3, 3, CutKind::kEdge, 0.7);
    const NodeId a[] = {inst.client};
    EXPECT_EQ(solve_tmec_via_bisection(inst, exact, minimal_scales(inst)).weight,
              min_st_edge_cut(inst.graph, a, inst.services).weight);
  }
}

}  // namespace
}  // namespace cutlab
