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

#ifndef CUTLAB_TMC_H_
#define CUTLAB_TMC_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cutlab/bisection.h"
#include "cutlab/graph.h"
#include "cutlab/lp.h"

namespace cutlab {

// Cut so that the client can no longer reach at least `threshold` services.
struct TmcInstance {
  Graph graph;
  std::vector<NodeId> services;
  NodeId client = 0;
  int threshold = 1;
  CutKind mode = CutKind::kEdge;
  std::optional<std::int64_t> budget;

  friend bool operator==(const TmcInstance&, const TmcInstance&) = default;
};

void validate(const TmcInstance& inst);

// Services the client cannot reach once `members` are removed.
int disconnected_services(const TmcInstance& inst, std::span<const int> members);

// Minimum cut between the client and `chosen` services; services are never
// cut in node mode.
CutSolution tmc_group_cut(const TmcInstance& inst, std::span<const NodeId> chosen);

// Minimum over all threshold-sized service subsets. Throws
// kInstanceTooLarge beyond 10^6 subsets.
CutSolution solve_tmc_exact(const TmcInstance& inst);

// The LP of the node-cut rounding: one X per cut candidate, one Y per node.
struct TmncLp {
  LpModel model;
  std::vector<int> x_var;  // per node, -1 for terminals
  std::vector<int> y_var;  // per node
};

TmncLp build_tmnc_lp(const TmcInstance& inst);

// Rounding step of the LP algorithm: indices of the services to cut off,
// given LP values y and single-service cut values c (INT64_MAX when none).
std::vector<int> tmnc_rounding(std::span<const double> y, std::span<const std::int64_t> c,
                               int threshold, int num_nodes);

struct TmncResult {
  CutSolution cut;
  bool used_lp = false;
  double lp_value = 0;          // meaningful when used_lp
  std::vector<double> y_services;
  std::vector<NodeId> chosen;   // services the final cut separates by design
};

// LP rounding for undirected node mode. Throws kNoFiniteCut,
// kLpInfeasible.
TmncResult solve_tmnc_lp_detailed(const TmcInstance& inst);
CutSolution solve_tmnc_lp(const TmcInstance& inst);

struct GadgetScales {
  std::int64_t size = 0;  // clique size unit
  std::int64_t cost = 0;  // gadget edge cost
};

// Paper scales: both n^2.
GadgetScales paper_scales(const TmcInstance& inst);
// Smallest scales for which every gadget-free bisection in the scanned range
// is a feasible threshold cut and gadget edges outweigh the base graph.
GadgetScales minimal_scales(const TmcInstance& inst);

// Inclusive j range of the balancing clique, clamped at zero.
std::pair<std::int64_t, std::int64_t> balance_range(const TmcInstance& inst,
                                                     const GadgetScales& scales);

enum class NodeOrigin { kOriginal, kServiceClique, kClientClique, kPadding };

struct BisectionGadget {
  Graph graph;
  int service_index = 0;  // 0-based; this service carries the big clique
  std::int64_t balance = 0;
  GadgetScales scales;
  std::vector<NodeOrigin> origin;
  std::vector<int> owner;  // base node, service index or -1
  int base_edges = 0;      // edges [0, base_edges) copy the base graph
};

// Throws kScaleTooSmall, kInvalidArgument.
BisectionGadget build_bisection_gadget(const TmcInstance& inst, int service_index,
                                       std::int64_t balance, const GadgetScales& scales);

struct TmecScanResult {
  CutSolution cut;
  int service_index = -1;
  std::int64_t balance = -1;
  int bisections = 0;
  int rejected = 0;  // gadget edge cut or below threshold
};

// Scans every (service, balance) pair. Throws kInfeasible when no bisection
// maps back to a feasible cut.
TmecScanResult solve_tmec_via_bisection_detailed(const TmcInstance& inst,
                                                 const BisectionSolver& backend,
                                                 const GadgetScales& scales);
CutSolution solve_tmec_via_bisection(const TmcInstance& inst, const BisectionSolver& backend,
                                     const GadgetScales& scales);

}  // namespace cutlab

#endif  // CUTLAB_TMC_H_
