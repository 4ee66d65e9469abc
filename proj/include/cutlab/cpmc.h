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

#ifndef CUTLAB_CPMC_H_
#define CUTLAB_CPMC_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cutlab/graph.h"

namespace cutlab {

// Connectivity preserving minimum cut: separate `source` (and its partners)
// from every destination while `source` stays connected to every partner.
//
// Directed graphs: separation means no destination has a path to the source
// or a partner; preservation means each partner has a path to or from the
// source.
struct CpmcInstance {
  Graph graph;
  NodeId source = 0;
  std::vector<NodeId> partners;
  std::vector<NodeId> destinations;
  CutKind mode = CutKind::kEdge;
  std::optional<std::int64_t> budget;
  // Two-sided variant: destinations must also stay mutually connected.
  // Undirected edge mode only.
  bool keep_destinations_connected = false;

  friend bool operator==(const CpmcInstance&, const CpmcInstance&) = default;
};

// Throws kInvalidArgument on overlapping or unknown terminals.
void validate(const CpmcInstance& inst);

// Structural feasibility of a cut for `inst` (budget ignored).
bool cut_is_feasible(const CpmcInstance& inst, std::span<const int> members);

// True iff some finite cut meets both the separation and the preservation
// constraints. Polynomial for edge mode and undirected node mode; the
// two-sided and directed node variants fall back to the exact search.
bool cpmc_feasible(const CpmcInstance& inst);

enum class PartnerVerdict { kGuaranteedPreserving, kThreshold, kOuter };

struct PartnerClassification {
  std::int64_t ce_s1t = 0;
  std::int64_t ce_s2t = 0;
  std::int64_t ce_joint = 0;
  std::int64_t cep = 0;
  PartnerVerdict verdict = PartnerVerdict::kOuter;
};

// Compares the single-terminal cuts, the joint cut and the connectivity
// preserving cut of an undirected graph. Throws kNoFiniteCut when no
// preserving cut exists.
PartnerClassification classify_partner(const Graph& g, NodeId s1, NodeId s2,
                                       NodeId t);

struct ExactOptions {
  // Branch-and-bound nodes explored before giving up with kInstanceTooLarge.
  std::int64_t node_limit = std::int64_t{1} << 20;
};

// Exact minimum feasible cut by branch and bound over terminal-side
// assignments, bounded by max-flow relaxations. Ties resolve to the
// lexicographically smallest member list. When no feasible cut exists the
// result has feasible == false and no members; when the optimum exceeds the
// budget the optimal cut is returned with feasible == false.
CutSolution solve_cpmc_exact(const CpmcInstance& inst,
                             const ExactOptions& options = {});

}  // namespace cutlab

#endif  // CUTLAB_CPMC_H_
