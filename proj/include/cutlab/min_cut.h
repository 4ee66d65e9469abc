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

#ifndef CUTLAB_MIN_CUT_H_
#define CUTLAB_MIN_CUT_H_

#include <span>
#include <vector>

#include "cutlab/cut_engine.h"
#include "cutlab/graph.h"

namespace cutlab {

// Flow network whose minimum cuts are the `kind` cuts of `g` separating
// `sources` from `sinks` (for directed graphs: killing every source->sink
// path). Node mode splits v into v (in half) and num_nodes + v (out half);
// sources and sinks are never cut candidates. `capacity` optionally replaces
// the per-element weights (indexed by node id or edge id); `removal` drops
// elements from the network entirely.
CutProblem cut_problem_for(const Graph& g, CutKind kind,
                           std::span<const NodeId> sources,
                           std::span<const NodeId> sinks,
                           std::span<const Weight> capacity = {},
                           const Removal& removal = {});

// Minimum-weight edge set separating every source from every sink. Ties go to
// the lexicographically smallest sorted edge-id list.
CutSolution min_st_edge_cut(const Graph& g, std::span<const NodeId> sources,
                            std::span<const NodeId> sinks);

// Minimum-weight set of non-terminal nodes separating sources from sinks.
// Throws kNoFiniteCut when a source is adjacent to a sink.
CutSolution min_st_node_cut(const Graph& g, std::span<const NodeId> sources,
                            std::span<const NodeId> sinks);

CutSolution min_st_cut(const Graph& g, CutKind kind,
                       std::span<const NodeId> sources,
                       std::span<const NodeId> sinks);

struct ShrinkResult {
  Graph graph;
  std::vector<NodeId> node_map;        // old node -> new node
  std::vector<NodeId> component_node;  // component index -> new node
  std::vector<EdgeId> edge_origin;     // new edge -> old edge
};

// Replaces each node set by a single INF-weight node. Intra-set edges vanish;
// boundary edges are re-attached, and an edge that would duplicate one
// already re-attached is routed through a fresh INF-weight intermediate node
// whose two halves both keep the original edge weight. Each set must induce a
// (weakly) connected subgraph; throws kDisconnectedComponent otherwise.
ShrinkResult shrink_components(const Graph& g,
                               const std::vector<std::vector<NodeId>>& comps);

}  // namespace cutlab

#endif  // CUTLAB_MIN_CUT_H_
