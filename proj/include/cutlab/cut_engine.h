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

#ifndef CUTLAB_CUT_ENGINE_H_
#define CUTLAB_CUT_ENGINE_H_

#include <cstdint>
#include <vector>

#include "cutlab/weight.h"

namespace cutlab {

// An arc of a flow network. `member` tags the arcs that stand for cut
// candidates (an edge id or a node id); untagged arcs are structural.
// A bidirectional arc carries `capacity` both ways, like an undirected edge.
struct FlowArc {
  int from = 0;
  int to = 0;
  Weight capacity{1};
  int member = -1;
  bool bidirectional = false;
};

// Minimum cut between a set of sources and a set of sinks. Member ids must be
// unique across arcs.
struct CutProblem {
  int num_nodes = 0;
  std::vector<FlowArc> arcs;
  std::vector<int> sources;
  std::vector<int> sinks;
};

struct CutOutcome {
  std::int64_t value = 0;
  std::vector<int> members;       // sorted
  std::vector<char> source_side;  // per problem node
  bool unique = false;            // the minimum cut has exactly one source side
};

// Exact integral minimum cut. Among all minimum cuts returns the one whose
// sorted member list is lexicographically smallest. Throws kNoFiniteCut when
// every separator uses an INF arc, kInvalidArgument when a node is both
// source and sink.
CutOutcome solve_cut_problem(const CutProblem& problem);

// Plain max-flow value between the same terminals; INF arcs are reported as
// kNoFiniteCut just like solve_cut_problem.
std::int64_t max_flow_value(const CutProblem& problem);

}  // namespace cutlab

#endif  // CUTLAB_CUT_ENGINE_H_
