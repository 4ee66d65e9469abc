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


#ifndef CUTLAB_REDUCTIONS_H_
#define CUTLAB_REDUCTIONS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cutlab/cpmc.h"
#include "cutlab/graph.h"
#include "cutlab/tmc.h"

namespace cutlab {

// Weighted set cover over elements 0..num_elements-1.
struct SetCoverInstance {
  int num_elements = 0;
  std::vector<std::vector<int>> sets;
  std::vector<std::int64_t> weights;  // one per set, positive
  std::int64_t budget = 0;            // decision bound

  friend bool operator==(const SetCoverInstance&, const SetCoverInstance&) = default;
};

// Throws kInvalidArgument on bad elements, weights or uncovered elements.
void validate(const SetCoverInstance& sc);

bool is_cover(const SetCoverInstance& sc, std::span<const int> chosen);
std::int64_t cover_weight(const SetCoverInstance& sc, std::span<const int> chosen);

// Cheapest cover by enumeration, ties to the smallest mask. Throws
// kInstanceTooLarge past 24 sets.
std::vector<int> min_weight_set_cover(const SetCoverInstance& sc);

// Subsets of elements 0..num_elements-1 plus a cardinality parameter: the
// number of subsets to pick (minimum cover) or of elements to pick
// (maximum cover).
struct CoverInstance {
  int num_elements = 0;
  std::vector<std::vector<int>> subsets;
  int param = 0;

  int tau() const;

  friend bool operator==(const CoverInstance&, const CoverInstance&) = default;
};

void validate(const CoverInstance& c);

// Number of subsets whose elements all lie in `elements`.
int fully_covered(const CoverInstance& c, std::span<const int> elements);
int fully_covered_mask(const CoverInstance& c, std::uint64_t element_mask);

struct CoverChoice {
  std::vector<int> chosen;
  int value = 0;
};

// Pick `param` subsets with the smallest union. Enumeration.
CoverChoice set_min_cover(const CoverInstance& c);
// Pick `param` elements covering the most subsets. Enumeration.
CoverChoice set_max_cover(const CoverInstance& c);

// Edges become two-element subsets; param = m asks for m edges on the fewest
// nodes.
CoverInstance inverse_k_subgraph(const Graph& g, int m);

// Unions of all ordered pairs, index-major, duplicates kept. Throws
// kSizeBoundExceeded when |C|^2 > limit.
CoverInstance square_collection(const CoverInstance& c, std::size_t limit = 1 << 20);

// Arc capacities live in the graph's edge weights.
struct InterdictionInstance {
  Graph graph;  // directed
  NodeId source = 0;
  NodeId sink = 1;
  std::vector<Weight> blocking_cost;  // per arc
  std::int64_t budget = 0;

  friend bool operator==(const InterdictionInstance&, const InterdictionInstance&) = default;
};

// Max flow with the `blocked` arcs removed.
std::int64_t interdicted_flow(const InterdictionInstance& inst, std::span<const int> blocked);

// Solutions on either side are plain id lists: chosen sets, cut members,
// chosen elements, blocked arcs, or the nodes on one side of a bisection.
using Encoded = std::vector<int>;

// target = scale * source + slack with slack in [slack_min, slack_max]. The
// target side is always minimised.
struct ValueRelation {
  std::int64_t scale = 1;
  std::int64_t slack_min = 0;
  std::int64_t slack_max = 0;

  bool holds(std::int64_t source, std::int64_t target) const;
};

struct ReductionCertificate {
  std::string reduction;
  std::function<Encoded(const Encoded&)> forward;
  std::function<Encoded(const Encoded&)> backward;
  // nullopt for an infeasible solution.
  std::function<std::optional<std::int64_t>(const Encoded&)> source_value;
  std::function<std::optional<std::int64_t>(const Encoded&)> target_value;
  ValueRelation relation;
};

struct Verdict {
  bool ok = true;
  std::vector<std::string> violations;
};

// Checks feasibility of both solutions and of their images, the relation on
// the forward image, the backward inequality, and with `optimal_pair` the
// relation between the two given values.
Verdict verify_certificate(const ReductionCertificate& cert, const Encoded& source_solution,
                           const Encoded& target_solution, bool optimal_pair = false);

// Directed set-cover gadget: source s1, partner s2, destination t.
struct SetCoverGadget {
  CpmcInstance instance;
  ReductionCertificate certificate;
  std::vector<EdgeId> set_edge;                  // per set
  std::vector<std::vector<EdgeId>> to_right;     // per element, per incidence
  std::vector<std::vector<EdgeId>> from_left;    // per element, per incidence
  std::vector<std::vector<int>> incidence_set;   // per element: set index
};

SetCoverGadget reduce_setcover_to_directed_cpmec(const SetCoverInstance& sc);

// Undirected gadget with one partner per gadget end node. `scale` weights
// the set edges (0 picks 2*n1*k).
SetCoverGadget reduce_setcover_to_multipartner_cpmec(const SetCoverInstance& sc,
                                                     std::int64_t scale = 0);

struct BisectionTmec {
  TmcInstance instance;
  ReductionCertificate certificate;
};

// Throws kOddOrder, kInvalidArgument for non-unit or directed input.
BisectionTmec reduce_bisection_to_tmec(const Graph& g);

struct CoverInterdiction {
  InterdictionInstance instance;
  ReductionCertificate certificate;
  std::vector<EdgeId> element_arc;  // per element
};

CoverInterdiction reduce_maxcover_to_interdiction(const CoverInstance& c);

}  // namespace cutlab

#endif  // CUTLAB_REDUCTIONS_H_
