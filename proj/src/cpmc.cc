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

#include "cutlab/cpmc.h"

#include <algorithm>
#include <string>

#include "cutlab/error.h"
#include "cutlab/min_cut.h"

namespace cutlab {

void validate(const CpmcInstance& inst) {
  const Graph& g = inst.graph;
  if (inst.partners.empty() || inst.destinations.empty()) {
    throw CutError(ErrorCode::kInvalidArgument,
                   "need at least one partner and one destination");
  }
  std::vector<char> used(g.num_nodes(), 0);
  auto claim = [&](NodeId v) {
    if (!g.valid_node(v)) {
      throw CutError(ErrorCode::kInvalidArgument,
                     "terminal " + std::to_string(v) + " is not a node");
    }
    if (used[v]) {
      throw CutError(ErrorCode::kInvalidArgument,
                     "terminal " + std::to_string(v) + " appears twice");
    }
    used[v] = 1;
  };
  claim(inst.source);
  for (NodeId v : inst.partners) claim(v);
  for (NodeId v : inst.destinations) claim(v);
  if (inst.keep_destinations_connected &&
      (g.directed() || inst.mode != CutKind::kEdge)) {
    throw CutError(ErrorCode::kInvalidArgument,
                   "two-sided preservation needs an undirected edge instance");
  }
  if (inst.budget && *inst.budget <= 0) {
    throw CutError(ErrorCode::kInvalidArgument, "budget must be positive");
  }
}

namespace {

std::vector<NodeId> source_side_terminals(const CpmcInstance& inst) {
  std::vector<NodeId> p = {inst.source};
  p.insert(p.end(), inst.partners.begin(), inst.partners.end());
  return p;
}

bool partners_attached(const CpmcInstance& inst, const Removal& r) {
  const NodeId head[] = {inst.source};
  const auto fwd = reachable(inst.graph, head, r, Direction::kForward);
  if (!inst.graph.directed()) {
    return std::all_of(inst.partners.begin(), inst.partners.end(),
                       [&](NodeId p) { return fwd[p] != 0; });
  }
  const auto bwd = reachable(inst.graph, head, r, Direction::kBackward);
  return std::all_of(inst.partners.begin(), inst.partners.end(),
                     [&](NodeId p) { return fwd[p] || bwd[p]; });
}

}  // namespace

bool cut_is_feasible(const CpmcInstance& inst, std::span<const int> members) {
  const Graph& g = inst.graph;
  for (int m : members) {
    if (inst.mode == CutKind::kNode) {
      if (!g.valid_node(m) || g.node_weight(m).is_inf()) return false;
      if (m == inst.source ||
          std::find(inst.partners.begin(), inst.partners.end(), m) !=
              inst.partners.end() ||
          std::find(inst.destinations.begin(), inst.destinations.end(), m) !=
              inst.destinations.end()) {
        return false;
      }
    } else if (m < 0 || m >= g.num_edges() || g.edge(m).weight.is_inf()) {
      return false;
    }
  }
  const Removal r = removal_of(g, inst.mode, members);
  const auto from_dest = reachable(g, inst.destinations, r);
  for (NodeId v : source_side_terminals(inst)) {
    if (from_dest[v]) return false;
  }
  if (!partners_attached(inst, r)) return false;
  if (inst.keep_destinations_connected) {
    const NodeId head[] = {inst.destinations.front()};
    const auto reach = reachable(g, head, r);
    for (NodeId t : inst.destinations) {
      if (!reach[t]) return false;
    }
  }
  return true;
}

namespace {

// Smallest possible destination side for an edge cut: everything tied to a
// destination by INF edges (INF arcs leaving it, when directed).
std::vector<char> inf_closure_of_destinations(const CpmcInstance& inst) {
  const Graph& g = inst.graph;
  Removal finite_only;
  finite_only.edge_removed.assign(g.num_edges(), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    finite_only.edge_removed[e] = g.edge(e).weight.is_finite();
  }
  return reachable(g, inst.destinations, finite_only);
}

bool edge_mode_feasible(const CpmcInstance& inst) {
  const std::vector<char> x = inf_closure_of_destinations(inst);
  for (NodeId v : source_side_terminals(inst)) {
    if (x[v]) return false;
  }
  Removal r;
  r.node_removed = x;
  return partners_attached(inst, r);
}

// A node cut exists iff the source and partners are connected through nodes
// whose uncuttable closure avoids every destination. Uncuttable here means
// INF weight or terminal.
bool undirected_node_mode_feasible(const CpmcInstance& inst) {
  const Graph& g = inst.graph;
  const int n = g.num_nodes();
  std::vector<char> uncuttable(n, 0);
  for (NodeId v = 0; v < n; ++v) uncuttable[v] = g.node_weight(v).is_inf();
  for (NodeId v : source_side_terminals(inst)) uncuttable[v] = 1;
  std::vector<char> is_dest(n, 0);
  for (NodeId t : inst.destinations) is_dest[t] = uncuttable[t] = 1;

  // Components of the uncuttable subgraph; a component touching a
  // destination poisons every node adjacent to it.
  std::vector<int> comp(n, -1);
  std::vector<char> comp_bad;
  for (NodeId s = 0; s < n; ++s) {
    if (!uncuttable[s] || comp[s] >= 0) continue;
    const int id = static_cast<int>(comp_bad.size());
    comp_bad.push_back(0);
    std::vector<NodeId> stack = {s};
    comp[s] = id;
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      if (is_dest[v]) comp_bad[id] = 1;
      for (const Arc& a : g.out_arcs(v)) {
        if (uncuttable[a.to] && comp[a.to] < 0) {
          comp[a.to] = id;
          stack.push_back(a.to);
        }
      }
    }
  }
  Removal r;
  r.node_removed.assign(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    bool bad = uncuttable[v] && comp_bad[comp[v]];
    if (!uncuttable[v]) {
      for (const Arc& a : g.out_arcs(v)) {
        if (uncuttable[a.to] && comp_bad[comp[a.to]]) bad = true;
      }
    }
    r.node_removed[v] = bad;
  }
  if (r.node_removed[inst.source]) return false;
  return partners_attached(inst, r);
}

class BranchAndBound {
 public:
  BranchAndBound(const CpmcInstance& inst, const ExactOptions& options)
      : inst_(inst), g_(inst.graph), options_(options) {}

  std::optional<CutSolution> run() {
    const int n = g_.num_nodes();
    if (inst_.mode == CutKind::kEdge) {
      side_.assign(n, kFree);
      for (NodeId t : inst_.destinations) side_[t] = kDest;
      for (NodeId v : source_side_terminals(inst_)) side_[v] = kSrc;
      edge_search();
    } else {
      state_.assign(n, kFree);
      for (NodeId v = 0; v < n; ++v) {
        if (g_.node_weight(v).is_inf()) state_[v] = kKeep;
      }
      for (NodeId t : inst_.destinations) state_[t] = kKeep;
      for (NodeId v : source_side_terminals(inst_)) state_[v] = kKeep;
      node_search();
    }
    return best_;
  }

 private:
  static constexpr char kFree = 0;
  static constexpr char kDest = 1;  // edge mode: destination side
  static constexpr char kSrc = 2;   // edge mode: source side
  static constexpr char kCut = 1;   // node mode: removed
  static constexpr char kKeep = 2;  // node mode: kept

  void tick() {
    if (++explored_ > options_.node_limit) {
      throw CutError(ErrorCode::kInstanceTooLarge,
                     "exact search exceeded " +
                         std::to_string(options_.node_limit) + " nodes");
    }
  }

  bool beats_best(std::int64_t weight, const std::vector<int>& members) const {
    if (!best_) return true;
    if (weight != best_->weight) return weight < best_->weight;
    return members < best_->members;
  }

  bool worse_than_best(std::int64_t lower_bound) const {
    return best_ && lower_bound > best_->weight;
  }

  void offer(const std::vector<int>& members) {
    CutSolution sol = make_cut(g_, inst_.mode, members, true);
    if (beats_best(sol.weight, sol.members)) best_ = std::move(sol);
  }

  void edge_search() {
    tick();
    std::vector<NodeId> dest_side, src_side;
    for (NodeId v = 0; v < g_.num_nodes(); ++v) {
      if (side_[v] == kDest) dest_side.push_back(v);
      if (side_[v] == kSrc) src_side.push_back(v);
    }
    CutOutcome relax;
    try {
      relax = solve_cut_problem(
          cut_problem_for(g_, CutKind::kEdge, dest_side, src_side));
    } catch (const CutError& e) {
      if (e.code() == ErrorCode::kNoFiniteCut) return;
      throw;
    }
    if (worse_than_best(relax.value)) return;
    if (cut_is_feasible(inst_, relax.members)) {
      offer(relax.members);
      return;
    }
    // Pulling a relaxation-destination-side node over to the source side is
    // the only move that can restore source-side connectivity.
    NodeId pick = -1;
    for (NodeId v = 0; v < g_.num_nodes() && pick < 0; ++v) {
      if (side_[v] == kFree && relax.source_side[v]) pick = v;
    }
    char first = kSrc;
    if (pick < 0) {
      if (!inst_.keep_destinations_connected) return;
      for (NodeId v = 0; v < g_.num_nodes() && pick < 0; ++v) {
        if (side_[v] == kFree) pick = v;
      }
      if (pick < 0) return;
      first = kDest;
    }
    for (char s : {first, static_cast<char>(kDest + kSrc - first)}) {
      side_[pick] = s;
      edge_search();
    }
    side_[pick] = kFree;
  }

  void node_search() {
    tick();
    const int n = g_.num_nodes();
    std::vector<Weight> capacity(n);
    Removal removed;
    removed.node_removed.assign(n, 0);
    std::vector<int> forced;
    std::int64_t forced_weight = 0;
    for (NodeId v = 0; v < n; ++v) {
      if (state_[v] == kCut) {
        removed.node_removed[v] = 1;
        forced.push_back(v);
        forced_weight += g_.node_weight(v).value();
      }
      capacity[v] = state_[v] == kKeep ? Weight::inf() : g_.node_weight(v);
    }
    CutOutcome relax;
    try {
      relax = solve_cut_problem(cut_problem_for(
          g_, CutKind::kNode, inst_.destinations, source_side_terminals(inst_),
          capacity, removed));
    } catch (const CutError& e) {
      if (e.code() == ErrorCode::kNoFiniteCut) return;
      throw;
    }
    if (worse_than_best(forced_weight + relax.value)) return;
    std::vector<int> members = forced;
    members.insert(members.end(), relax.members.begin(), relax.members.end());
    std::sort(members.begin(), members.end());
    if (cut_is_feasible(inst_, members)) {
      offer(members);
      return;
    }
    if (relax.members.empty()) return;
    const NodeId pick = relax.members.front();
    for (char s : {kKeep, kCut}) {
      state_[pick] = s;
      node_search();
    }
    state_[pick] = kFree;
  }

  const CpmcInstance& inst_;
  const Graph& g_;
  ExactOptions options_;
  std::vector<char> side_;
  std::vector<char> state_;
  std::optional<CutSolution> best_;
  std::int64_t explored_ = 0;
};

}  // namespace

bool cpmc_feasible(const CpmcInstance& inst) {
  validate(inst);
  if (inst.keep_destinations_connected ||
      (inst.mode == CutKind::kNode && inst.graph.directed())) {
    CpmcInstance unbudgeted = inst;
    unbudgeted.budget.reset();
    return solve_cpmc_exact(unbudgeted).feasible;
  }
  if (inst.mode == CutKind::kEdge) return edge_mode_feasible(inst);
  return undirected_node_mode_feasible(inst);
}

CutSolution solve_cpmc_exact(const CpmcInstance& inst,
                             const ExactOptions& options) {
  validate(inst);
  std::optional<CutSolution> best = BranchAndBound(inst, options).run();
  if (!best) {
    CutSolution none;
    none.kind = inst.mode;
    none.feasible = false;
    return none;
  }
  if (inst.budget && best->weight > *inst.budget) best->feasible = false;
  return *best;
}

PartnerClassification classify_partner(const Graph& g, NodeId s1, NodeId s2,
                                       NodeId t) {
  if (g.directed()) {
    throw CutError(ErrorCode::kInvalidArgument,
                   "partner classification needs an undirected graph");
  }
  if (s1 == s2 || s1 == t || s2 == t) {
    throw CutError(ErrorCode::kInvalidArgument, "terminals must be distinct");
  }
  PartnerClassification c;
  const NodeId dest[] = {t};
  const NodeId a[] = {s1};
  const NodeId b[] = {s2};
  const NodeId both[] = {s1, s2};
  c.ce_s1t = min_st_edge_cut(g, a, dest).weight;
  c.ce_s2t = min_st_edge_cut(g, b, dest).weight;
  c.ce_joint = min_st_edge_cut(g, both, dest).weight;
  CpmcInstance inst;
  inst.graph = g;
  inst.source = s1;
  inst.partners = {s2};
  inst.destinations = {t};
  inst.mode = CutKind::kEdge;
  const CutSolution cep = solve_cpmc_exact(inst);
  if (!cep.feasible) {
    throw CutError(ErrorCode::kNoFiniteCut,
                   "no connectivity preserving edge cut exists");
  }
  c.cep = cep.weight;
  const std::int64_t sum = c.ce_s1t + c.ce_s2t;
  if (sum > c.ce_joint) {
    c.verdict = PartnerVerdict::kGuaranteedPreserving;
  } else if (sum == c.ce_joint && c.cep == c.ce_joint) {
    c.verdict = PartnerVerdict::kThreshold;
  } else {
    c.verdict = PartnerVerdict::kOuter;
  }
  return c;
}

}  // namespace cutlab
