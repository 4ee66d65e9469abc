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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "cutlab/error.h"
#include "cutlab/min_cut.h"

namespace cutlab {
namespace {

constexpr std::int64_t kNoCut = std::numeric_limits<std::int64_t>::max();

bool within_budget(const TmcInstance& inst, std::int64_t weight) {
  return !inst.budget || weight <= *inst.budget;
}

std::int64_t base_edge_total(const Graph& g) {
  std::int64_t total = 0;
  for (const Edge& e : g.edges()) {
    if (e.weight.is_inf()) {
      throw CutError(ErrorCode::kInvalidArgument, "gadget needs finite base edge weights");
    }
    total += e.weight.value();
  }
  return total;
}

// Single-service cut values, kNoCut when no finite cut exists.
std::vector<std::int64_t> single_cuts(const TmcInstance& inst) {
  std::vector<std::int64_t> out;
  for (NodeId s : inst.services) {
    const NodeId one[] = {s};
    try {
      out.push_back(tmc_group_cut(inst, one).weight);
    } catch (const CutError& e) {
      if (e.code() != ErrorCode::kNoFiniteCut) throw;
      out.push_back(kNoCut);
    }
  }
  return out;
}

// Does some gadget-free balanced split with fewer than l separated services
// land on a scanned balance value?
bool scale_admits_infeasible(const TmcInstance& inst, std::int64_t m,
                             std::int64_t lo, std::int64_t hi) {
  const std::int64_t n = inst.graph.num_nodes();
  const std::int64_t k = static_cast<std::int64_t>(inst.services.size());
  const std::int64_t l = inst.threshold;
  auto hits = [&](std::int64_t j) {
    for (std::int64_t d = -1; d <= 1; ++d) {
      if (j + d >= lo && j + d <= hi) return true;
    }
    return false;
  };
  // Big-clique service on the far side: w separated services including it.
  for (std::int64_t w = 1; w < l; ++w) {
    for (std::int64_t beta = w; beta <= n - 1 - (k - w); ++beta) {
      if (hits(2 * beta - n + (2 * w - 2) * m)) return true;
    }
  }
  // Big-clique service on the client's side.
  for (std::int64_t w = 0; w < l && w <= k - 1; ++w) {
    for (std::int64_t beta = w; beta <= n - 2 - (k - 1 - w); ++beta) {
      if (hits(2 * beta - n + (2 * w - 2 * k + 2) * m)) return true;
    }
  }
  return false;
}

}  // namespace

void validate(const TmcInstance& inst) {
  const Graph& g = inst.graph;
  if (!g.valid_node(inst.client)) {
    throw CutError(ErrorCode::kInvalidArgument, "client is not a node");
  }
  if (inst.services.empty()) throw CutError(ErrorCode::kInvalidArgument, "no services");
  std::vector<NodeId> sorted = inst.services;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw CutError(ErrorCode::kInvalidArgument, "services must be distinct");
  }
  for (NodeId s : sorted) {
    if (!g.valid_node(s)) throw CutError(ErrorCode::kInvalidArgument, "service is not a node");
    if (s == inst.client) {
      throw CutError(ErrorCode::kInvalidArgument, "client cannot be a service");
    }
  }
  if (inst.threshold < 1 || inst.threshold > static_cast<int>(inst.services.size())) {
    throw CutError(ErrorCode::kInvalidArgument, "threshold must lie in [1, k]");
  }
}

int disconnected_services(const TmcInstance& inst, std::span<const int> members) {
  const NodeId from[] = {inst.client};
  const std::vector<char> seen =
      reachable(inst.graph, from, removal_of(inst.graph, inst.mode, members));
  int count = 0;
  for (NodeId s : inst.services) count += !seen[s];
  return count;
}

CutSolution tmc_group_cut(const TmcInstance& inst, std::span<const NodeId> chosen) {
  const Graph& g = inst.graph;
  std::vector<Weight> cap;
  if (inst.mode == CutKind::kNode) {
    cap = g.node_weights();
    for (NodeId s : inst.services) cap[s] = Weight::inf();
  }
  const NodeId src[] = {inst.client};
  const CutOutcome out = solve_cut_problem(cut_problem_for(g, inst.mode, src, chosen, cap));
  CutSolution sol = make_cut(g, inst.mode, out.members, true);
  sol.feasible = within_budget(inst, sol.weight);
  return sol;
}

CutSolution solve_tmc_exact(const TmcInstance& inst) {
  validate(inst);
  const int k = static_cast<int>(inst.services.size());
  const int l = inst.threshold;
  double subsets = 1;
  for (int i = 0; i < l; ++i) subsets = subsets * (k - i) / (i + 1);
  if (subsets > 1e6) {
    throw CutError(ErrorCode::kInstanceTooLarge, "more than 10^6 service subsets");
  }
  std::vector<int> pick(l);
  std::iota(pick.begin(), pick.end(), 0);
  std::optional<CutSolution> best;
  for (;;) {
    std::vector<NodeId> chosen;
    for (int i : pick) chosen.push_back(inst.services[i]);
    try {
      CutSolution sol = tmc_group_cut(inst, chosen);
      if (!best || cut_less(sol, *best)) best = std::move(sol);
    } catch (const CutError& e) {
      if (e.code() != ErrorCode::kNoFiniteCut) throw;
    }
    int i = l - 1;
    while (i >= 0 && pick[i] == k - l + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < l; ++j) pick[j] = pick[j - 1] + 1;
  }
  if (!best) throw CutError(ErrorCode::kNoFiniteCut, "no threshold cut is finite");
  return *best;
}

TmncLp build_tmnc_lp(const TmcInstance& inst) {
  const Graph& g = inst.graph;
  const int n = g.num_nodes();
  TmncLp lp;
  lp.x_var.assign(n, -1);
  lp.y_var.assign(n, -1);
  std::vector<char> terminal(n, 0);
  terminal[inst.client] = 1;
  for (NodeId s : inst.services) terminal[s] = 1;
  for (NodeId v = 0; v < n; ++v) {
    lp.y_var[v] = lp.model.add_variable(0, 0, v == inst.client ? 0 : 1);
    if (!terminal[v] && g.node_weight(v).is_finite()) {
      lp.x_var[v] = lp.model.add_variable(static_cast<double>(g.node_weight(v).value()), 0, 1);
    }
  }
  for (NodeId v = 0; v < n; ++v) {
    for (const Arc& a : g.out_arcs(v)) {
      // Y_v <= X_v + Y_u
      LpConstraint c;
      c.terms.push_back({lp.y_var[v], 1});
      c.terms.push_back({lp.y_var[a.to], -1});
      if (lp.x_var[v] >= 0) c.terms.push_back({lp.x_var[v], -1});
      c.sense = LpSense::kLessEqual;
      c.rhs = 0;
      lp.model.constraints.push_back(std::move(c));
    }
  }
  LpConstraint total;
  for (NodeId s : inst.services) total.terms.push_back({lp.y_var[s], 1});
  total.sense = LpSense::kGreaterEqual;
  total.rhs = inst.threshold;
  lp.model.constraints.push_back(std::move(total));
  return lp;
}

std::vector<int> tmnc_rounding(std::span<const double> y, std::span<const std::int64_t> c,
                               int threshold, int num_nodes) {
  const int k = static_cast<int>(y.size());
  const int l = threshold;
  auto by_cut = [&](int a, int b) { return c[a] != c[b] ? c[a] < c[b] : a < b; };
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return y[a] > y[b]; });
  // First 1-based position whose Y falls below 1/sqrt(n); k+1 if none.
  // Values within tolerance of the cutoff count as reaching it.
  const double cutoff = 1.0 / std::sqrt(static_cast<double>(num_nodes)) - kLpTolerance;
  int first_low = k + 1;
  for (int pos = 0; pos < k; ++pos) {
    if (y[order[pos]] < cutoff) {
      first_low = pos + 1;
      break;
    }
  }
  if (first_low > l) return std::vector<int>(order.begin(), order.begin() + l);
  // Augment from the low part, position first_low included: with k = l
  // the strictly later positions are too few.
  std::vector<int> chosen(order.begin(), order.begin() + (first_low - 1));
  std::vector<int> rest(order.begin() + (first_low - 1), order.end());
  std::sort(rest.begin(), rest.end(), by_cut);
  for (int t = 0; t < l - first_low + 1; ++t) chosen.push_back(rest[t]);
  return chosen;
}

TmncResult solve_tmnc_lp_detailed(const TmcInstance& inst) {
  validate(inst);
  if (inst.mode != CutKind::kNode || inst.graph.directed()) {
    throw CutError(ErrorCode::kInvalidArgument, "LP rounding needs an undirected node-cut instance");
  }
  const int n = inst.graph.num_nodes();
  const int k = static_cast<int>(inst.services.size());
  const int l = inst.threshold;
  const std::vector<std::int64_t> c = single_cuts(inst);
  if (std::count_if(c.begin(), c.end(), [](std::int64_t x) { return x != kNoCut; }) < l) {
    throw CutError(ErrorCode::kNoFiniteCut, "fewer than l services can be cut off");
  }
  auto by_cut = [&](int a, int b) { return c[a] != c[b] ? c[a] < c[b] : a < b; };

  TmncResult res;
  std::vector<int> chosen_idx;
  if (static_cast<std::int64_t>(l) * l < n) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), by_cut);
    chosen_idx.assign(idx.begin(), idx.begin() + l);
  } else {
    const TmncLp lp = build_tmnc_lp(inst);
    const LpSolution sol = solve_lp(lp.model);
    if (sol.status != LpStatus::kOptimal) {
      throw CutError(ErrorCode::kLpInfeasible, "threshold LP has no optimum");
    }
    res.used_lp = true;
    res.lp_value = sol.objective;
    for (NodeId s : inst.services) res.y_services.push_back(sol.values[lp.y_var[s]]);
    chosen_idx = tmnc_rounding(res.y_services, c, l, n);
  }
  for (int i : chosen_idx) res.chosen.push_back(inst.services[i]);
  res.cut = tmc_group_cut(inst, res.chosen);
  return res;
}

CutSolution solve_tmnc_lp(const TmcInstance& inst) { return solve_tmnc_lp_detailed(inst).cut; }

GadgetScales paper_scales(const TmcInstance& inst) {
  const std::int64_t n = inst.graph.num_nodes();
  return {n * n, n * n};
}

std::pair<std::int64_t, std::int64_t> balance_range(const TmcInstance& inst,
                                                     const GadgetScales& scales) {
  const std::int64_t n = inst.graph.num_nodes();
  const std::int64_t k = static_cast<std::int64_t>(inst.services.size());
  const std::int64_t l = inst.threshold;
  const std::int64_t m = scales.size;
  const std::int64_t lo = (2 * l - 2) * m - n + l;
  const std::int64_t hi = 2 * (k - 1) * m + n - 2;
  return {std::max<std::int64_t>(0, lo), hi};
}

GadgetScales minimal_scales(const TmcInstance& inst) {
  validate(inst);
  GadgetScales s;
  s.cost = base_edge_total(inst.graph) + 1;
  const std::int64_t n = inst.graph.num_nodes();
  for (std::int64_t m = 1; m <= n * n; ++m) {
    const auto [lo, hi] = balance_range(inst, {m, s.cost});
    if (!scale_admits_infeasible(inst, m, lo, hi)) {
      s.size = m;
      return s;
    }
  }
  s.size = n * n;
  return s;
}

BisectionGadget build_bisection_gadget(const TmcInstance& inst, int service_index,
                                       std::int64_t balance, const GadgetScales& scales) {
  validate(inst);
  const Graph& g = inst.graph;
  if (inst.mode != CutKind::kEdge || g.directed()) {
    throw CutError(ErrorCode::kInvalidArgument, "gadget needs an undirected edge-cut instance");
  }
  const int k = static_cast<int>(inst.services.size());
  if (service_index < 0 || service_index >= k) {
    throw CutError(ErrorCode::kInvalidArgument, "service index out of range");
  }
  if (balance < 0) throw CutError(ErrorCode::kInvalidArgument, "negative balance clique");
  const std::int64_t total = base_edge_total(g);
  if (scales.cost <= total) {
    throw CutError(ErrorCode::kScaleTooSmall,
                   "gadget cost " + std::to_string(scales.cost) +
                       " does not exceed base weight " + std::to_string(total));
  }
  if (scales.size < 1) throw CutError(ErrorCode::kScaleTooSmall, "clique size unit below 1");

  BisectionGadget gad;
  gad.service_index = service_index;
  gad.balance = balance;
  gad.scales = scales;
  GraphBuilder b;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    b.add_node();
    gad.origin.push_back(NodeOrigin::kOriginal);
    gad.owner.push_back(v);
  }
  for (const Edge& e : g.edges()) b.add_edge(e.u, e.v, e.weight);
  gad.base_edges = g.num_edges();
  const Weight cost(scales.cost);
  auto clique = [&](std::int64_t size, NodeOrigin origin, int owner, NodeId anchor) {
    const NodeId first = b.num_nodes();
    for (std::int64_t i = 0; i < size; ++i) {
      b.add_node();
      gad.origin.push_back(origin);
      gad.owner.push_back(owner);
    }
    for (NodeId u = first; u < b.num_nodes(); ++u) {
      for (NodeId v = u + 1; v < b.num_nodes(); ++v) b.add_edge(u, v, cost);
    }
    if (size > 0) b.add_edge(anchor, first, cost);
  };
  for (int u = 0; u < k; ++u) {
    if (u != service_index) {
      clique(scales.size, NodeOrigin::kServiceClique, u, inst.services[u]);
    }
  }
  clique((k - 1) * scales.size, NodeOrigin::kServiceClique, service_index,
         inst.services[service_index]);
  clique(balance, NodeOrigin::kClientClique, -1, inst.client);
  if (b.num_nodes() % 2) {
    b.add_node();
    gad.origin.push_back(NodeOrigin::kPadding);
    gad.owner.push_back(-1);
  }
  gad.graph = b.build();
  return gad;
}

TmecScanResult solve_tmec_via_bisection_detailed(const TmcInstance& inst,
                                                 const BisectionSolver& backend,
                                                 const GadgetScales& scales) {
  validate(inst);
  const auto [lo, hi] = balance_range(inst, scales);
  const int k = static_cast<int>(inst.services.size());
  TmecScanResult res;
  std::optional<CutSolution> best;
  for (int i = 0; i < k; ++i) {
    for (std::int64_t j = lo; j <= hi; ++j) {
      const BisectionGadget gad = build_bisection_gadget(inst, i, j, scales);
      const Bisection bis = backend(gad.graph);
      ++res.bisections;
      if (!is_balanced(bis.side)) {
        throw CutError(ErrorCode::kInvalidArgument, "bisection backend returned an unbalanced split");
      }
      bool gadget_cut = false;
      std::vector<int> members;
      for (EdgeId e = 0; e < gad.graph.num_edges(); ++e) {
        const Edge& ed = gad.graph.edge(e);
        if (bis.side[ed.u] == bis.side[ed.v]) continue;
        if (e >= gad.base_edges) {
          gadget_cut = true;
          break;
        }
        members.push_back(e);
      }
      if (gadget_cut || disconnected_services(inst, members) < inst.threshold) {
        ++res.rejected;
        continue;
      }
      CutSolution sol = make_cut(inst.graph, CutKind::kEdge, members, true);
      sol.feasible = within_budget(inst, sol.weight);
      if (!best || cut_less(sol, *best)) {
        best = std::move(sol);
        res.service_index = i;
        res.balance = j;
      }
    }
  }
  if (!best) throw CutError(ErrorCode::kInfeasible, "no bisection maps to a threshold cut");
  res.cut = std::move(*best);
  return res;
}

CutSolution solve_tmec_via_bisection(const TmcInstance& inst, const BisectionSolver& backend,
                                     const GadgetScales& scales) {
  return solve_tmec_via_bisection_detailed(inst, backend, scales).cut;
}

}  // namespace cutlab
