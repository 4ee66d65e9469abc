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

#include <string>

#include "cutlab/error.h"

namespace cutlab {

CutProblem cut_problem_for(const Graph& g, CutKind kind,
                           std::span<const NodeId> sources,
                           std::span<const NodeId> sinks,
                           std::span<const Weight> capacity,
                           const Removal& removal) {
  const int n = g.num_nodes();
  for (NodeId v : sources) {
    if (!g.valid_node(v)) throw CutError(ErrorCode::kInvalidArgument, "bad source");
  }
  for (NodeId v : sinks) {
    if (!g.valid_node(v)) throw CutError(ErrorCode::kInvalidArgument, "bad sink");
  }
  CutProblem p;
  p.sources.assign(sources.begin(), sources.end());
  p.sinks.assign(sinks.begin(), sinks.end());
  if (kind == CutKind::kEdge) {
    p.num_nodes = n;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (removal.edge_gone(e)) continue;
      const Edge& ed = g.edge(e);
      if (removal.node_gone(ed.u) || removal.node_gone(ed.v)) continue;
      const Weight w = capacity.empty() ? ed.weight : capacity[e];
      p.arcs.push_back(FlowArc{ed.u, ed.v, w, e, !g.directed()});
    }
    return p;
  }
  p.num_nodes = 2 * n;
  std::vector<char> terminal(n, 0);
  for (NodeId v : sources) terminal[v] = 1;
  for (NodeId v : sinks) terminal[v] = 1;
  for (NodeId v = 0; v < n; ++v) {
    if (removal.node_gone(v)) continue;
    if (terminal[v]) {
      p.arcs.push_back(FlowArc{v, n + v, Weight::inf(), -1, false});
      continue;
    }
    const Weight w = capacity.empty() ? g.node_weight(v) : capacity[v];
    p.arcs.push_back(FlowArc{v, n + v, w, w.is_inf() ? -1 : v, false});
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (removal.edge_gone(e)) continue;
    const Edge& ed = g.edge(e);
    if (removal.node_gone(ed.u) || removal.node_gone(ed.v)) continue;
    p.arcs.push_back(FlowArc{n + ed.u, ed.v, Weight::inf(), -1, false});
    if (!g.directed()) {
      p.arcs.push_back(FlowArc{n + ed.v, ed.u, Weight::inf(), -1, false});
    }
  }
  return p;
}

CutSolution min_st_cut(const Graph& g, CutKind kind,
                       std::span<const NodeId> sources,
                       std::span<const NodeId> sinks) {
  if (sources.empty() || sinks.empty()) {
    throw CutError(ErrorCode::kInvalidArgument,
                   "need at least one source and one sink");
  }
  const CutOutcome out = solve_cut_problem(cut_problem_for(g, kind, sources, sinks));
  return make_cut(g, kind, out.members, true);
}

CutSolution min_st_edge_cut(const Graph& g, std::span<const NodeId> sources,
                            std::span<const NodeId> sinks) {
  return min_st_cut(g, CutKind::kEdge, sources, sinks);
}

CutSolution min_st_node_cut(const Graph& g, std::span<const NodeId> sources,
                            std::span<const NodeId> sinks) {
  return min_st_cut(g, CutKind::kNode, sources, sinks);
}

ShrinkResult shrink_components(const Graph& g,
                               const std::vector<std::vector<NodeId>>& comps) {
  const int n = g.num_nodes();
  std::vector<int> owner(n, -1);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (comps[c].empty()) {
      throw CutError(ErrorCode::kInvalidArgument, "empty component");
    }
    for (NodeId v : comps[c]) {
      if (!g.valid_node(v)) {
        throw CutError(ErrorCode::kInvalidArgument, "unknown node in component");
      }
      if (owner[v] >= 0) {
        throw CutError(ErrorCode::kInvalidArgument,
                       "node " + std::to_string(v) + " is in two components");
      }
      owner[v] = static_cast<int>(c);
    }
  }
  // Connectivity of each induced subgraph.
  for (std::size_t c = 0; c < comps.size(); ++c) {
    Removal outside;
    outside.node_removed.assign(n, 1);
    for (NodeId v : comps[c]) outside.node_removed[v] = 0;
    const NodeId start[] = {comps[c].front()};
    // Weak connectivity: walk both directions.
    std::vector<char> seen(n, 0);
    std::vector<NodeId> stack(start, start + 1);
    seen[start[0]] = 1;
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      for (auto arcs : {g.out_arcs(v), g.in_arcs(v)}) {
        for (const Arc& a : arcs) {
          if (!seen[a.to] && owner[a.to] == static_cast<int>(c)) {
            seen[a.to] = 1;
            stack.push_back(a.to);
          }
        }
      }
    }
    for (NodeId v : comps[c]) {
      if (!seen[v]) {
        throw CutError(ErrorCode::kDisconnectedComponent,
                       "component " + std::to_string(c) + " is not connected");
      }
    }
  }

  ShrinkResult r;
  r.node_map.assign(n, -1);
  r.component_node.assign(comps.size(), -1);
  GraphBuilder b(g.directed());
  for (NodeId v = 0; v < n; ++v) {
    if (owner[v] < 0) {
      r.node_map[v] = b.add_node(g.node_weight(v));
    } else if (r.component_node[owner[v]] < 0) {
      r.component_node[owner[v]] = b.add_node(Weight::inf());
      r.node_map[v] = r.component_node[owner[v]];
    } else {
      r.node_map[v] = r.component_node[owner[v]];
    }
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    const NodeId u = r.node_map[ed.u];
    const NodeId v = r.node_map[ed.v];
    if (u == v) continue;
    if (!b.has_edge(u, v)) {
      b.add_edge(u, v, ed.weight);
      r.edge_origin.push_back(e);
      continue;
    }
    const NodeId mid = b.add_node(Weight::inf());
    b.add_edge(u, mid, ed.weight);
    b.add_edge(mid, v, ed.weight);
    r.edge_origin.push_back(e);
    r.edge_origin.push_back(e);
  }
  r.graph = b.build();
  return r;
}

}  // namespace cutlab
