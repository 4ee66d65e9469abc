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

#include "cutlab/graph.h"

#include <algorithm>
#include <deque>
#include <string>

#include "cutlab/error.h"

namespace cutlab {

std::optional<EdgeId> Graph::find_edge(NodeId u, NodeId v) const {
  if (!valid_node(u) || !valid_node(v)) return std::nullopt;
  for (const Arc& a : out_[u]) {
    if (a.to == v) return a.edge;
  }
  return std::nullopt;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.directed_ != b.directed_ || a.node_weight_ != b.node_weight_ ||
      a.edges_.size() != b.edges_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const Edge& x = a.edges_[i];
    const Edge& y = b.edges_[i];
    if (x.u != y.u || x.v != y.v || x.weight != y.weight) return false;
  }
  return true;
}

GraphBuilder::GraphBuilder(const Graph& g) : directed_(g.directed()) {
  for (NodeId v = 0; v < g.num_nodes(); ++v) add_node(g.node_weight(v));
  for (const Edge& e : g.edges()) add_edge(e.u, e.v, e.weight);
}

std::uint64_t GraphBuilder::key(NodeId u, NodeId v) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

namespace {

void check_weight(Weight w, const char* what) {
  if (w.is_finite() && w.value() < 1) {
    throw CutError(ErrorCode::kInvalidArgument,
                   std::string(what) + " weight must be >= 1 or INF, got " +
                       w.to_string());
  }
}

}  // namespace

NodeId GraphBuilder::add_node(Weight weight) {
  check_weight(weight, "node");
  node_weight_.push_back(weight);
  return num_nodes() - 1;
}

NodeId GraphBuilder::add_nodes(int count, Weight weight) {
  const NodeId first = num_nodes();
  for (int i = 0; i < count; ++i) add_node(weight);
  return first;
}

void GraphBuilder::set_node_weight(NodeId v, Weight weight) {
  check_weight(weight, "node");
  node_weight_.at(v) = weight;
}

bool GraphBuilder::has_edge(NodeId u, NodeId v) const {
  const std::uint64_t k =
      directed_ ? key(u, v) : key(std::min(u, v), std::max(u, v));
  return std::binary_search(edge_keys_.begin(), edge_keys_.end(), k);
}

EdgeId GraphBuilder::add_edge(NodeId u, NodeId v, Weight weight) {
  if (u < 0 || v < 0 || u >= num_nodes() || v >= num_nodes()) {
    throw CutError(ErrorCode::kInvalidArgument,
                   "edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") references an unknown node");
  }
  if (u == v) {
    throw CutError(ErrorCode::kInvalidArgument,
                   "self-loop at node " + std::to_string(u));
  }
  check_weight(weight, "edge");
  if (has_edge(u, v)) {
    throw CutError(ErrorCode::kInvalidArgument,
                   "duplicate edge (" + std::to_string(u) + "," +
                       std::to_string(v) + ")");
  }
  const std::uint64_t k =
      directed_ ? key(u, v) : key(std::min(u, v), std::max(u, v));
  edge_keys_.insert(std::lower_bound(edge_keys_.begin(), edge_keys_.end(), k),
                    k);
  edges_.push_back(Edge{u, v, weight});
  return num_edges() - 1;
}

Graph GraphBuilder::build() const {
  std::int64_t total = 0;
  auto accumulate = [&total](Weight w) {
    if (w.is_inf()) return;
    total += w.value();
    if (total > kMaxWeightTotal) {
      throw CutError(ErrorCode::kBoundsError,
                     "total finite weight exceeds " +
                         std::to_string(kMaxWeightTotal));
    }
  };
  for (Weight w : node_weight_) accumulate(w);
  for (const Edge& e : edges_) accumulate(e.weight);

  Graph g;
  g.directed_ = directed_;
  g.node_weight_ = node_weight_;
  g.edges_ = edges_;
  g.out_.assign(node_weight_.size(), {});
  if (directed_) g.in_.assign(node_weight_.size(), {});
  for (EdgeId e = 0; e < num_edges(); ++e) {
    const Edge& ed = edges_[e];
    g.out_[ed.u].push_back(Arc{e, ed.v});
    if (directed_) {
      g.in_[ed.v].push_back(Arc{e, ed.u});
    } else {
      g.out_[ed.v].push_back(Arc{e, ed.u});
    }
  }
  return g;
}

Removal removal_of(const Graph& g, CutKind kind, std::span<const int> members) {
  Removal r;
  if (kind == CutKind::kNode) {
    r.node_removed.assign(g.num_nodes(), 0);
    for (int v : members) r.node_removed.at(v) = 1;
  } else {
    r.edge_removed.assign(g.num_edges(), 0);
    for (int e : members) r.edge_removed.at(e) = 1;
  }
  return r;
}

std::vector<char> reachable(const Graph& g, std::span<const NodeId> from,
                            const Removal& removal, Direction direction) {
  std::vector<char> seen(g.num_nodes(), 0);
  std::deque<NodeId> queue;
  for (NodeId s : from) {
    if (removal.node_gone(s) || seen[s]) continue;
    seen[s] = 1;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop_front();
    const auto arcs =
        direction == Direction::kForward ? g.out_arcs(v) : g.in_arcs(v);
    for (const Arc& a : arcs) {
      if (seen[a.to] || removal.edge_gone(a.edge) || removal.node_gone(a.to)) {
        continue;
      }
      seen[a.to] = 1;
      queue.push_back(a.to);
    }
  }
  return seen;
}

bool path_exists(const Graph& g, NodeId from, NodeId to,
                 const Removal& removal) {
  const NodeId start[] = {from};
  return reachable(g, start, removal)[to] != 0;
}

std::vector<std::vector<NodeId>> components(const Graph& g,
                                            const Removal& removal) {
  std::vector<int> comp(g.num_nodes(), -1);
  std::vector<std::vector<NodeId>> out;
  for (NodeId s = 0; s < g.num_nodes(); ++s) {
    if (comp[s] >= 0 || removal.node_gone(s)) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<NodeId> stack = {s};
    comp[s] = id;
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      auto visit = [&](std::span<const Arc> arcs) {
        for (const Arc& a : arcs) {
          if (comp[a.to] >= 0 || removal.edge_gone(a.edge) ||
              removal.node_gone(a.to)) {
            continue;
          }
          comp[a.to] = id;
          stack.push_back(a.to);
        }
      };
      visit(g.out_arcs(v));
      if (g.directed()) visit(g.in_arcs(v));
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

Weight member_weight(const Graph& g, CutKind kind, int member) {
  return kind == CutKind::kNode ? g.node_weight(member)
                                : g.edge(member).weight;
}

CutSolution make_cut(const Graph& g, CutKind kind, std::vector<int> members,
                     bool feasible) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  CutSolution sol;
  sol.kind = kind;
  for (int m : members) {
    const Weight w = member_weight(g, kind, m);
    if (w.is_inf()) {
      throw CutError(ErrorCode::kInvalidArgument,
                     "cut member " + std::to_string(m) + " has INF weight");
    }
    sol.weight += w.value();
  }
  sol.components = components(g, removal_of(g, kind, members));
  sol.members = std::move(members);
  sol.feasible = feasible;
  return sol;
}

bool cut_less(const CutSolution& a, const CutSolution& b) {
  if (a.weight != b.weight) return a.weight < b.weight;
  return a.members < b.members;
}

}  // namespace cutlab
