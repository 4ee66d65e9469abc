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

#ifndef CUTLAB_GRAPH_H_
#define CUTLAB_GRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cutlab/weight.h"

namespace cutlab {

using NodeId = int;
using EdgeId = int;

enum class CutKind { kNode, kEdge };

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  Weight weight{1};
};

// One endpoint view of an edge. For undirected graphs every edge shows up in
// the arc lists of both endpoints.
struct Arc {
  EdgeId edge = 0;
  NodeId to = 0;
};

// Simple graph (no self-loops, no parallel edges) with positive integral node
// and edge weights, either of which may be INF. Immutable once built; edits
// go through GraphBuilder and produce a new value.
class Graph {
 public:
  Graph() = default;

  bool directed() const { return directed_; }
  int num_nodes() const { return static_cast<int>(node_weight_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  bool valid_node(NodeId v) const { return v >= 0 && v < num_nodes(); }

  Weight node_weight(NodeId v) const { return node_weight_[v]; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Weight>& node_weights() const { return node_weight_; }

  // Outgoing arcs (all incident edges when undirected).
  std::span<const Arc> out_arcs(NodeId v) const { return out_[v]; }
  // Incoming arcs (all incident edges when undirected).
  std::span<const Arc> in_arcs(NodeId v) const {
    return directed_ ? std::span<const Arc>(in_[v]) : std::span<const Arc>(out_[v]);
  }

  // Directed graphs match u->v only.
  std::optional<EdgeId> find_edge(NodeId u, NodeId v) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  friend class GraphBuilder;

  bool directed_ = false;
  std::vector<Weight> node_weight_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Arc>> out_;
  std::vector<std::vector<Arc>> in_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(bool directed = false) : directed_(directed) {}
  // Seeds the builder with a copy of `g`.
  explicit GraphBuilder(const Graph& g);

  NodeId add_node(Weight weight = Weight(1));
  NodeId add_nodes(int count, Weight weight = Weight(1));
  // Throws kInvalidArgument on self-loops, duplicates and bad weights.
  EdgeId add_edge(NodeId u, NodeId v, Weight weight = Weight(1));
  bool has_edge(NodeId u, NodeId v) const;
  void set_node_weight(NodeId v, Weight weight);

  int num_nodes() const { return static_cast<int>(node_weight_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  // Throws kBoundsError when the finite weights total more than
  // kMaxWeightTotal.
  Graph build() const;

 private:
  static std::uint64_t key(NodeId u, NodeId v);

  bool directed_;
  std::vector<Weight> node_weight_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> edge_keys_;  // sorted
};

// Elements deleted from a graph. Empty vectors mean nothing removed.
struct Removal {
  std::vector<char> node_removed;
  std::vector<char> edge_removed;

  bool node_gone(NodeId v) const {
    return !node_removed.empty() && node_removed[v];
  }
  bool edge_gone(EdgeId e) const {
    return !edge_removed.empty() && edge_removed[e];
  }
};

Removal removal_of(const Graph& g, CutKind kind, std::span<const int> members);

enum class Direction { kForward, kBackward };

// Nodes reachable from `from` along surviving arcs. Removed start nodes are
// not expanded.
std::vector<char> reachable(const Graph& g, std::span<const NodeId> from,
                            const Removal& removal = {},
                            Direction direction = Direction::kForward);

bool path_exists(const Graph& g, NodeId from, NodeId to,
                 const Removal& removal = {});

// Weakly connected components of the surviving nodes, each sorted, ordered
// by smallest member.
std::vector<std::vector<NodeId>> components(const Graph& g,
                                            const Removal& removal = {});

// Weight of a cut member; node ids for kNode, edge ids for kEdge.
Weight member_weight(const Graph& g, CutKind kind, int member);

struct CutSolution {
  CutKind kind = CutKind::kEdge;
  std::vector<int> members;  // sorted ids
  std::int64_t weight = 0;
  std::vector<std::vector<NodeId>> components;
  bool feasible = false;
};

// Sorts members, sums their weights and fills in the component partition.
// Throws kInvalidArgument if a member is INF.
CutSolution make_cut(const Graph& g, CutKind kind, std::vector<int> members,
                     bool feasible);

// Total order used for tie-breaking: weight first, then the sorted member
// list lexicographically.
bool cut_less(const CutSolution& a, const CutSolution& b);

}  // namespace cutlab

#endif  // CUTLAB_GRAPH_H_
