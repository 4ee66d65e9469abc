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

#ifndef CUTLAB_PLANAR_H_
#define CUTLAB_PLANAR_H_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cutlab/cpmc.h"
#include "cutlab/cut_engine.h"
#include "cutlab/graph.h"

namespace cutlab {

// Dart 2e runs edge(e).u -> edge(e).v, dart 2e+1 the other way.
inline int dart_of(EdgeId e, bool reversed) { return 2 * e + (reversed ? 1 : 0); }
inline EdgeId dart_edge(int dart) { return dart / 2; }

struct PlanarEmbedding {
  Graph graph;
  // Incident edges of each node in counterclockwise order.
  std::vector<std::vector<EdgeId>> rotation;
  // Boundary walks as dart sequences; each face lies right of its darts.
  std::vector<std::vector<int>> faces;
  std::vector<int> dart_face;
  int outer_face = 0;

  NodeId dart_tail(int dart) const;
  NodeId dart_head(int dart) const;
  // Faces meeting at v, one entry per corner.
  std::vector<int> faces_at(NodeId v) const;
};

// Planarity test and embedding. The longest face is taken as outer.
// Throws kNotPlanar, kInvalidArgument (directed or disconnected input).
PlanarEmbedding build_embedding(const Graph& g);

// Embedding induced by straight-line coordinates; the outer face is the one
// walked counterclockwise. Planarity of the drawing is not checked.
PlanarEmbedding embedding_from_coordinates(const Graph& g,
                                           std::span<const double> x,
                                           std::span<const double> y);

// Fills faces, dart_face and outer_face from the rotation. Exposed for
// callers who build rotations themselves.
void trace_faces(PlanarEmbedding& emb);

struct PerturbedWeights {
  CutKind mode = CutKind::kEdge;
  std::vector<Weight> base;
  std::int64_t scale = 1;
  std::vector<std::int64_t> epsilon;

  Weight total(int element) const;
  std::vector<Weight> totals() const;
};

// scale = 2^m, epsilon_i = 2^i for element i. INF elements stay INF.
// Throws kArithmeticBoundExceeded when the totals could overflow.
PerturbedWeights perturb(const Graph& g, CutKind mode);

struct PrincipalCut {
  std::vector<int> members;      // cut elements
  std::vector<NodeId> component; // sorted, contains v
  std::int64_t perturbed_value = 0;
  bool unique = false;
};

PrincipalCut perturbed_min_cut(const Graph& g, const PerturbedWeights& pw,
                               NodeId v, NodeId t);

std::vector<NodeId> principal_cut_component(const Graph& g,
                                            const PerturbedWeights& pw,
                                            NodeId v, NodeId t);

// True when every component of g minus (a ∪ b) contains t.
bool hole_free(const Graph& g, std::span<const NodeId> a,
               std::span<const NodeId> b, NodeId t);

using CpmcBackend = std::function<CutSolution(const CpmcInstance&)>;

CutSolution exact_backend(const CpmcInstance& inst);

// Minimum edge cut splitting {s1,s2} from {s1p,s2p} with both pairs kept
// connected. Throws kInfeasible.
CutSolution solve_2v2_planar_cpmec(const PlanarEmbedding& emb, NodeId s1,
                                   NodeId s2, NodeId s1p, NodeId s2p,
                                   const CpmcBackend& backend = exact_backend);

struct DiversionReduction {
  // Instances live on g minus the diversion edge, one per endpoint
  // orientation. Empty when s and t are the diversion endpoints.
  std::vector<CpmcInstance> orientations;
  Graph residual;                  // g minus the diversion edge
  std::vector<EdgeId> edge_origin; // residual edge -> g edge
  EdgeId diversion_edge = 0;
};

DiversionReduction reduce_network_diversion(const Graph& g, NodeId s, NodeId t,
                                            NodeId u, NodeId v);

// Cheapest edge set (ids of g) after whose removal s and t are still
// connected and every s-t path uses the diversion edge. Throws kInfeasible.
CutSolution solve_network_diversion(const Graph& g, NodeId s, NodeId t,
                                    NodeId u, NodeId v,
                                    const CpmcBackend& backend = exact_backend);

bool diversion_holds(const Graph& g, NodeId s, NodeId t, EdgeId diversion,
                     std::span<const int> cut);

struct LcspReduction {
  CpmcInstance instance;            // on the split dual
  std::vector<EdgeId> primal_edge;  // dual edge -> primal edge, -1 if none
  int face_above = 0;
  int face_below = 0;
};

// p, q on the outer face. Above means left of the directed p->q path.
// Throws kInvalidArgument on bad endpoints and kInfeasible when the side
// constraints contradict the boundary.
LcspReduction reduce_two_node_lcsp(const PlanarEmbedding& emb, NodeId p,
                                   NodeId q, NodeId above_node,
                                   NodeId below_node);

struct LcspPath {
  std::vector<NodeId> nodes;  // p ... q
  std::vector<EdgeId> edges;
  std::int64_t weight = 0;
};

LcspPath solve_two_node_lcsp(const PlanarEmbedding& emb, NodeId p, NodeId q,
                             NodeId above_node, NodeId below_node,
                             const CpmcBackend& backend = exact_backend);

}  // namespace cutlab

#endif  // CUTLAB_PLANAR_H_
