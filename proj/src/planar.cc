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

#include "cutlab/planar.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "cutlab/error.h"
#include "cutlab/min_cut.h"

namespace cutlab {
namespace {

void require_undirected_connected(const Graph& g) {
  if (g.directed()) {
    throw CutError(ErrorCode::kInvalidArgument, "embedding needs an undirected graph");
  }
  if (g.num_nodes() == 0 || components(g).size() != 1) {
    throw CutError(ErrorCode::kInvalidArgument, "embedding needs a connected graph");
  }
}

std::vector<NodeId> dedup(std::vector<NodeId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

NodeId PlanarEmbedding::dart_tail(int dart) const {
  const Edge& e = graph.edge(dart_edge(dart));
  return dart % 2 ? e.v : e.u;
}

NodeId PlanarEmbedding::dart_head(int dart) const {
  const Edge& e = graph.edge(dart_edge(dart));
  return dart % 2 ? e.u : e.v;
}

std::vector<int> PlanarEmbedding::faces_at(NodeId v) const {
  std::vector<int> out;
  for (EdgeId e : rotation[v]) {
    out.push_back(dart_face[dart_of(e, graph.edge(e).u != v)]);
  }
  return out;
}

void trace_faces(PlanarEmbedding& emb) {
  const Graph& g = emb.graph;
  const int darts = 2 * g.num_edges();
  // Position of each dart's edge in the rotation at its tail.
  std::vector<int> pos(darts, -1);
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (emb.rotation[v].size() != g.out_arcs(v).size()) {
      throw CutError(ErrorCode::kInvalidArgument, "rotation does not match degree");
    }
    for (std::size_t i = 0; i < emb.rotation[v].size(); ++i) {
      const EdgeId e = emb.rotation[v][i];
      const Edge& ed = g.edge(e);
      if (ed.u != v && ed.v != v) {
        throw CutError(ErrorCode::kInvalidArgument, "rotation lists a foreign edge");
      }
      pos[dart_of(e, ed.u != v)] = static_cast<int>(i);
    }
  }
  emb.faces.clear();
  emb.dart_face.assign(darts, -1);
  for (int start = 0; start < darts; ++start) {
    if (emb.dart_face[start] >= 0) continue;
    const int id = static_cast<int>(emb.faces.size());
    emb.faces.emplace_back();
    int d = start;
    while (emb.dart_face[d] < 0) {
      emb.dart_face[d] = id;
      emb.faces[id].push_back(d);
      // Reverse dart sits at the head; step to its ccw successor.
      const NodeId h = emb.dart_head(d);
      const auto& rot = emb.rotation[h];
      const EdgeId next = rot[(pos[d ^ 1] + 1) % rot.size()];
      d = dart_of(next, g.edge(next).u != h);
    }
  }
  if (emb.faces.empty()) emb.faces.emplace_back();  // single node
  emb.outer_face = 0;
}

PlanarEmbedding build_embedding(const Graph& g) {
  require_undirected_connected(g);
  using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                       boost::property<boost::vertex_index_t, int>,
                                       boost::property<boost::edge_index_t, int>>;
  using BEdge = boost::graph_traits<BGraph>::edge_descriptor;
  BGraph bg(g.num_nodes());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    boost::add_edge(g.edge(e).u, g.edge(e).v, e, bg);
  }
  std::vector<std::vector<BEdge>> order(g.num_nodes());
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding = order.data());
  if (!planar) throw CutError(ErrorCode::kNotPlanar, "graph is not planar");

  PlanarEmbedding emb;
  emb.graph = g;
  emb.rotation.resize(g.num_nodes());
  const auto index = boost::get(boost::edge_index, bg);
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    for (const BEdge& be : order[v]) emb.rotation[v].push_back(index[be]);
  }
  trace_faces(emb);
  for (std::size_t f = 1; f < emb.faces.size(); ++f) {
    if (emb.faces[f].size() > emb.faces[emb.outer_face].size()) {
      emb.outer_face = static_cast<int>(f);
    }
  }
  return emb;
}

PlanarEmbedding embedding_from_coordinates(const Graph& g, std::span<const double> x,
                                           std::span<const double> y) {
  require_undirected_connected(g);
  if (x.size() != static_cast<std::size_t>(g.num_nodes()) || y.size() != x.size()) {
    throw CutError(ErrorCode::kInvalidArgument, "one coordinate pair per node");
  }
  PlanarEmbedding emb;
  emb.graph = g;
  emb.rotation.resize(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    std::vector<std::pair<double, EdgeId>> around;
    for (const Arc& a : g.out_arcs(v)) {
      around.emplace_back(std::atan2(y[a.to] - y[v], x[a.to] - x[v]), a.edge);
    }
    std::sort(around.begin(), around.end());
    for (const auto& [angle, e] : around) emb.rotation[v].push_back(e);
  }
  trace_faces(emb);
  // Inner faces run clockwise, so the outer one has the largest signed area.
  double best = -1e300;
  for (std::size_t f = 0; f < emb.faces.size(); ++f) {
    double area = 0;
    for (int d : emb.faces[f]) {
      const NodeId a = emb.dart_tail(d), b = emb.dart_head(d);
      area += x[a] * y[b] - x[b] * y[a];
    }
    if (area > best + 1e-9) {
      best = area;
      emb.outer_face = static_cast<int>(f);
    }
  }
  return emb;
}

Weight PerturbedWeights::total(int element) const {
  if (base[element].is_inf()) return Weight::inf();
  return Weight(base[element].value() * scale + epsilon[element]);
}

std::vector<Weight> PerturbedWeights::totals() const {
  std::vector<Weight> out(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) out[i] = total(static_cast<int>(i));
  return out;
}

PerturbedWeights perturb(const Graph& g, CutKind mode) {
  PerturbedWeights pw;
  pw.mode = mode;
  if (mode == CutKind::kEdge) {
    for (const Edge& e : g.edges()) pw.base.push_back(e.weight);
  } else {
    pw.base = g.node_weights();
  }
  const int m = static_cast<int>(pw.base.size());
  std::int64_t sum = 0;
  for (Weight w : pw.base) {
    if (w.is_finite()) sum += w.value();
  }
  // The flow engine accepts capacity totals up to 2^61.
  if (m > 60 || sum + 1 > (std::int64_t{1} << (61 - m))) {
    throw CutError(ErrorCode::kArithmeticBoundExceeded,
                   "perturbation of " + std::to_string(m) + " elements overflows");
  }
  pw.scale = std::int64_t{1} << m;
  for (int i = 0; i < m; ++i) pw.epsilon.push_back(std::int64_t{1} << i);
  return pw;
}

PrincipalCut perturbed_min_cut(const Graph& g, const PerturbedWeights& pw, NodeId v,
                               NodeId t) {
  if (v == t) throw CutError(ErrorCode::kInvalidArgument, "v equals t");
  const NodeId src[] = {v};
  const NodeId dst[] = {t};
  const std::vector<Weight> cap = pw.totals();
  const CutOutcome out = solve_cut_problem(cut_problem_for(g, pw.mode, src, dst, cap));
  PrincipalCut pc;
  pc.members = out.members;
  pc.perturbed_value = out.value;
  pc.unique = out.unique;
  if (!pc.unique) {
    // Node splits can leave pockets whose side is free while the member set
    // is still forced: it is unique iff pinning any member raises the value.
    pc.unique = true;
    for (int m : out.members) {
      std::vector<Weight> pinned = cap;
      pinned[m] = Weight::inf();
      std::int64_t value = 0;
      try {
        value = max_flow_value(cut_problem_for(g, pw.mode, src, dst, pinned));
      } catch (const CutError& e) {
        if (e.code() != ErrorCode::kNoFiniteCut) throw;
        continue;
      }
      if (value == out.value) {
        pc.unique = false;
        break;
      }
    }
  }
  const std::vector<char> seen = reachable(g, src, removal_of(g, pw.mode, out.members));
  for (NodeId x = 0; x < g.num_nodes(); ++x) {
    if (seen[x]) pc.component.push_back(x);
  }
  return pc;
}

std::vector<NodeId> principal_cut_component(const Graph& g, const PerturbedWeights& pw,
                                            NodeId v, NodeId t) {
  return perturbed_min_cut(g, pw, v, t).component;
}

bool hole_free(const Graph& g, std::span<const NodeId> a, std::span<const NodeId> b,
               NodeId t) {
  Removal removal;
  removal.node_removed.assign(g.num_nodes(), 0);
  for (NodeId v : a) removal.node_removed[v] = 1;
  for (NodeId v : b) removal.node_removed[v] = 1;
  for (const auto& comp : components(g, removal)) {
    if (std::find(comp.begin(), comp.end(), t) == comp.end()) return false;
  }
  return true;
}

CutSolution exact_backend(const CpmcInstance& inst) { return solve_cpmc_exact(inst); }

CutSolution solve_2v2_planar_cpmec(const PlanarEmbedding& emb, NodeId s1, NodeId s2,
                                   NodeId s1p, NodeId s2p, const CpmcBackend& backend) {
  const Graph& g = emb.graph;
  const std::vector<NodeId> terms = {s1, s2, s1p, s2p};
  for (NodeId v : terms) {
    if (!g.valid_node(v)) throw CutError(ErrorCode::kInvalidArgument, "bad terminal");
  }
  if (dedup(terms).size() != 4) {
    throw CutError(ErrorCode::kInvalidArgument, "terminals must be distinct");
  }
  CpmcInstance base;
  base.graph = g;
  base.source = s1;
  base.partners = {s2};
  base.destinations = {s1p, s2p};
  base.mode = CutKind::kEdge;
  base.keep_destinations_connected = true;
  CutSolution best = backend(base);

  const std::vector<int> f1 = dedup(emb.faces_at(s1));
  const std::vector<int> f2 = dedup(emb.faces_at(s2));
  std::vector<int> shared;
  std::set_intersection(f1.begin(), f1.end(), f2.begin(), f2.end(),
                        std::back_inserter(shared));
  if (shared.empty()) {
    // Grow from each s̄ on a face of s2 towards s2 both ways round the face;
    // the arc joins the source side and the best completion wins.
    for (int f : f2) {
      std::vector<NodeId> walk;
      for (int d : emb.faces[f]) walk.push_back(emb.dart_tail(d));
      const int len = static_cast<int>(walk.size());
      for (int j = 0; j < len; ++j) {
        if (walk[j] != s2) continue;
        for (int i = 0; i < len; ++i) {
          if (walk[i] == s2) continue;
          for (int dir : {+1, -1}) {
            std::vector<NodeId> arc;
            bool blocked = false;
            for (int k = i; k != j; k = ((k + dir) % len + len) % len) {
              if (walk[k] == s1p || walk[k] == s2p) blocked = true;
              if (walk[k] != s1 && walk[k] != s2) arc.push_back(walk[k]);
            }
            if (blocked) continue;
            CpmcInstance cand = base;
            for (NodeId x : arc) cand.partners.push_back(x);
            cand.partners = dedup(cand.partners);
            const CutSolution sol = backend(cand);
            if (sol.feasible && (!best.feasible || cut_less(sol, best))) best = sol;
          }
        }
      }
    }
  }
  if (!best.feasible) {
    throw CutError(ErrorCode::kInfeasible, "no cut splits the two pairs");
  }
  return best;
}

DiversionReduction reduce_network_diversion(const Graph& g, NodeId s, NodeId t,
                                            NodeId u, NodeId v) {
  if (g.directed()) throw CutError(ErrorCode::kInvalidArgument, "needs undirected graph");
  for (NodeId x : {s, t, u, v}) {
    if (!g.valid_node(x)) throw CutError(ErrorCode::kInvalidArgument, "bad node");
  }
  if (s == t) throw CutError(ErrorCode::kInvalidArgument, "s equals t");
  const auto e = g.find_edge(u, v);
  if (!e) throw CutError(ErrorCode::kInvalidArgument, "diversion edge not in graph");

  DiversionReduction red;
  red.diversion_edge = *e;
  GraphBuilder b;
  for (NodeId x = 0; x < g.num_nodes(); ++x) b.add_node(g.node_weight(x));
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    if (id == *e) continue;
    b.add_edge(g.edge(id).u, g.edge(id).v, g.edge(id).weight);
    red.edge_origin.push_back(id);
  }
  red.residual = b.build();

  for (auto [a, c] : {std::pair{u, v}, std::pair{v, u}}) {
    // s stays with a, t stays with c, and the two sides split.
    const std::vector<NodeId> side_s = dedup({s, a});
    const std::vector<NodeId> side_t = dedup({t, c});
    std::vector<NodeId> both;
    std::set_intersection(side_s.begin(), side_s.end(), side_t.begin(), side_t.end(),
                          std::back_inserter(both));
    if (!both.empty() || (side_s.size() == 1 && side_t.size() == 1)) continue;
    CpmcInstance inst;
    inst.graph = red.residual;
    inst.mode = CutKind::kEdge;
    if (side_s.size() == 2) {
      inst.source = s;
      inst.partners = {a};
      inst.destinations = side_t;
      inst.keep_destinations_connected = side_t.size() == 2;
    } else {
      inst.source = t;
      inst.partners = {c};
      inst.destinations = {s};
    }
    red.orientations.push_back(std::move(inst));
  }
  return red;
}

bool diversion_holds(const Graph& g, NodeId s, NodeId t, EdgeId diversion,
                     std::span<const int> cut) {
  Removal removal = removal_of(g, CutKind::kEdge, cut);
  if (!path_exists(g, s, t, removal)) return false;
  removal.edge_removed[diversion] = 1;
  return !path_exists(g, s, t, removal);
}

CutSolution solve_network_diversion(const Graph& g, NodeId s, NodeId t, NodeId u,
                                    NodeId v, const CpmcBackend& backend) {
  const DiversionReduction red = reduce_network_diversion(g, s, t, u, v);
  std::vector<CutSolution> found;
  if (red.orientations.empty() && dedup({s, t}) == dedup({u, v})) {
    const NodeId src[] = {s};
    const NodeId dst[] = {t};
    found.push_back(min_st_edge_cut(red.residual, src, dst));
  }
  for (const CpmcInstance& inst : red.orientations) {
    CutSolution sol = backend(inst);
    if (sol.feasible) found.push_back(std::move(sol));
  }
  std::optional<CutSolution> best;
  for (const CutSolution& sol : found) {
    std::vector<int> members;
    for (int m : sol.members) members.push_back(red.edge_origin[m]);
    CutSolution mapped = make_cut(g, CutKind::kEdge, std::move(members), true);
    if (!best || cut_less(mapped, *best)) best = std::move(mapped);
  }
  if (!best) throw CutError(ErrorCode::kInfeasible, "no diversion cut exists");
  return *best;
}

LcspReduction reduce_two_node_lcsp(const PlanarEmbedding& emb, NodeId p, NodeId q,
                                   NodeId above_node, NodeId below_node) {
  const Graph& g = emb.graph;
  for (NodeId x : {p, q, above_node, below_node}) {
    if (!g.valid_node(x)) throw CutError(ErrorCode::kInvalidArgument, "bad node");
  }
  if (p == q || above_node == below_node || above_node == p || above_node == q ||
      below_node == p || below_node == q) {
    throw CutError(ErrorCode::kInvalidArgument, "endpoints and side nodes must differ");
  }
  const std::vector<int>& outer = emb.faces[emb.outer_face];
  const int len = static_cast<int>(outer.size());
  int ip = -1, iq = -1, seen_p = 0, seen_q = 0;
  for (int i = 0; i < len; ++i) {
    if (emb.dart_tail(outer[i]) == p) ip = i, ++seen_p;
    if (emb.dart_tail(outer[i]) == q) iq = i, ++seen_q;
  }
  if (ip < 0 || iq < 0) {
    throw CutError(ErrorCode::kInvalidArgument, "endpoints must lie on the outer face");
  }
  // A cut vertex meets the outer face in several corners and the boundary
  // split would depend on which one the path closes through.
  if (seen_p > 1 || seen_q > 1) {
    throw CutError(ErrorCode::kInvalidArgument,
                   "endpoint meets the outer face more than once");
  }

  // Dual nodes: faces, with the outer face split in two. The boundary run
  // from q round to p is the above side.
  const int num_faces = static_cast<int>(emb.faces.size());
  LcspReduction red;
  red.face_above = emb.outer_face;
  red.face_below = num_faces;
  std::vector<int> side(2 * g.num_edges());
  for (std::size_t d = 0; d < side.size(); ++d) side[d] = emb.dart_face[d];
  for (int k = iq; k != ip; k = (k + 1) % len) side[outer[k]] = red.face_above;
  for (int k = ip; k != iq; k = (k + 1) % len) side[outer[k]] = red.face_below;

  GraphBuilder b;
  b.add_nodes(num_faces + 1);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const int f1 = side[dart_of(e, false)], f2 = side[dart_of(e, true)];
    if (f1 == f2) continue;
    if (!b.has_edge(f1, f2)) {
      b.add_edge(f1, f2, g.edge(e).weight);
      red.primal_edge.push_back(e);
      continue;
    }
    const NodeId mid = b.add_node();
    b.add_edge(f1, mid, g.edge(e).weight);
    red.primal_edge.push_back(e);
    b.add_edge(mid, f2, Weight::inf());
    red.primal_edge.push_back(-1);
  }

  auto faces_of = [&](NodeId x) {
    std::vector<NodeId> out;
    for (EdgeId e : emb.rotation[x]) out.push_back(side[dart_of(e, g.edge(e).u != x)]);
    return dedup(out);
  };
  std::vector<NodeId> partners = faces_of(above_node);
  std::vector<NodeId> dests = faces_of(below_node);
  dests.push_back(red.face_below);
  dests = dedup(dests);
  for (NodeId f : partners) {
    if (std::binary_search(dests.begin(), dests.end(), f) ||
        std::binary_search(dests.begin(), dests.end(), red.face_above)) {
      throw CutError(ErrorCode::kInfeasible, "side nodes share a face across the path");
    }
  }
  partners.erase(std::remove(partners.begin(), partners.end(), red.face_above),
                 partners.end());
  if (partners.empty()) {
    // Constraint already implied; a tied stand-in keeps the instance valid.
    const NodeId anchor = b.add_node();
    b.add_edge(red.face_above, anchor, Weight::inf());
    red.primal_edge.push_back(-1);
    partners.push_back(anchor);
  }
  red.instance.graph = b.build();
  red.instance.source = red.face_above;
  red.instance.partners = std::move(partners);
  red.instance.destinations = std::move(dests);
  red.instance.mode = CutKind::kEdge;
  red.instance.keep_destinations_connected = true;
  return red;
}

LcspPath solve_two_node_lcsp(const PlanarEmbedding& emb, NodeId p, NodeId q,
                             NodeId above_node, NodeId below_node,
                             const CpmcBackend& backend) {
  const LcspReduction red = reduce_two_node_lcsp(emb, p, q, above_node, below_node);
  const CutSolution sol = backend(red.instance);
  if (!sol.feasible) throw CutError(ErrorCode::kInfeasible, "no path meets the side constraints");
  const Graph& g = emb.graph;
  std::multimap<NodeId, EdgeId> incident;
  LcspPath path;
  for (int m : sol.members) {
    const EdgeId e = red.primal_edge[m];
    if (e < 0) continue;
    incident.emplace(g.edge(e).u, e);
    incident.emplace(g.edge(e).v, e);
    path.weight += g.edge(e).weight.value();
  }
  std::vector<char> used(g.num_edges(), 0);
  NodeId at = p;
  path.nodes.push_back(p);
  while (at != q) {
    EdgeId step = -1;
    for (auto [it, end] = incident.equal_range(at); it != end; ++it) {
      if (!used[it->second]) step = it->second;
    }
    if (step < 0) throw CutError(ErrorCode::kInvalidArgument, "dual cut is not a p-q path");
    used[step] = 1;
    path.edges.push_back(step);
    at = g.edge(step).u == at ? g.edge(step).v : g.edge(step).u;
    path.nodes.push_back(at);
  }
  if (path.edges.size() * 2 != incident.size()) {
    throw CutError(ErrorCode::kInvalidArgument, "dual cut is not a simple path");
  }
  return path;
}

}  // namespace cutlab
