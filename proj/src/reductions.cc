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


#include "cutlab/reductions.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <sstream>

#include "cutlab/bisection.h"
#include "cutlab/cut_engine.h"
#include "cutlab/error.h"

namespace cutlab {
namespace {

constexpr int kMaxEnumerated = 24;

void check_subset(const std::vector<int>& subset, int num_elements, const char* what) {
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw CutError(ErrorCode::kInvalidArgument, std::string(what) + " repeats an element");
  }
  for (int e : sorted) {
    if (e < 0 || e >= num_elements) {
      throw CutError(ErrorCode::kInvalidArgument,
                     std::string(what) + " has unknown element " + std::to_string(e));
    }
  }
}

// Distinct, in-range ids; anything else is an infeasible encoding.
bool distinct_in_range(const Encoded& ids, int bound) {
  std::vector<int> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  return std::all_of(sorted.begin(), sorted.end(),
                     [&](int id) { return id >= 0 && id < bound; });
}

std::optional<std::int64_t> finite_sum(const Graph& g, CutKind kind, const Encoded& members) {
  const int bound = kind == CutKind::kEdge ? g.num_edges() : g.num_nodes();
  if (!distinct_in_range(members, bound)) return std::nullopt;
  std::int64_t total = 0;
  for (int m : members) {
    Weight w = member_weight(g, kind, m);
    if (w.is_inf()) return std::nullopt;
    total += w.value();
  }
  return total;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

void validate(const SetCoverInstance& sc) {
  if (sc.num_elements < 1 || sc.sets.empty()) {
    throw CutError(ErrorCode::kInvalidArgument, "set cover needs elements and sets");
  }
  if (sc.weights.size() != sc.sets.size()) {
    throw CutError(ErrorCode::kInvalidArgument, "one weight per set");
  }
  std::vector<char> seen(sc.num_elements, 0);
  for (std::size_t i = 0; i < sc.sets.size(); ++i) {
    if (sc.weights[i] < 1) {
      throw CutError(ErrorCode::kInvalidArgument, "set weights must be positive");
    }
    check_subset(sc.sets[i], sc.num_elements, "set");
    for (int e : sc.sets[i]) seen[e] = 1;
  }
  for (int e = 0; e < sc.num_elements; ++e) {
    if (!seen[e]) {
      throw CutError(ErrorCode::kInvalidArgument,
                     "element " + std::to_string(e) + " lies in no set");
    }
  }
}

bool is_cover(const SetCoverInstance& sc, std::span<const int> chosen) {
  std::vector<char> hit(sc.num_elements, 0);
  for (int i : chosen) {
    if (i < 0 || i >= static_cast<int>(sc.sets.size())) return false;
    for (int e : sc.sets[i]) hit[e] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

std::int64_t cover_weight(const SetCoverInstance& sc, std::span<const int> chosen) {
  std::int64_t total = 0;
  for (int i : chosen) total += sc.weights[i];
  return total;
}

std::vector<int> min_weight_set_cover(const SetCoverInstance& sc) {
  validate(sc);
  const int k = static_cast<int>(sc.sets.size());
  if (k > kMaxEnumerated) {
    throw CutError(ErrorCode::kInstanceTooLarge, "too many sets to enumerate");
  }
  std::vector<std::uint64_t> covers(k, 0);
  for (int i = 0; i < k; ++i) {
    for (int e : sc.sets[i]) covers[i] |= std::uint64_t{1} << e;
  }
  // Elements past 64 would overflow the masks; fall back to is_cover there.
  const bool masks = sc.num_elements <= 64;
  const std::uint64_t full =
      sc.num_elements >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << sc.num_elements) - 1;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
    std::int64_t w = 0;
    std::uint64_t hit = 0;
    std::vector<int> chosen;
    for (int i = 0; i < k; ++i) {
      if (mask >> i & 1) {
        w += sc.weights[i];
        hit |= covers[i];
        chosen.push_back(i);
      }
    }
    if (w >= best) continue;
    if (masks ? hit == full : is_cover(sc, chosen)) {
      best = w;
      best_mask = mask;
    }
  }
  std::vector<int> out;
  for (int i = 0; i < k; ++i) {
    if (best_mask >> i & 1) out.push_back(i);
  }
  return out;
}

int CoverInstance::tau() const {
  std::size_t t = 0;
  for (const auto& s : subsets) t = std::max(t, s.size());
  return static_cast<int>(t);
}

void validate(const CoverInstance& c) {
  if (c.num_elements < 0 || c.param < 0) {
    throw CutError(ErrorCode::kInvalidArgument, "negative cover parameter");
  }
  for (const auto& s : c.subsets) {
    if (s.empty()) throw CutError(ErrorCode::kInvalidArgument, "empty subset");
    check_subset(s, c.num_elements, "subset");
  }
}

int fully_covered(const CoverInstance& c, std::span<const int> elements) {
  std::vector<char> in(c.num_elements, 0);
  for (int e : elements) {
    if (e >= 0 && e < c.num_elements) in[e] = 1;
  }
  int count = 0;
  for (const auto& s : c.subsets) {
    if (std::all_of(s.begin(), s.end(), [&](int e) { return in[e] != 0; })) ++count;
  }
  return count;
}

int fully_covered_mask(const CoverInstance& c, std::uint64_t element_mask) {
  int count = 0;
  for (const auto& s : c.subsets) {
    if (std::all_of(s.begin(), s.end(), [&](int e) { return element_mask >> e & 1; })) ++count;
  }
  return count;
}

CoverChoice set_min_cover(const CoverInstance& c) {
  validate(c);
  const int m1 = static_cast<int>(c.subsets.size());
  if (c.param > m1) throw CutError(ErrorCode::kInvalidArgument, "param exceeds |C|");
  if (m1 > kMaxEnumerated || c.num_elements > 64) {
    throw CutError(ErrorCode::kInstanceTooLarge, "too many subsets to enumerate");
  }
  CoverChoice best{{}, std::numeric_limits<int>::max()};
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m1); ++mask) {
    if (std::popcount(mask) != c.param) continue;
    std::uint64_t u = 0;
    for (int i = 0; i < m1; ++i) {
      if (mask >> i & 1) {
        for (int e : c.subsets[i]) u |= std::uint64_t{1} << e;
      }
    }
    const int size = std::popcount(u);
    if (size < best.value) {
      best.value = size;
      best.chosen.clear();
      for (int i = 0; i < m1; ++i) {
        if (mask >> i & 1) best.chosen.push_back(i);
      }
    }
  }
  return best;
}

CoverChoice set_max_cover(const CoverInstance& c) {
  validate(c);
  if (c.param > c.num_elements) {
    throw CutError(ErrorCode::kInvalidArgument, "param exceeds the ground set");
  }
  if (c.num_elements > kMaxEnumerated) {
    throw CutError(ErrorCode::kInstanceTooLarge, "ground set too large to enumerate");
  }
  CoverChoice best{{}, -1};
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << c.num_elements); ++mask) {
    if (std::popcount(mask) != c.param) continue;
    const int value = fully_covered_mask(c, mask);
    if (value > best.value) {
      best.value = value;
      best.chosen.clear();
      for (int e = 0; e < c.num_elements; ++e) {
        if (mask >> e & 1) best.chosen.push_back(e);
      }
    }
  }
  return best;
}

CoverInstance inverse_k_subgraph(const Graph& g, int m) {
  CoverInstance c;
  c.num_elements = g.num_nodes();
  c.param = m;
  for (const Edge& e : g.edges()) c.subsets.push_back(sorted({e.u, e.v}));
  validate(c);
  return c;
}

CoverInstance square_collection(const CoverInstance& c, std::size_t limit) {
  validate(c);
  const std::size_t m1 = c.subsets.size();
  if (m1 != 0 && m1 > limit / m1) {
    throw CutError(ErrorCode::kSizeBoundExceeded,
                   "squared collection would hold " + std::to_string(m1) + "^2 subsets");
  }
  CoverInstance out;
  out.num_elements = c.num_elements;
  out.param = c.param;
  out.subsets.reserve(m1 * m1);
  for (const auto& a : c.subsets) {
    for (const auto& b : c.subsets) {
      std::vector<int> u = a;
      u.insert(u.end(), b.begin(), b.end());
      std::sort(u.begin(), u.end());
      u.erase(std::unique(u.begin(), u.end()), u.end());
      out.subsets.push_back(std::move(u));
    }
  }
  return out;
}

std::int64_t interdicted_flow(const InterdictionInstance& inst, std::span<const int> blocked) {
  const Graph& g = inst.graph;
  std::vector<char> gone(g.num_edges(), 0);
  for (int a : blocked) {
    if (a < 0 || a >= g.num_edges()) {
      throw CutError(ErrorCode::kInvalidArgument, "unknown arc " + std::to_string(a));
    }
    gone[a] = 1;
  }
  CutProblem p;
  p.num_nodes = g.num_nodes();
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (gone[e]) continue;
    const Edge& ed = g.edge(e);
    p.arcs.push_back(FlowArc{ed.u, ed.v, ed.weight, e, !g.directed()});
  }
  p.sources = {inst.source};
  p.sinks = {inst.sink};
  return max_flow_value(p);
}

bool ValueRelation::holds(std::int64_t source, std::int64_t target) const {
  const std::int64_t slack = target - scale * source;
  return slack >= slack_min && slack <= slack_max;
}

Verdict verify_certificate(const ReductionCertificate& cert, const Encoded& source_solution,
                           const Encoded& target_solution, bool optimal_pair) {
  Verdict v;
  auto fail = [&](std::string msg) {
    v.ok = false;
    v.violations.push_back(cert.reduction + ": " + std::move(msg));
  };
  const auto sv = cert.source_value(source_solution);
  const auto tv = cert.target_value(target_solution);
  if (!sv) fail("source solution infeasible");
  if (!tv) fail("target solution infeasible");

  const Encoded image = cert.forward(source_solution);
  const auto fv = cert.target_value(image);
  if (!fv) {
    fail("forward image of the source solution is infeasible");
  } else if (sv && !cert.relation.holds(*sv, *fv)) {
    std::ostringstream os;
    os << "forward image has value " << *fv << ", relation allows "
       << cert.relation.scale * *sv + cert.relation.slack_min << ".."
       << cert.relation.scale * *sv + cert.relation.slack_max;
    fail(os.str());
  }

  const Encoded back = cert.backward(target_solution);
  const auto bv = cert.source_value(back);
  if (!bv) {
    fail("backward image of the target solution is infeasible");
  } else if (tv && *tv < cert.relation.scale * *bv + cert.relation.slack_min) {
    std::ostringstream os;
    os << "backward image has value " << *bv << ", worse than target value " << *tv
       << " allows";
    fail(os.str());
  }

  if (optimal_pair && sv && tv && !cert.relation.holds(*sv, *tv)) {
    std::ostringstream os;
    os << "optimal values " << *sv << " and " << *tv << " break the relation";
    fail(os.str());
  }
  return v;
}

namespace {

// Shared bookkeeping of the two set-cover gadgets.
ReductionCertificate setcover_certificate(const SetCoverInstance& sc, const SetCoverGadget& gd,
                                          std::string name, std::int64_t scale,
                                          bool both_sides) {
  ReductionCertificate cert;
  cert.reduction = std::move(name);
  cert.relation = ValueRelation{scale, 0, scale - 1};
  const int k = static_cast<int>(sc.sets.size());
  cert.source_value = [sc, k](const Encoded& chosen) -> std::optional<std::int64_t> {
    if (!distinct_in_range(chosen, k) || !is_cover(sc, chosen)) return std::nullopt;
    return cover_weight(sc, chosen);
  };
  const CpmcInstance inst = gd.instance;
  cert.target_value = [inst](const Encoded& members) -> std::optional<std::int64_t> {
    auto total = finite_sum(inst.graph, inst.mode, members);
    if (!total || !cut_is_feasible(inst, members)) return std::nullopt;
    return total;
  };
  cert.forward = [gd, k, both_sides](const Encoded& chosen) {
    std::vector<char> in(k, 0);
    for (int i : chosen) {
      if (i >= 0 && i < k) in[i] = 1;
    }
    Encoded cut;
    for (int i = 0; i < k; ++i) {
      if (in[i]) cut.push_back(gd.set_edge[i]);
    }
    for (std::size_t e = 0; e < gd.incidence_set.size(); ++e) {
      for (std::size_t j = 0; j < gd.incidence_set[e].size(); ++j) {
        if (in[gd.incidence_set[e][j]]) continue;
        cut.push_back(gd.to_right[e][j]);
        if (both_sides) cut.push_back(gd.from_left[e][j]);
      }
    }
    return sorted(std::move(cut));
  };
  cert.backward = [gd, k](const Encoded& members) {
    Encoded chosen;
    for (int i = 0; i < k; ++i) {
      if (std::find(members.begin(), members.end(), gd.set_edge[i]) != members.end()) {
        chosen.push_back(i);
      }
    }
    return chosen;
  };
  return cert;
}

}  // namespace

SetCoverGadget reduce_setcover_to_directed_cpmec(const SetCoverInstance& sc) {
  validate(sc);
  const int n1 = sc.num_elements;
  const int k = static_cast<int>(sc.sets.size());
  const std::int64_t unit = static_cast<std::int64_t>(n1) * k;

  GraphBuilder b(true);
  const NodeId s1 = b.add_node();
  const NodeId s2 = b.add_node();
  const NodeId t = b.add_node();
  SetCoverGadget gd;
  std::vector<NodeId> start(k), end(k);
  for (int i = 0; i < k; ++i) {
    start[i] = b.add_node();
    end[i] = b.add_node();
    gd.set_edge.push_back(b.add_edge(start[i], end[i], Weight(sc.weights[i] * unit)));
    b.add_edge(t, start[i], Weight::inf());
  }
  gd.to_right.resize(n1);
  gd.from_left.resize(n1);
  gd.incidence_set.resize(n1);
  NodeId prev = s1;
  for (int e = 0; e < n1; ++e) {
    const NodeId left = b.add_node();
    b.add_edge(prev, left, Weight::inf());
    std::vector<NodeId> mids;
    for (int i = 0; i < k; ++i) {
      if (std::find(sc.sets[i].begin(), sc.sets[i].end(), e) == sc.sets[i].end()) continue;
      mids.push_back(b.add_node());
      gd.incidence_set[e].push_back(i);
    }
    const NodeId right = b.add_node();
    for (std::size_t j = 0; j < mids.size(); ++j) {
      gd.from_left[e].push_back(b.add_edge(left, mids[j], Weight(1)));
      gd.to_right[e].push_back(b.add_edge(mids[j], right, Weight(1)));
      b.add_edge(end[gd.incidence_set[e][j]], mids[j], Weight::inf());
    }
    prev = right;
  }
  b.add_edge(prev, s2, Weight::inf());

  gd.instance.graph = b.build();
  gd.instance.source = s1;
  gd.instance.partners = {s2};
  gd.instance.destinations = {t};
  gd.instance.mode = CutKind::kEdge;
  gd.instance.budget = unit * sc.budget + unit - 1;
  gd.certificate = setcover_certificate(sc, gd, "setcover->directed-cpmec", unit, false);
  return gd;
}

SetCoverGadget reduce_setcover_to_multipartner_cpmec(const SetCoverInstance& sc,
                                                     std::int64_t scale) {
  validate(sc);
  const int n1 = sc.num_elements;
  const int k = static_cast<int>(sc.sets.size());
  // An unchosen set node costs both of its gadget-set edges, so the slack
  // can reach 2(n1*k - n1); the set edges must outweigh that.
  if (scale == 0) scale = 2 * static_cast<std::int64_t>(n1) * k;
  if (scale < 1) throw CutError(ErrorCode::kInvalidArgument, "scale must be positive");

  GraphBuilder b(false);
  const NodeId s1 = b.add_node();
  const NodeId t = b.add_node();
  SetCoverGadget gd;
  std::vector<NodeId> tail(k), head(k);
  for (int i = 0; i < k; ++i) {
    tail[i] = b.add_node();
    head[i] = b.add_node();
    gd.set_edge.push_back(b.add_edge(tail[i], head[i], Weight(sc.weights[i] * scale)));
    b.add_edge(t, tail[i], Weight::inf());
  }
  gd.to_right.resize(n1);
  gd.from_left.resize(n1);
  gd.incidence_set.resize(n1);
  std::vector<NodeId> partners;
  for (int e = 0; e < n1; ++e) {
    const NodeId left = b.add_node();
    // Every left end hangs off s1, so each right end has to reach s1 through
    // its own gadget.
    b.add_edge(s1, left, Weight::inf());
    std::vector<NodeId> mids;
    for (int i = 0; i < k; ++i) {
      if (std::find(sc.sets[i].begin(), sc.sets[i].end(), e) == sc.sets[i].end()) continue;
      mids.push_back(b.add_node());
      gd.incidence_set[e].push_back(i);
    }
    const NodeId right = b.add_node();
    for (std::size_t j = 0; j < mids.size(); ++j) {
      gd.from_left[e].push_back(b.add_edge(left, mids[j], Weight(1)));
      gd.to_right[e].push_back(b.add_edge(mids[j], right, Weight(1)));
      b.add_edge(head[gd.incidence_set[e][j]], mids[j], Weight::inf());
    }
    partners.push_back(left);
    partners.push_back(right);
  }

  gd.instance.graph = b.build();
  gd.instance.source = s1;
  gd.instance.partners = partners;
  gd.instance.destinations = {t};
  gd.instance.mode = CutKind::kEdge;
  gd.instance.budget = scale * sc.budget + scale - 1;
  gd.certificate = setcover_certificate(sc, gd, "setcover->multipartner-cpmec", scale, true);
  return gd;
}

BisectionTmec reduce_bisection_to_tmec(const Graph& g) {
  if (g.directed()) throw CutError(ErrorCode::kInvalidArgument, "bisection input is undirected");
  const int n = g.num_nodes();
  if (n % 2 != 0) {
    throw CutError(ErrorCode::kOddOrder, "bisection needs an even node count, got " +
                                             std::to_string(n));
  }
  for (const Edge& e : g.edges()) {
    if (e.weight != Weight(1)) {
      throw CutError(ErrorCode::kInvalidArgument, "bisection input needs unit edge costs");
    }
  }
  const std::int64_t big = static_cast<std::int64_t>(n) * n;
  GraphBuilder b(g);
  const NodeId a = b.add_node();
  std::vector<EdgeId> a_edge(n);
  for (NodeId v = 0; v < n; ++v) a_edge[v] = b.add_edge(a, v, Weight(big));

  BisectionTmec out;
  TmcInstance& inst = out.instance;
  inst.graph = b.build();
  inst.client = a;
  inst.services.resize(n);
  std::iota(inst.services.begin(), inst.services.end(), 0);
  inst.threshold = n / 2;
  inst.mode = CutKind::kEdge;

  ReductionCertificate& cert = out.certificate;
  cert.reduction = "bisection->tmec";
  const std::int64_t offset = big * n / 2;
  cert.relation = ValueRelation{1, offset, offset};
  cert.source_value = [g, n](const Encoded& side0) -> std::optional<std::int64_t> {
    if (static_cast<int>(side0.size()) != n / 2 || !distinct_in_range(side0, n)) {
      return std::nullopt;
    }
    std::vector<char> side(n, 1);
    for (int v : side0) side[v] = 0;
    return bisection_weight(g, side);
  };
  cert.target_value = [inst](const Encoded& members) -> std::optional<std::int64_t> {
    auto total = finite_sum(inst.graph, CutKind::kEdge, members);
    if (!total || disconnected_services(inst, members) < inst.threshold) return std::nullopt;
    return total;
  };
  cert.forward = [g, a_edge, n](const Encoded& side0) {
    std::vector<char> in(n, 0);
    for (int v : side0) {
      if (v >= 0 && v < n) in[v] = 1;
    }
    Encoded cut;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (in[g.edge(e).u] != in[g.edge(e).v]) cut.push_back(e);
    }
    for (int v = 0; v < n; ++v) {
      if (in[v]) cut.push_back(a_edge[v]);
    }
    return sorted(std::move(cut));
  };
  cert.backward = [inst, n](const Encoded& members) {
    const Graph& h = inst.graph;
    std::vector<int> valid;
    for (int m : members) {
      if (m >= 0 && m < h.num_edges()) valid.push_back(m);
    }
    const NodeId from[] = {inst.client};
    auto seen = reachable(h, from, removal_of(h, CutKind::kEdge, valid));
    Encoded side0;
    for (int v = 0; v < n && static_cast<int>(side0.size()) < n / 2; ++v) {
      if (!seen[v]) side0.push_back(v);
    }
    return side0;
  };
  return out;
}

CoverInterdiction reduce_maxcover_to_interdiction(const CoverInstance& c) {
  validate(c);
  const int n = c.num_elements;
  const int m1 = static_cast<int>(c.subsets.size());
  GraphBuilder b(true);
  const NodeId u = b.add_node();
  const NodeId t = b.add_node();
  CoverInterdiction out;
  std::vector<Weight> cost;
  auto arc = [&](NodeId x, NodeId y, Weight cap, Weight block) {
    EdgeId e = b.add_edge(x, y, cap);
    cost.push_back(block);
    return e;
  };
  std::vector<NodeId> subset_node(m1);
  for (int i = 0; i < m1; ++i) subset_node[i] = b.add_node();
  for (int e = 0; e < n; ++e) {
    const NodeId from = b.add_node();
    const NodeId to = b.add_node();
    arc(u, from, Weight::inf(), Weight::inf());
    out.element_arc.push_back(arc(from, to, Weight::inf(), Weight(1)));
    for (int i = 0; i < m1; ++i) {
      if (std::find(c.subsets[i].begin(), c.subsets[i].end(), e) != c.subsets[i].end()) {
        arc(to, subset_node[i], Weight::inf(), Weight::inf());
      }
    }
  }
  for (int i = 0; i < m1; ++i) arc(subset_node[i], t, Weight(1), Weight::inf());

  InterdictionInstance& inst = out.instance;
  inst.graph = b.build();
  inst.source = u;
  inst.sink = t;
  inst.blocking_cost = std::move(cost);
  inst.budget = c.param;

  ReductionCertificate& cert = out.certificate;
  cert.reduction = "maxcover->interdiction";
  cert.relation = ValueRelation{-1, m1, m1};
  cert.source_value = [c](const Encoded& elems) -> std::optional<std::int64_t> {
    if (static_cast<int>(elems.size()) > c.param || !distinct_in_range(elems, c.num_elements)) {
      return std::nullopt;
    }
    return fully_covered(c, elems);
  };
  cert.target_value = [inst](const Encoded& blocked) -> std::optional<std::int64_t> {
    if (!distinct_in_range(blocked, inst.graph.num_edges())) return std::nullopt;
    std::int64_t spent = 0;
    for (int a : blocked) {
      if (inst.blocking_cost[a].is_inf()) return std::nullopt;
      spent += inst.blocking_cost[a].value();
    }
    if (spent > inst.budget) return std::nullopt;
    return interdicted_flow(inst, blocked);
  };
  const std::vector<EdgeId> element_arc = out.element_arc;
  cert.forward = [element_arc](const Encoded& elems) {
    Encoded arcs;
    for (int e : elems) {
      if (e >= 0 && e < static_cast<int>(element_arc.size())) arcs.push_back(element_arc[e]);
    }
    return sorted(std::move(arcs));
  };
  cert.backward = [element_arc](const Encoded& blocked) {
    Encoded elems;
    for (std::size_t e = 0; e < element_arc.size(); ++e) {
      if (std::find(blocked.begin(), blocked.end(), element_arc[e]) != blocked.end()) {
        elems.push_back(static_cast<int>(e));
      }
    }
    return elems;
  };
  return out;
}

}  // namespace cutlab
