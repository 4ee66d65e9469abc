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


#include "cutlab/generate.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>

#include "cutlab/error.h"
#include "cutlab/planar.h"
#include "cutlab/reductions.h"

namespace cutlab {
namespace {

using nlohmann::json;
using Rng = std::mt19937_64;

constexpr std::array<std::string_view, 7> kGenNames = {"graph", "planar", "cpmc", "tmc",
                                                       "setcover", "cover", "interdiction"};

[[noreturn]] void bad_params(const std::string& what) {
  throw CutError(ErrorCode::kInvalidParams, what);
}

// Library distributions differ across standard libraries; these do not.
std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

bool coin(Rng& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

template <typename T>
void shuffle(Rng& rng, std::vector<T>& v) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(i) - 1))]);
  }
}

Weight random_weight(Rng& rng, const GenParams& p) {
  return Weight(uniform(rng, p.min_weight, p.max_weight));
}

void check_common(const GenParams& p) {
  if (p.n < 1 || p.n > (1 << 20)) bad_params("n must lie in [1, 2^20]");
  if (p.density < 0 || p.density > 1) bad_params("density must lie in [0, 1]");
  if (p.min_weight < 1 || p.max_weight < p.min_weight) bad_params("bad weight range");
  if (static_cast<std::int64_t>(p.max_weight) * p.n * p.n > kMaxWeightTotal) {
    bad_params("weights may exceed the arithmetic bound");
  }
}

// Random spanning tree over `nodes` plus G(n, p) extra edges among them.
void connected_edges(Rng& rng, GraphBuilder& b, const std::vector<NodeId>& nodes,
                     const GenParams& p) {
  std::vector<NodeId> order = nodes;
  shuffle(rng, order);
  for (std::size_t i = 1; i < order.size(); ++i) {
    const NodeId u = order[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(i) - 1))];
    if (p.directed && coin(rng, 0.5)) {
      b.add_edge(order[i], u, random_weight(rng, p));
    } else {
      b.add_edge(u, order[i], random_weight(rng, p));
    }
  }
  for (NodeId u : nodes) {
    for (NodeId v : nodes) {
      if (u == v || (!p.directed && u > v)) continue;
      if (b.has_edge(u, v) || (!p.directed && b.has_edge(v, u))) continue;
      if (coin(rng, p.density)) b.add_edge(u, v, random_weight(rng, p));
    }
  }
}

Graph random_graph(Rng& rng, const GenParams& p) {
  GraphBuilder b(p.directed);
  b.add_nodes(p.n);
  for (NodeId u = 0; u < p.n; ++u) {
    for (NodeId v = 0; v < p.n; ++v) {
      if (u == v || (!p.directed && u > v)) continue;
      if (coin(rng, p.density)) b.add_edge(u, v, random_weight(rng, p));
    }
  }
  if (p.mode == CutKind::kNode) {
    for (NodeId v = 0; v < p.n; ++v) b.set_node_weight(v, random_weight(rng, p));
  }
  return b.build();
}

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Grid minus random edges. A random spanning tree of the grid always stays,
// so the result is connected.
Graph random_planar(Rng& rng, const GenParams& p, int rows, int cols) {
  std::vector<std::pair<NodeId, NodeId>> grid;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const NodeId v = r * cols + c;
      if (c + 1 < cols) grid.emplace_back(v, v + 1);
      if (r + 1 < rows) grid.emplace_back(v, v + cols);
    }
  }
  std::vector<int> order(grid.size());
  std::iota(order.begin(), order.end(), 0);
  shuffle(rng, order);
  std::vector<int> parent(rows * cols);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<char> keep(grid.size(), 0);
  for (int i : order) {
    const int a = find(parent, grid[i].first);
    const int c = find(parent, grid[i].second);
    if (a != c) {
      parent[a] = c;
      keep[i] = 1;
    } else {
      keep[i] = coin(rng, p.density);
    }
  }
  GraphBuilder b(false);
  b.add_nodes(rows * cols);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (keep[i]) b.add_edge(grid[i].first, grid[i].second, random_weight(rng, p));
  }
  if (p.mode == CutKind::kNode) {
    for (NodeId v = 0; v < rows * cols; ++v) b.set_node_weight(v, random_weight(rng, p));
  }
  Graph g = b.build();
  build_embedding(g);  // re-check; throws kNotPlanar
  return g;
}

std::vector<NodeId> distinct_nodes(Rng& rng, int n, int count) {
  std::vector<NodeId> all(n);
  std::iota(all.begin(), all.end(), 0);
  shuffle(rng, all);
  all.resize(count);
  return all;
}

CpmcInstance random_cpmc(Rng& rng, const GenParams& p) {
  if (p.k < 1 || p.destinations < 1 || p.k + p.destinations + 1 > p.n) {
    bad_params("cpmc needs 1 + k + destinations <= n with k, destinations >= 1");
  }
  GraphBuilder b(p.directed);
  b.add_nodes(p.n);
  std::vector<NodeId> all(p.n);
  std::iota(all.begin(), all.end(), 0);
  connected_edges(rng, b, all, p);
  if (p.mode == CutKind::kNode) {
    for (NodeId v = 0; v < p.n; ++v) b.set_node_weight(v, random_weight(rng, p));
  }
  const std::vector<NodeId> terms = distinct_nodes(rng, p.n, 1 + p.k + p.destinations);
  CpmcInstance c;
  c.graph = b.build();
  c.source = terms[0];
  c.partners.assign(terms.begin() + 1, terms.begin() + 1 + p.k);
  c.destinations.assign(terms.begin() + 1 + p.k, terms.end());
  c.mode = p.mode;
  return c;
}

// Node mode keeps terminals pairwise non-adjacent so every service group
// has a finite cut.
TmcInstance random_tmc(Rng& rng, const GenParams& p) {
  if (p.k < 1 || p.l < 1 || p.l > p.k) bad_params("tmc needs 1 <= l <= k");
  const int inner = p.n - 1 - p.k;
  if (inner < (p.mode == CutKind::kNode ? 1 : 0)) {
    bad_params("tmc needs k + 1 < n in node mode, k + 1 <= n otherwise");
  }
  const std::vector<NodeId> terms = distinct_nodes(rng, p.n, 1 + p.k);
  TmcInstance t;
  t.client = terms[0];
  t.services.assign(terms.begin() + 1, terms.end());
  t.threshold = p.l;
  t.mode = p.mode;
  GraphBuilder b(p.directed);
  b.add_nodes(p.n);
  if (p.mode == CutKind::kEdge) {
    std::vector<NodeId> all(p.n);
    std::iota(all.begin(), all.end(), 0);
    connected_edges(rng, b, all, p);
  } else {
    std::vector<char> terminal(p.n, 0);
    for (NodeId v : terms) terminal[v] = 1;
    std::vector<NodeId> mids;
    for (NodeId v = 0; v < p.n; ++v) {
      if (!terminal[v]) mids.push_back(v);
    }
    connected_edges(rng, b, mids, p);
    for (NodeId s : terms) {
      // One guaranteed attachment, then density-driven extras. Services
      // point away from the client's side when directed.
      const NodeId anchor = mids[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(mids.size()) - 1))];
      auto attach = [&](NodeId m) {
        if (s == t.client || !p.directed) {
          b.add_edge(s, m, random_weight(rng, p));
        } else {
          b.add_edge(m, s, random_weight(rng, p));
        }
      };
      attach(anchor);
      for (NodeId m : mids) {
        if (m != anchor && coin(rng, p.density)) attach(m);
      }
    }
    for (NodeId v = 0; v < p.n; ++v) b.set_node_weight(v, random_weight(rng, p));
  }
  t.graph = b.build();
  return t;
}

SetCoverInstance random_setcover(Rng& rng, const GenParams& p) {
  if (p.k < 1 || p.k > 62) bad_params("setcover needs 1 <= k <= 62");
  SetCoverInstance sc;
  sc.num_elements = p.n;
  sc.sets.assign(p.k, {});
  for (int e = 0; e < p.n; ++e) {
    std::uint64_t mask = 0;
    while (mask == 0) {
      for (int i = 0; i < p.k; ++i) {
        if (coin(rng, p.density)) mask |= std::uint64_t{1} << i;
      }
      if (p.density == 0) mask = std::uint64_t{1} << uniform(rng, 0, p.k - 1);
    }
    for (int i = 0; i < p.k; ++i) {
      if (mask >> i & 1) sc.sets[i].push_back(e);
    }
  }
  for (auto& s : sc.sets) {
    if (s.empty()) s.push_back(static_cast<int>(uniform(rng, 0, p.n - 1)));
    std::sort(s.begin(), s.end());
  }
  std::int64_t total = 0;
  for (int i = 0; i < p.k; ++i) {
    sc.weights.push_back(uniform(rng, p.min_weight, p.max_weight));
    total += sc.weights.back();
  }
  sc.budget = total;
  return sc;
}

CoverInstance random_cover(Rng& rng, const GenParams& p) {
  if (p.k < 1 || p.tau < 1 || p.param < 0) bad_params("cover needs k >= 1, tau >= 1, param >= 0");
  CoverInstance c;
  c.num_elements = p.n;
  c.param = p.param;
  for (int i = 0; i < p.k; ++i) {
    std::vector<int> all(p.n);
    std::iota(all.begin(), all.end(), 0);
    shuffle(rng, all);
    all.resize(static_cast<std::size_t>(uniform(rng, 1, std::min(p.n, p.tau))));
    std::sort(all.begin(), all.end());
    c.subsets.push_back(std::move(all));
  }
  return c;
}

}  // namespace

GenKind gen_kind_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kGenNames.size(); ++i) {
    if (kGenNames[i] == name) return static_cast<GenKind>(i);
  }
  bad_params("unknown generator kind \"" + std::string(name) + "\"");
}

std::string_view gen_kind_name(GenKind kind) { return kGenNames[static_cast<int>(kind)]; }

GenParams gen_params_from_json(const json& j) {
  if (!j.is_object()) bad_params("generator params must be an object");
  GenParams p;
  for (const auto& [key, v] : j.items()) {
    auto as_int = [&, &key = key, &v = v]() {
      if (!v.is_number_integer()) bad_params(key + " must be an integer");
      const std::int64_t x = v.get<std::int64_t>();
      if (x < INT32_MIN || x > INT32_MAX) bad_params(key + " out of range");
      return static_cast<int>(x);
    };
    if (key == "n") p.n = as_int();
    else if (key == "k") p.k = as_int();
    else if (key == "l") p.l = as_int();
    else if (key == "destinations") p.destinations = as_int();
    else if (key == "param") p.param = as_int();
    else if (key == "tau") p.tau = as_int();
    else if (key == "min_weight") p.min_weight = as_int();
    else if (key == "max_weight") p.max_weight = as_int();
    else if (key == "rows") p.rows = as_int();
    else if (key == "cols") p.cols = as_int();
    else if (key == "density") {
      if (!v.is_number()) bad_params("density must be a number");
      p.density = v.get<double>();
    } else if (key == "directed") {
      if (!v.is_boolean()) bad_params("directed must be true or false");
      p.directed = v.get<bool>();
    } else if (key == "mode") {
      if (v != "node" && v != "edge") bad_params("mode must be \"node\" or \"edge\"");
      p.mode = v == "node" ? CutKind::kNode : CutKind::kEdge;
    } else {
      bad_params("unknown generator parameter \"" + key + "\"");
    }
  }
  return p;
}

json gen_params_to_json(const GenParams& p) {
  return {{"n", p.n},
          {"k", p.k},
          {"l", p.l},
          {"destinations", p.destinations},
          {"param", p.param},
          {"tau", p.tau},
          {"density", p.density},
          {"min_weight", p.min_weight},
          {"max_weight", p.max_weight},
          {"directed", p.directed},
          {"mode", cut_kind_name(p.mode)},
          {"rows", p.rows},
          {"cols", p.cols}};
}

InstanceDocument generate_random(GenKind kind, const GenParams& params, std::uint64_t seed) {
  check_common(params);
  Rng rng(seed);
  InstanceDocument doc;
  doc.rng_seed = seed;
  doc.provenance = {{"generator", gen_kind_name(kind)}, {"params", gen_params_to_json(params)}};
  switch (kind) {
    case GenKind::kGraph:
      doc.payload = random_graph(rng, params);
      break;
    case GenKind::kPlanar: {
      if (params.directed) bad_params("planar graphs are undirected");
      int cols = params.cols, rows = params.rows;
      if (cols <= 0) cols = std::max(1, static_cast<int>(std::ceil(std::sqrt(params.n))));
      if (rows <= 0) rows = std::max(1, (params.n + cols - 1) / cols);
      if (static_cast<std::int64_t>(rows) * cols > (1 << 20)) bad_params("grid too large");
      doc.payload = random_planar(rng, params, rows, cols);
      break;
    }
    case GenKind::kCpmc:
      doc.payload = random_cpmc(rng, params);
      break;
    case GenKind::kTmc:
      doc.payload = random_tmc(rng, params);
      break;
    case GenKind::kSetCover:
      doc.payload = random_setcover(rng, params);
      break;
    case GenKind::kCover:
      doc.payload = random_cover(rng, params);
      break;
    case GenKind::kInterdiction: {
      const CoverInstance c = random_cover(rng, params);
      doc.payload = reduce_maxcover_to_interdiction(c).instance;
      doc.provenance["reduction"] = "maxcover->interdiction";
      doc.provenance["source"] = instance_to_json(InstanceDocument{kFormatVersion, c, nullptr, seed});
      break;
    }
  }
  return doc;
}

}  // namespace cutlab
