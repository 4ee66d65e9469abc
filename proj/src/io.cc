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


#include "cutlab/io.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "cutlab/error.h"

namespace cutlab {
namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 6> kKindNames = {"graph", "cpmc",  "tmc",
                                                        "setcover", "cover", "interdiction"};

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw CutError(ErrorCode::kSchemaError, (path.empty() ? "/" : path) + ": " + what);
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) schema_error(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path, "missing field \"" + key + "\"");
  return *it;
}

const json* optional_field(const json& obj, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return nullptr;
  return &*it;
}

std::int64_t read_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_error(path, "expected an integer");
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    throw CutError(ErrorCode::kBoundsError, path + ": integer out of range");
  }
  return j.get<std::int64_t>();
}

int read_small(const json& j, const std::string& path, std::int64_t lo, std::int64_t hi) {
  const std::int64_t v = read_int(j, path);
  if (v < lo || v > hi) {
    throw CutError(ErrorCode::kBoundsError, path + ": " + std::to_string(v) + " outside [" +
                                                std::to_string(lo) + ", " + std::to_string(hi) +
                                                "]");
  }
  return static_cast<int>(v);
}

bool read_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) schema_error(path, "expected true or false");
  return j.get<bool>();
}

const json& read_array(const json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array");
  return j;
}

Weight read_weight(const json& j, const std::string& path) {
  if (j.is_string()) {
    if (j.get<std::string>() == "INF") return Weight::inf();
    schema_error(path, "weight strings must be \"INF\"");
  }
  const std::int64_t v = read_int(j, path);
  if (v < 1) schema_error(path, "weights must be positive");
  if (v > kMaxWeightTotal) {
    throw CutError(ErrorCode::kBoundsError,
                   path + ": weight " + std::to_string(v) + " exceeds " +
                       std::to_string(kMaxWeightTotal));
  }
  return Weight(v);
}

NodeId read_node(const json& j, const std::string& path, int num_nodes) {
  const std::int64_t v = read_int(j, path);
  if (v < 0 || v >= num_nodes) {
    schema_error(path, "node " + std::to_string(v) + " does not exist");
  }
  return static_cast<NodeId>(v);
}

std::vector<NodeId> read_nodes(const json& j, const std::string& path, int num_nodes) {
  std::vector<NodeId> out;
  const json& arr = read_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(read_node(arr[i], path + "/" + std::to_string(i), num_nodes));
  }
  return out;
}

std::vector<int> read_int_list(const json& j, const std::string& path) {
  std::vector<int> out;
  const json& arr = read_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(read_small(arr[i], path + "/" + std::to_string(i), 0, INT32_MAX));
  }
  return out;
}

std::optional<std::int64_t> read_budget(const json& obj, const std::string& path) {
  const json* b = optional_field(obj, "budget");
  if (!b) return std::nullopt;
  return read_int(*b, path + "/budget");
}

json budget_json(const std::optional<std::int64_t>& b) { return b ? json(*b) : json(nullptr); }

// Library validation failures inside a payload are schema problems.
template <typename F>
void as_schema(const std::string& path, F&& check) {
  try {
    check();
  } catch (const CutError& e) {
    if (e.code() != ErrorCode::kInvalidArgument) throw;
    schema_error(path, e.detail());
  }
}

json payload_json(const Graph& g) { return graph_to_json(g); }

json payload_json(const CpmcInstance& c) {
  return {{"graph", graph_to_json(c.graph)},
          {"source", c.source},
          {"partners", c.partners},
          {"destinations", c.destinations},
          {"mode", cut_kind_name(c.mode)},
          {"budget", budget_json(c.budget)},
          {"keep_destinations_connected", c.keep_destinations_connected}};
}

json payload_json(const TmcInstance& t) {
  return {{"graph", graph_to_json(t.graph)}, {"services", t.services},
          {"client", t.client},              {"threshold", t.threshold},
          {"mode", cut_kind_name(t.mode)},   {"budget", budget_json(t.budget)}};
}

json payload_json(const SetCoverInstance& s) {
  return {{"num_elements", s.num_elements},
          {"sets", s.sets},
          {"weights", s.weights},
          {"budget", s.budget}};
}

json payload_json(const CoverInstance& c) {
  return {{"num_elements", c.num_elements}, {"subsets", c.subsets}, {"param", c.param}};
}

json payload_json(const InterdictionInstance& in) {
  json costs = json::array();
  for (Weight w : in.blocking_cost) costs.push_back(weight_to_json(w));
  return {{"graph", graph_to_json(in.graph)},
          {"source", in.source},
          {"sink", in.sink},
          {"blocking_cost", costs},
          {"budget", in.budget}};
}

CpmcInstance cpmc_from_json(const json& p, const std::string& path) {
  CpmcInstance c;
  c.graph = graph_from_json(field(p, "graph", path), path + "/graph");
  const int n = c.graph.num_nodes();
  c.source = read_node(field(p, "source", path), path + "/source", n);
  c.partners = read_nodes(field(p, "partners", path), path + "/partners", n);
  c.destinations = read_nodes(field(p, "destinations", path), path + "/destinations", n);
  if (const json* m = optional_field(p, "mode")) c.mode = cut_kind_from_name(m->is_string() ? m->get<std::string>() : "", path + "/mode");
  c.budget = read_budget(p, path);
  if (const json* k = optional_field(p, "keep_destinations_connected")) {
    c.keep_destinations_connected = read_bool(*k, path + "/keep_destinations_connected");
  }
  as_schema(path, [&] { validate(c); });
  return c;
}

TmcInstance tmc_from_json(const json& p, const std::string& path) {
  TmcInstance t;
  t.graph = graph_from_json(field(p, "graph", path), path + "/graph");
  const int n = t.graph.num_nodes();
  t.services = read_nodes(field(p, "services", path), path + "/services", n);
  t.client = read_node(field(p, "client", path), path + "/client", n);
  t.threshold = read_small(field(p, "threshold", path), path + "/threshold", 1, INT32_MAX);
  if (const json* m = optional_field(p, "mode")) t.mode = cut_kind_from_name(m->is_string() ? m->get<std::string>() : "", path + "/mode");
  t.budget = read_budget(p, path);
  as_schema(path, [&] { validate(t); });
  return t;
}

SetCoverInstance setcover_from_json(const json& p, const std::string& path) {
  SetCoverInstance s;
  s.num_elements = read_small(field(p, "num_elements", path), path + "/num_elements", 0, 1 << 20);
  const json& sets = read_array(field(p, "sets", path), path + "/sets");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    s.sets.push_back(read_int_list(sets[i], path + "/sets/" + std::to_string(i)));
  }
  const json& w = read_array(field(p, "weights", path), path + "/weights");
  for (std::size_t i = 0; i < w.size(); ++i) {
    s.weights.push_back(read_weight(w[i], path + "/weights/" + std::to_string(i)).value());
    if (w[i].is_string()) schema_error(path + "/weights/" + std::to_string(i), "set weights are finite");
  }
  s.budget = read_int(field(p, "budget", path), path + "/budget");
  as_schema(path, [&] { validate(s); });
  return s;
}

CoverInstance cover_from_json(const json& p, const std::string& path) {
  CoverInstance c;
  c.num_elements = read_small(field(p, "num_elements", path), path + "/num_elements", 0, 1 << 20);
  const json& subs = read_array(field(p, "subsets", path), path + "/subsets");
  for (std::size_t i = 0; i < subs.size(); ++i) {
    c.subsets.push_back(read_int_list(subs[i], path + "/subsets/" + std::to_string(i)));
  }
  c.param = read_small(field(p, "param", path), path + "/param", 0, INT32_MAX);
  as_schema(path, [&] { validate(c); });
  return c;
}

InterdictionInstance interdiction_from_json(const json& p, const std::string& path) {
  InterdictionInstance in;
  in.graph = graph_from_json(field(p, "graph", path), path + "/graph");
  if (!in.graph.directed()) schema_error(path + "/graph/directed", "interdiction graphs are directed");
  const int n = in.graph.num_nodes();
  in.source = read_node(field(p, "source", path), path + "/source", n);
  in.sink = read_node(field(p, "sink", path), path + "/sink", n);
  if (in.source == in.sink) schema_error(path + "/sink", "sink equals source");
  const json& costs = read_array(field(p, "blocking_cost", path), path + "/blocking_cost");
  if (static_cast<int>(costs.size()) != in.graph.num_edges()) {
    schema_error(path + "/blocking_cost", "needs one entry per arc");
  }
  for (std::size_t i = 0; i < costs.size(); ++i) {
    in.blocking_cost.push_back(read_weight(costs[i], path + "/blocking_cost/" + std::to_string(i)));
  }
  in.budget = read_int(field(p, "budget", path), path + "/budget");
  return in;
}

std::string lowercase_extension(const std::string& path) {
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos) return "";
  std::string ext = path.substr(dot + 1);
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext;
}

}  // namespace

std::string_view kind_name(InstanceKind kind) { return kKindNames[static_cast<int>(kind)]; }

InstanceKind kind_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == name) return static_cast<InstanceKind>(i);
  }
  schema_error("/kind", "unknown kind \"" + std::string(name) + "\"");
}

std::string_view cut_kind_name(CutKind kind) { return kind == CutKind::kNode ? "node" : "edge"; }

CutKind cut_kind_from_name(std::string_view name, const std::string& path) {
  if (name == "node") return CutKind::kNode;
  if (name == "edge") return CutKind::kEdge;
  schema_error(path, "mode must be \"node\" or \"edge\"");
}

json weight_to_json(Weight w) { return w.is_inf() ? json("INF") : json(w.value()); }

json graph_to_json(const Graph& g) {
  json nodes = json::array();
  for (Weight w : g.node_weights()) nodes.push_back(weight_to_json(w));
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back(json::array({e.u, e.v, weight_to_json(e.weight)}));
  return {{"directed", g.directed()}, {"node_weights", nodes}, {"edges", edges}};
}

Graph graph_from_json(const json& j, const std::string& path) {
  bool directed = false;
  if (const json* d = optional_field(j, "directed")) directed = read_bool(*d, path + "/directed");
  GraphBuilder b(directed);
  if (const json* nw = optional_field(j, "node_weights")) {
    const json& arr = read_array(*nw, path + "/node_weights");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      b.add_node(read_weight(arr[i], path + "/node_weights/" + std::to_string(i)));
    }
    if (const json* nn = optional_field(j, "nodes")) {
      if (read_int(*nn, path + "/nodes") != static_cast<std::int64_t>(arr.size())) {
        schema_error(path + "/nodes", "disagrees with node_weights");
      }
    }
  } else {
    b.add_nodes(read_small(field(j, "nodes", path), path + "/nodes", 0, 1 << 24));
  }
  const json& edges = read_array(field(j, "edges", path), path + "/edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string ep = path + "/edges/" + std::to_string(i);
    const json& e = edges[i];
    if (!e.is_array() || e.size() < 2 || e.size() > 3) {
      schema_error(ep, "an edge is [u, v] or [u, v, weight]");
    }
    const NodeId u = read_node(e[0], ep + "/0", b.num_nodes());
    const NodeId v = read_node(e[1], ep + "/1", b.num_nodes());
    const Weight w = e.size() == 3 ? read_weight(e[2], ep + "/2") : Weight(1);
    if (u == v) schema_error(ep, "self-loop on node " + std::to_string(u));
    if (b.has_edge(u, v)) {
      schema_error(ep, "duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    }
    b.add_edge(u, v, w);
  }
  try {
    return b.build();
  } catch (const CutError& e) {
    throw CutError(e.code(), (path.empty() ? "/" : path) + ": " + e.detail());
  }
}

json instance_to_json(const InstanceDocument& doc) {
  json j;
  j["format_version"] = doc.format_version;
  j["kind"] = kind_name(doc.kind());
  j["payload"] = std::visit([](const auto& p) { return payload_json(p); }, doc.payload);
  if (!doc.provenance.is_null()) j["provenance"] = doc.provenance;
  if (doc.rng_seed) j["rng_seed"] = *doc.rng_seed;
  return j;
}

InstanceDocument instance_from_json(const json& j) {
  if (!j.is_object()) schema_error("", "an instance document is a JSON object");
  InstanceDocument doc;
  doc.format_version = read_small(field(j, "format_version", ""), "/format_version", 1, 1 << 20);
  if (doc.format_version != kFormatVersion) {
    schema_error("/format_version", "unsupported version " + std::to_string(doc.format_version));
  }
  const json& kind = field(j, "kind", "");
  if (!kind.is_string()) schema_error("/kind", "expected a string");
  const json& p = field(j, "payload", "");
  switch (kind_from_name(kind.get<std::string>())) {
    case InstanceKind::kGraph: doc.payload = graph_from_json(p, "/payload"); break;
    case InstanceKind::kCpmc: doc.payload = cpmc_from_json(p, "/payload"); break;
    case InstanceKind::kTmc: doc.payload = tmc_from_json(p, "/payload"); break;
    case InstanceKind::kSetCover: doc.payload = setcover_from_json(p, "/payload"); break;
    case InstanceKind::kCover: doc.payload = cover_from_json(p, "/payload"); break;
    case InstanceKind::kInterdiction: doc.payload = interdiction_from_json(p, "/payload"); break;
  }
  if (const json* prov = optional_field(j, "provenance")) {
    if (!prov->is_object()) schema_error("/provenance", "expected an object");
    doc.provenance = *prov;
  }
  if (const json* seed = optional_field(j, "rng_seed")) {
    if (!seed->is_number_unsigned()) schema_error("/rng_seed", "expected a non-negative integer");
    doc.rng_seed = seed->get<std::uint64_t>();
  }
  for (const auto& [key, value] : j.items()) {
    static constexpr std::array<std::string_view, 5> known = {"format_version", "kind", "payload",
                                                              "provenance", "rng_seed"};
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      schema_error("/" + key, "unknown field");
    }
  }
  return doc;
}

InstanceDocument parse_instance(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Byte offsets are 1-based and point just past the offending character.
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw CutError(ErrorCode::kParseError, "line " + std::to_string(line) + ", column " +
                                               std::to_string(col) + ": " + e.what());
  }
  return instance_from_json(j);
}

std::string serialize_instance(const InstanceDocument& doc) {
  return instance_to_json(doc).dump(2) + "\n";
}

Graph parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  std::optional<GraphBuilder> b;
  int declared_edges = 0;
  auto fail = [&](const std::string& what) -> void {
    throw CutError(ErrorCode::kParseError, "line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string format;
      long long n = -1, m = -1;
      if (b) fail("second problem line");
      if (!(ls >> format >> n >> m) || n < 0 || m < 0) fail("expected \"p FORMAT N M\"");
      if (format != "edge" && format != "arc" && format != "max" && format != "col") {
        fail("unknown format \"" + format + "\"");
      }
      if (n > (1 << 24)) fail("too many nodes");
      b.emplace(format == "arc" || format == "max");
      b->add_nodes(static_cast<int>(n));
      declared_edges = static_cast<int>(m);
      continue;
    }
    if (!b) fail("data before the problem line");
    if (tag == "e" || tag == "a") {
      long long u = 0, v = 0, w = 1;
      if (!(ls >> u >> v)) fail("expected \"" + tag + " U V [W]\"");
      if (!(ls >> w)) w = 1;
      if (u < 1 || v < 1 || u > b->num_nodes() || v > b->num_nodes()) fail("node out of range");
      if (w < 1 || w > kMaxWeightTotal) fail("weight out of range");
      if (u == v) fail("self-loop");
      if (b->has_edge(static_cast<NodeId>(u - 1), static_cast<NodeId>(v - 1))) {
        throw CutError(ErrorCode::kSchemaError, "line " + std::to_string(line_no) +
                                                    ": duplicate edge (" + std::to_string(u) +
                                                    ", " + std::to_string(v) + ")");
      }
      b->add_edge(static_cast<NodeId>(u - 1), static_cast<NodeId>(v - 1), Weight(w));
    } else if (tag == "n") {
      long long v = 0, w = 0;
      if (!(ls >> v >> w)) fail("expected \"n V W\"");
      if (v < 1 || v > b->num_nodes()) fail("node out of range");
      if (w < 1 || w > kMaxWeightTotal) fail("weight out of range");
      b->set_node_weight(static_cast<NodeId>(v - 1), Weight(w));
    } else {
      fail("unknown line type \"" + tag + "\"");
    }
  }
  if (!b) throw CutError(ErrorCode::kParseError, "no problem line");
  if (b->num_edges() != declared_edges) {
    throw CutError(ErrorCode::kParseError, "problem line declares " +
                                               std::to_string(declared_edges) + " edges, found " +
                                               std::to_string(b->num_edges()));
  }
  return b->build();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CutError(ErrorCode::kParseError, "can not read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CutError(ErrorCode::kInvalidArgument, "can not write " + path);
  out << text;
}

InstanceDocument read_instance_file(const std::string& path) {
  const std::string text = read_text_file(path);
  const std::string ext = lowercase_extension(path);
  if (ext == "dimacs" || ext == "col" || ext == "gr") {
    InstanceDocument doc;
    doc.payload = parse_dimacs(text);
    doc.provenance = {{"imported_from", "dimacs"}};
    return doc;
  }
  try {
    return parse_instance(text);
  } catch (const CutError& e) {
    throw CutError(e.code(), path + ": " + e.detail());
  }
}

}  // namespace cutlab
