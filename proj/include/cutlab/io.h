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


#ifndef CUTLAB_IO_H_
#define CUTLAB_IO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"

#include "cutlab/cpmc.h"
#include "cutlab/graph.h"
#include "cutlab/reductions.h"
#include "cutlab/tmc.h"

namespace cutlab {

inline constexpr int kFormatVersion = 1;

// Order matches the payload variant.
enum class InstanceKind { kGraph, kCpmc, kTmc, kSetCover, kCover, kInterdiction };

std::string_view kind_name(InstanceKind kind);
// Throws kSchemaError for unknown names.
InstanceKind kind_from_name(std::string_view name);

using Payload = std::variant<Graph, CpmcInstance, TmcInstance, SetCoverInstance, CoverInstance,
                             InterdictionInstance>;

struct InstanceDocument {
  int format_version = kFormatVersion;
  Payload payload;
  nlohmann::json provenance;  // null when absent
  std::optional<std::uint64_t> rng_seed;

  InstanceKind kind() const { return static_cast<InstanceKind>(payload.index()); }

  friend bool operator==(const InstanceDocument&, const InstanceDocument&) = default;
};

// Weights are integers or the string "INF".
nlohmann::json weight_to_json(Weight w);
nlohmann::json graph_to_json(const Graph& g);
nlohmann::json instance_to_json(const InstanceDocument& doc);

// Diagnostics name the offending field as a JSON pointer. Throws
// kSchemaError, kBoundsError.
Graph graph_from_json(const nlohmann::json& j, const std::string& path = "");
InstanceDocument instance_from_json(const nlohmann::json& j);

// Throws kParseError (with line and column), kSchemaError, kBoundsError.
InstanceDocument parse_instance(std::string_view text);
// Canonical text: keys sorted, two-space indent, trailing newline.
std::string serialize_instance(const InstanceDocument& doc);

// DIMACS-style edge list, 1-based ids:
//   c comment
//   p edge N M      (undirected; "p arc" or "p max" for directed)
//   e u v [w]       edge, weight 1 when omitted ("a" also accepted)
//   n v w           node weight
// Throws kParseError with the line number, kSchemaError.
Graph parse_dimacs(std::string_view text);

// Picks the DIMACS reader for .dimacs, .col and .gr files, JSON otherwise.
// Throws kParseError when the file can not be read.
InstanceDocument read_instance_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

// Throws kSchemaError for an unknown name.
CutKind cut_kind_from_name(std::string_view name, const std::string& path = "");
std::string_view cut_kind_name(CutKind kind);

}  // namespace cutlab

#endif  // CUTLAB_IO_H_
