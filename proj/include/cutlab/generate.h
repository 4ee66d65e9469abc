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


#ifndef CUTLAB_GENERATE_H_
#define CUTLAB_GENERATE_H_

#include <cstdint>
#include <string_view>

#include "json.hpp"

#include "cutlab/io.h"

namespace cutlab {

enum class GenKind { kGraph, kPlanar, kCpmc, kTmc, kSetCover, kCover, kInterdiction };

// Throws kInvalidParams.
GenKind gen_kind_from_name(std::string_view name);
std::string_view gen_kind_name(GenKind kind);

struct GenParams {
  int n = 10;             // nodes, or ground-set size for cover kinds
  int k = 3;              // services, partners or sets
  int l = 2;              // threshold
  int destinations = 1;   // cpmc only
  int param = 2;          // cover cardinality parameter
  int tau = 3;            // largest subset for cover kinds
  double density = 0.3;   // edge probability; kept-edge probability for planar
  int min_weight = 1;
  int max_weight = 5;
  bool directed = false;
  CutKind mode = CutKind::kEdge;
  int rows = 0;           // planar grid; 0 derives it from n
  int cols = 0;
};

// Unknown keys and bad values throw kInvalidParams.
GenParams gen_params_from_json(const nlohmann::json& j);
nlohmann::json gen_params_to_json(const GenParams& p);

// Same kind, params and seed give the same document byte for byte. Throws
// kInvalidParams.
InstanceDocument generate_random(GenKind kind, const GenParams& params, std::uint64_t seed);

}  // namespace cutlab

#endif  // CUTLAB_GENERATE_H_
