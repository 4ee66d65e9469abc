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

#ifndef CUTLAB_BISECTION_H_
#define CUTLAB_BISECTION_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "cutlab/graph.h"

namespace cutlab {

// side[v] is 0 or 1; sides differ in size by at most one, side 0 never the
// larger.
struct Bisection {
  std::vector<char> side;
  std::int64_t weight = 0;
};

using BisectionSolver = std::function<Bisection(const Graph&)>;

struct ExactBisectionOptions {
  int max_nodes = 48;
  std::int64_t node_limit = std::int64_t{1} << 26;
};

// Branch-and-bound over balanced splits. Throws kInstanceTooLarge.
Bisection min_bisection_exact(const Graph& g, const ExactBisectionOptions& options = {});

struct LocalSearchOptions {
  std::uint64_t seed = 1;
  int starts = 16;
};

// Best-improvement pairwise swaps from several random balanced starts.
Bisection min_bisection_local(const Graph& g, const LocalSearchOptions& options = {});

std::int64_t bisection_weight(const Graph& g, const std::vector<char>& side);

bool is_balanced(const std::vector<char>& side);

}  // namespace cutlab

#endif  // CUTLAB_BISECTION_H_
