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

#include "cutlab/bisection.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <string>

#include "cutlab/error.h"

namespace cutlab {
namespace {

std::vector<std::vector<std::int64_t>> weight_matrix(const Graph& g) {
  const int n = g.num_nodes();
  std::vector<std::vector<std::int64_t>> w(n, std::vector<std::int64_t>(n, 0));
  for (const Edge& e : g.edges()) {
    if (e.weight.is_inf()) {
      throw CutError(ErrorCode::kInvalidArgument, "bisection needs finite edge weights");
    }
    w[e.u][e.v] += e.weight.value();
    w[e.v][e.u] += e.weight.value();
  }
  return w;
}

class BisectionSearch {
 public:
  BisectionSearch(const Graph& g, std::int64_t node_limit, Bisection incumbent)
      : n_(g.num_nodes()),
        w_(weight_matrix(g)),
        node_limit_(node_limit),
        best_(std::move(incumbent)),
        side_(n_, -1),
        conn_(n_, {0, 0}) {
    cap_[0] = n_ / 2;
    cap_[1] = n_ - n_ / 2;
    order_nodes();
  }

  Bisection run() {
    // Equal halves are interchangeable, so the first node sits on side 0.
    if (n_ % 2 == 0 && n_ > 0) {
      assign(order_[0], 0);
      dfs(1, 0);
    } else {
      dfs(0, 0);
    }
    return best_;
  }

 private:
  void order_nodes() {
    std::vector<std::int64_t> attach(n_, 0);
    std::vector<char> placed(n_, 0);
    for (int step = 0; step < n_; ++step) {
      int pick = -1;
      for (int v = 0; v < n_; ++v) {
        if (placed[v]) continue;
        if (pick < 0 || attach[v] > attach[pick]) pick = v;
      }
      if (step == 0) {
        // Start from the heaviest node.
        std::int64_t top = -1;
        for (int v = 0; v < n_; ++v) {
          const std::int64_t s = std::accumulate(w_[v].begin(), w_[v].end(), std::int64_t{0});
          if (s > top) top = s, pick = v;
        }
      }
      placed[pick] = 1;
      order_.push_back(pick);
      for (int v = 0; v < n_; ++v) attach[v] += w_[pick][v];
    }
  }

  void assign(int v, int s) {
    side_[v] = s;
    ++count_[s];
    for (int x = 0; x < n_; ++x) conn_[x][s] += w_[v][x];
    cut_ += conn_[v][1 - s];
  }

  void unassign(int v) {
    const int s = side_[v];
    cut_ -= conn_[v][1 - s];
    for (int x = 0; x < n_; ++x) conn_[x][s] -= w_[v][x];
    --count_[s];
    side_[v] = -1;
  }

  std::int64_t bound(int depth) const {
    std::int64_t b = cut_;
    const bool full0 = count_[0] == cap_[0], full1 = count_[1] == cap_[1];
    for (int k = depth; k < n_; ++k) {
      const int v = order_[k];
      if (full0) {
        b += conn_[v][0];
      } else if (full1) {
        b += conn_[v][1];
      } else {
        b += std::min(conn_[v][0], conn_[v][1]);
      }
    }
    return b;
  }

  void dfs(int depth, int) {
    if (++explored_ > node_limit_) {
      throw CutError(ErrorCode::kInstanceTooLarge,
                     "bisection search exceeded " + std::to_string(node_limit_) + " nodes");
    }
    if (bound(depth) >= best_.weight) return;
    if (depth == n_) {
      best_.weight = cut_;
      best_.side.assign(side_.begin(), side_.end());
      return;
    }
    const int v = order_[depth];
    // Cheaper side first.
    const int first = conn_[v][1] > conn_[v][0] ? 0 : 1;
    for (int s : {first, 1 - first}) {
      if (count_[s] == cap_[s]) continue;
      assign(v, s);
      dfs(depth + 1, 0);
      unassign(v);
    }
  }

  int n_;
  std::vector<std::vector<std::int64_t>> w_;
  std::int64_t node_limit_;
  Bisection best_;
  std::vector<int> order_;
  std::vector<int> side_;
  std::vector<std::array<std::int64_t, 2>> conn_;
  int cap_[2] = {0, 0};
  int count_[2] = {0, 0};
  std::int64_t cut_ = 0;
  std::int64_t explored_ = 0;
};

}  // namespace

std::int64_t bisection_weight(const Graph& g, const std::vector<char>& side) {
  std::int64_t total = 0;
  for (const Edge& e : g.edges()) {
    if (side[e.u] != side[e.v]) total += e.weight.value();
  }
  return total;
}

bool is_balanced(const std::vector<char>& side) {
  const auto ones = std::count(side.begin(), side.end(), 1);
  const auto zeros = static_cast<std::int64_t>(side.size()) - ones;
  return zeros == static_cast<std::int64_t>(side.size() / 2) &&
         std::all_of(side.begin(), side.end(), [](char c) { return c == 0 || c == 1; });
}

Bisection min_bisection_local(const Graph& g, const LocalSearchOptions& options) {
  const int n = g.num_nodes();
  const auto w = weight_matrix(g);
  std::mt19937_64 rng(options.seed);
  Bisection best;
  best.weight = -1;
  for (int start = 0; start < std::max(1, options.starts); ++start) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<char> side(n, 1);
    for (int i = 0; i < n / 2; ++i) side[perm[i]] = 0;
    // d[v]: weight leaving v's side minus weight staying.
    std::vector<std::int64_t> d(n, 0);
    for (int v = 0; v < n; ++v) {
      for (int x = 0; x < n; ++x) d[v] += side[x] != side[v] ? w[v][x] : -w[v][x];
    }
    for (;;) {
      std::int64_t gain = 0;
      int ba = -1, bb = -1;
      for (int a = 0; a < n; ++a) {
        if (side[a] != 0) continue;
        for (int b = 0; b < n; ++b) {
          if (side[b] != 1) continue;
          const std::int64_t gn = d[a] + d[b] - 2 * w[a][b];
          if (gn > gain) gain = gn, ba = a, bb = b;
        }
      }
      if (ba < 0) break;
      for (int mover : {ba, bb}) {
        side[mover] ^= 1;
        for (int x = 0; x < n; ++x) {
          if (x == mover) continue;
          // Edge mover-x flipped between internal and external.
          d[x] += side[x] != side[mover] ? 2 * w[mover][x] : -2 * w[mover][x];
        }
        d[mover] = -d[mover];
      }
    }
    const std::int64_t value = bisection_weight(g, side);
    if (best.weight < 0 || value < best.weight) {
      best.weight = value;
      best.side = side;
    }
  }
  return best;
}

Bisection min_bisection_exact(const Graph& g, const ExactBisectionOptions& options) {
  if (g.num_nodes() > options.max_nodes) {
    throw CutError(ErrorCode::kInstanceTooLarge,
                   "exact bisection limited to " + std::to_string(options.max_nodes) + " nodes");
  }
  Bisection seed = min_bisection_local(g, LocalSearchOptions{});
  // Let the search reach the incumbent's value and fill in its own split.
  seed.weight += 1;
  return BisectionSearch(g, options.node_limit, std::move(seed)).run();
}

}  // namespace cutlab
