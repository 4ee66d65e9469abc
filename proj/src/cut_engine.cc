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

#include "cutlab/cut_engine.h"

#include <algorithm>
#include <limits>
#include <string>

#include "cutlab/error.h"

namespace cutlab {
namespace {

// Dinic's algorithm on a residual arc list. Arc 2i is the forward half of
// input arc i, arc 2i+1 its reverse.
class Dinic {
 public:
  Dinic(int n, int source, int sink)
      : n_(n), source_(source), sink_(sink), head_(n, -1), level_(n), it_(n) {}

  void add(int u, int v, std::int64_t cap_uv, std::int64_t cap_vu) {
    push_arc(u, v, cap_uv);
    push_arc(v, u, cap_vu);
  }

  // Stops once the flow reaches `limit`.
  std::int64_t run(std::int64_t limit) {
    std::int64_t flow = 0;
    while (flow < limit && bfs()) {
      std::copy(head_.begin(), head_.end(), it_.begin());
      while (flow < limit) {
        const std::int64_t f = dfs(source_, limit - flow);
        if (f == 0) break;
        flow += f;
      }
    }
    return flow;
  }

  std::int64_t residual(int arc) const { return cap_[arc]; }
  int arc_to(int arc) const { return to_[arc]; }
  int num_nodes() const { return n_; }

  // Residual forward closure of `seeds`, skipping nodes already marked in
  // `blocked`; newly found nodes are appended to `out`.
  void forward_closure(int seed, const std::vector<char>& blocked,
                       std::vector<char>& mark, std::vector<int>& out) const {
    walk(seed, blocked, mark, out, /*backward=*/false);
  }
  void backward_closure(int seed, const std::vector<char>& blocked,
                        std::vector<char>& mark, std::vector<int>& out) const {
    walk(seed, blocked, mark, out, /*backward=*/true);
  }

 private:
  void push_arc(int u, int v, std::int64_t cap) {
    to_.push_back(v);
    cap_.push_back(cap);
    next_.push_back(head_[u]);
    head_[u] = static_cast<int>(to_.size()) - 1;
  }

  bool bfs() {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<int> queue = {source_};
    level_[source_] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int v = queue[qi];
      for (int a = head_[v]; a >= 0; a = next_[a]) {
        if (cap_[a] > 0 && level_[to_[a]] < 0) {
          level_[to_[a]] = level_[v] + 1;
          queue.push_back(to_[a]);
        }
      }
    }
    return level_[sink_] >= 0;
  }

  std::int64_t dfs(int v, std::int64_t pushed) {
    if (v == sink_) return pushed;
    for (int& a = it_[v]; a >= 0; a = next_[a]) {
      const int w = to_[a];
      if (cap_[a] <= 0 || level_[w] != level_[v] + 1) continue;
      const std::int64_t f = dfs(w, std::min(pushed, cap_[a]));
      if (f > 0) {
        cap_[a] -= f;
        cap_[a ^ 1] += f;
        return f;
      }
    }
    return 0;
  }

  void walk(int seed, const std::vector<char>& blocked, std::vector<char>& mark,
            std::vector<int>& out, bool backward) const {
    if (mark[seed] || blocked[seed]) return;
    mark[seed] = 1;
    out.push_back(seed);
    for (std::size_t qi = out.size() - 1; qi < out.size(); ++qi) {
      const int v = out[qi];
      for (int a = head_[v]; a >= 0; a = next_[a]) {
        // Forward: residual v->w. Backward: residual w->v, stored on a^1.
        const std::int64_t c = backward ? cap_[a ^ 1] : cap_[a];
        const int w = to_[a];
        if (c <= 0 || mark[w] || blocked[w]) continue;
        mark[w] = 1;
        out.push_back(w);
      }
    }
  }

  int n_;
  int source_;
  int sink_;
  std::vector<int> head_;
  std::vector<int> next_;
  std::vector<int> to_;
  std::vector<std::int64_t> cap_;
  std::vector<int> level_;
  std::vector<int> it_;
};

struct Network {
  Dinic dinic;
  std::int64_t inf_cap;
  int super_source;
  int super_sink;
};

Network build_network(const CutProblem& p) {
  __int128 finite = 0;
  for (const FlowArc& a : p.arcs) {
    if (a.capacity.is_finite()) {
      if (a.capacity.value() < 0) {
        throw CutError(ErrorCode::kInvalidArgument, "negative capacity");
      }
      finite += a.capacity.value();
    }
  }
  if (finite > (static_cast<__int128>(1) << 61)) {
    throw CutError(ErrorCode::kArithmeticBoundExceeded,
                   "total capacity does not fit the flow arithmetic");
  }
  const std::int64_t inf_cap = static_cast<std::int64_t>(finite) + 1;
  std::vector<char> is_source(p.num_nodes, 0);
  for (int s : p.sources) is_source.at(s) = 1;
  for (int t : p.sinks) {
    if (is_source.at(t)) {
      throw CutError(ErrorCode::kInvalidArgument,
                     "node " + std::to_string(t) + " is both source and sink");
    }
  }
  const int ss = p.num_nodes;
  const int tt = p.num_nodes + 1;
  Network net{Dinic(p.num_nodes + 2, ss, tt), inf_cap, ss, tt};
  auto cap = [&](Weight w) { return w.is_inf() ? inf_cap : w.value(); };
  for (const FlowArc& a : p.arcs) {
    const std::int64_t c = cap(a.capacity);
    net.dinic.add(a.from, a.to, c, a.bidirectional ? c : 0);
  }
  for (int s : p.sources) net.dinic.add(ss, s, inf_cap, 0);
  for (int t : p.sinks) net.dinic.add(t, tt, inf_cap, 0);
  return net;
}

}  // namespace

std::int64_t max_flow_value(const CutProblem& problem) {
  Network net = build_network(problem);
  const std::int64_t flow = net.dinic.run(net.inf_cap);
  if (flow >= net.inf_cap) {
    throw CutError(ErrorCode::kNoFiniteCut,
                   "every separator contains an INF element");
  }
  return flow;
}

CutOutcome solve_cut_problem(const CutProblem& problem) {
  Network net = build_network(problem);
  Dinic& d = net.dinic;
  const std::int64_t flow = d.run(net.inf_cap);
  if (flow >= net.inf_cap) {
    throw CutError(ErrorCode::kNoFiniteCut,
                   "every separator contains an INF element");
  }

  const int total = d.num_nodes();
  const std::vector<char> none(total, 0);
  std::vector<char> in_r(total, 0);  // committed source side
  std::vector<char> in_q(total, 0);  // committed sink side
  std::vector<int> scratch;
  d.forward_closure(net.super_source, none, in_r, scratch);
  scratch.clear();
  d.backward_closure(net.super_sink, none, in_q, scratch);

  CutOutcome out;
  out.value = flow;
  out.unique = true;
  for (int v = 0; v < total; ++v) {
    if (!in_r[v] && !in_q[v]) {
      out.unique = false;
      break;
    }
  }

  if (!out.unique) {
    // Greedy over members in id order: commit a member to the cut whenever
    // some minimum cut consistent with earlier commitments contains it. A
    // member can only be cut across its saturated direction, and the minimum
    // cuts are exactly the residual-closed source sides, so the test is a
    // disjointness check between two closures.
    std::vector<int> order(problem.arcs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::erase_if(order, [&](int i) { return problem.arcs[i].member < 0; });
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return problem.arcs[a].member < problem.arcs[b].member;
    });
    std::vector<char> mark_r(total, 0), mark_q(total, 0);
    std::vector<int> grow_r, grow_q;
    for (int i : order) {
      int x = -1, y = -1;
      if (d.residual(2 * i) == 0) {
        x = problem.arcs[i].from;
        y = problem.arcs[i].to;
      } else if (problem.arcs[i].bidirectional && d.residual(2 * i + 1) == 0) {
        x = problem.arcs[i].to;
        y = problem.arcs[i].from;
      } else {
        continue;
      }
      if (in_r[x] && !in_r[y] && in_q[y]) continue;  // already crossing
      if (in_q[x] || in_r[y]) continue;
      grow_r.clear();
      grow_q.clear();
      d.forward_closure(x, in_r, mark_r, grow_r);
      d.backward_closure(y, in_q, mark_q, grow_q);
      bool ok = true;
      for (int v : grow_r) {
        if (in_q[v] || mark_q[v]) {
          ok = false;
          break;
        }
      }
      if (ok) {
        for (int v : grow_q) {
          if (in_r[v]) {
            ok = false;
            break;
          }
        }
      }
      for (int v : grow_r) mark_r[v] = 0;
      for (int v : grow_q) mark_q[v] = 0;
      if (ok) {
        for (int v : grow_r) in_r[v] = 1;
        for (int v : grow_q) in_q[v] = 1;
      }
    }
  }

  out.source_side.assign(in_r.begin(), in_r.begin() + problem.num_nodes);
  for (const FlowArc& a : problem.arcs) {
    if (a.member < 0) continue;
    const bool crosses = (in_r[a.from] && !in_r[a.to]) ||
                         (a.bidirectional && in_r[a.to] && !in_r[a.from]);
    if (crosses) out.members.push_back(a.member);
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

}  // namespace cutlab
