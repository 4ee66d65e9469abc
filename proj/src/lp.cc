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

#include "cutlab/lp.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cutlab/error.h"

namespace cutlab {
namespace {

constexpr double kPivotEps = 1e-9;

// Tableau rows 0..m-1 are constraints, row m the objective being minimized.
// Column `cols` holds the right-hand side.
class Tableau {
 public:
  Tableau(int rows, int cols)
      : m_(rows), n_(cols), a_((rows + 1) * (cols + 1), 0.0), basis_(rows, -1) {}

  double& at(int r, int c) { return a_[r * (n_ + 1) + c]; }
  double& rhs(int r) { return at(r, n_); }
  std::vector<int>& basis() { return basis_; }

  void pivot(int r, int c) {
    const double p = at(r, c);
    for (int j = 0; j <= n_; ++j) at(r, j) /= p;
    for (int i = 0; i <= m_; ++i) {
      if (i == r) continue;
      const double f = at(i, c);
      if (f == 0) continue;
      for (int j = 0; j <= n_; ++j) at(i, j) -= f * at(r, j);
      at(i, c) = 0;
    }
    basis_[r] = c;
  }

  // Bland's rule on the objective row; columns >= allowed are frozen.
  // Returns false when unbounded.
  bool optimize(int allowed, int& iterations, int limit) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < allowed; ++j) {
        if (at(m_, j) < -kPivotEps) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      double best = 0;
      for (int i = 0; i < m_; ++i) {
        const double coef = at(i, enter);
        if (coef <= kPivotEps) continue;
        const double ratio = rhs(i) / coef;
        if (leave < 0 || ratio < best - kPivotEps ||
            (ratio <= best + kPivotEps && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      if (++iterations > limit) {
        throw CutError(ErrorCode::kIterationLimit,
                       "simplex exceeded " + std::to_string(limit) + " pivots");
      }
      pivot(leave, enter);
    }
  }

 private:
  int m_;
  int n_;
  std::vector<double> a_;
  std::vector<int> basis_;
};

}  // namespace

int LpModel::add_variable(double cost, double lo, double hi) {
  objective.push_back(cost);
  lower.push_back(lo);
  upper.push_back(hi);
  return static_cast<int>(objective.size()) - 1;
}

double lp_violation(const LpModel& model, const std::vector<double>& x) {
  double worst = 0;
  for (std::size_t v = 0; v < x.size(); ++v) {
    worst = std::max(worst, model.lower[v] - x[v]);
    if (std::isfinite(model.upper[v])) worst = std::max(worst, x[v] - model.upper[v]);
  }
  for (const LpConstraint& c : model.constraints) {
    double lhs = 0;
    for (const LpTerm& t : c.terms) lhs += t.coef * x[t.var];
    const double diff = lhs - c.rhs;
    if (c.sense != LpSense::kGreaterEqual) worst = std::max(worst, diff);
    if (c.sense != LpSense::kLessEqual) worst = std::max(worst, -diff);
  }
  return worst;
}

LpSolution solve_lp(const LpModel& model, int iteration_limit) {
  const int nv = static_cast<int>(model.objective.size());
  if (model.lower.size() != static_cast<std::size_t>(nv) ||
      model.upper.size() != static_cast<std::size_t>(nv)) {
    throw CutError(ErrorCode::kInvalidArgument, "bound vectors do not match variables");
  }
  for (int v = 0; v < nv; ++v) {
    if (!std::isfinite(model.lower[v]) || model.upper[v] < model.lower[v]) {
      throw CutError(ErrorCode::kInvalidArgument, "bad bounds on variable " + std::to_string(v));
    }
  }

  // Shifted variables x' = x - lower; finite upper bounds become rows.
  struct Row {
    std::vector<double> coef;
    LpSense sense;
    double rhs;
  };
  std::vector<Row> rows;
  for (const LpConstraint& c : model.constraints) {
    Row r{std::vector<double>(nv, 0.0), c.sense, c.rhs};
    for (const LpTerm& t : c.terms) {
      if (t.var < 0 || t.var >= nv) {
        throw CutError(ErrorCode::kInvalidArgument, "constraint names unknown variable");
      }
      r.coef[t.var] += t.coef;
      r.rhs -= t.coef * model.lower[t.var];
    }
    rows.push_back(std::move(r));
  }
  for (int v = 0; v < nv; ++v) {
    if (!std::isfinite(model.upper[v])) continue;
    Row r{std::vector<double>(nv, 0.0), LpSense::kLessEqual, model.upper[v] - model.lower[v]};
    r.coef[v] = 1;
    rows.push_back(std::move(r));
  }
  for (Row& r : rows) {
    if (r.rhs < 0) {
      for (double& x : r.coef) x = -x;
      r.rhs = -r.rhs;
      if (r.sense == LpSense::kLessEqual) {
        r.sense = LpSense::kGreaterEqual;
      } else if (r.sense == LpSense::kGreaterEqual) {
        r.sense = LpSense::kLessEqual;
      }
    }
  }

  const int m = static_cast<int>(rows.size());
  int slacks = 0, artificials = 0;
  for (const Row& r : rows) {
    if (r.sense != LpSense::kEqual) ++slacks;
    if (r.sense != LpSense::kLessEqual) ++artificials;
  }
  const int art_begin = nv + slacks;
  const int cols = art_begin + artificials;
  Tableau t(m, cols);
  int next_slack = nv, next_art = art_begin;
  for (int i = 0; i < m; ++i) {
    for (int v = 0; v < nv; ++v) t.at(i, v) = rows[i].coef[v];
    t.rhs(i) = rows[i].rhs;
    if (rows[i].sense == LpSense::kLessEqual) {
      t.at(i, next_slack) = 1;
      t.basis()[i] = next_slack++;
    } else {
      if (rows[i].sense == LpSense::kGreaterEqual) t.at(i, next_slack++) = -1;
      t.at(i, next_art) = 1;
      t.basis()[i] = next_art++;
    }
  }

  int iterations = 0;
  LpSolution sol;
  if (artificials > 0) {
    // Phase one: minimize the artificial sum, priced out of the basis.
    for (int i = 0; i < m; ++i) {
      if (t.basis()[i] < art_begin) continue;
      for (int j = 0; j <= cols; ++j) t.at(m, j) -= t.at(i, j);
      t.at(m, t.basis()[i]) = 0;
    }
    t.optimize(cols, iterations, iteration_limit);
    if (-t.rhs(m) > kLpTolerance) {
      sol.status = LpStatus::kInfeasible;
      return sol;
    }
    // Drive zero-level artificials out where a real column allows it.
    for (int i = 0; i < m; ++i) {
      if (t.basis()[i] < art_begin) continue;
      for (int j = 0; j < art_begin; ++j) {
        if (std::abs(t.at(i, j)) > kPivotEps) {
          t.pivot(i, j);
          break;
        }
      }
    }
  }
  // Phase two objective in terms of the current basis.
  for (int j = 0; j <= cols; ++j) t.at(m, j) = 0;
  for (int v = 0; v < nv; ++v) t.at(m, v) = model.objective[v];
  for (int i = 0; i < m; ++i) {
    const int b = t.basis()[i];
    const double f = t.at(m, b);
    if (f == 0) continue;
    for (int j = 0; j <= cols; ++j) t.at(m, j) -= f * t.at(i, j);
  }
  if (!t.optimize(art_begin, iterations, iteration_limit)) {
    sol.status = LpStatus::kUnbounded;
    return sol;
  }
  sol.status = LpStatus::kOptimal;
  sol.values.assign(nv, 0.0);
  for (int i = 0; i < m; ++i) {
    if (t.basis()[i] < nv) sol.values[t.basis()[i]] = t.rhs(i);
  }
  for (int v = 0; v < nv; ++v) {
    sol.values[v] += model.lower[v];
    sol.objective += model.objective[v] * sol.values[v];
  }
  return sol;
}

}  // namespace cutlab
