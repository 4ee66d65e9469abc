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


#ifndef CUTLAB_RUNNER_H_
#define CUTLAB_RUNNER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cutlab/io.h"
#include "cutlab/reductions.h"

namespace cutlab {

enum class Problem { kCpmnc, kCpmec, kTmnc, kTmec };
enum class Algo { kExact, kLpRounding, kBisection, kPlanar2v2 };
enum class Backend { kExact, kLocalSearch };

// Name parsers throw kInvalidArgument.
Problem problem_from_name(std::string_view name);
Algo algo_from_name(std::string_view name);
Backend backend_from_name(std::string_view name);
std::string_view problem_name(Problem p);
std::string_view algo_name(Algo a);
std::string_view backend_name(Backend b);

struct SolveRequest {
  Problem problem = Problem::kCpmec;
  Algo algo = Algo::kExact;
  Backend backend = Backend::kExact;  // bisection only
  bool paper_scales = false;          // bisection only; default is minimal_scales
};

struct SolveReport {
  std::string problem;
  std::string algo;
  std::string backend;
  std::string status = "ok";  // ok, infeasible, over-budget
  std::string message;
  CutKind kind = CutKind::kEdge;
  std::int64_t value = 0;
  std::vector<int> members;
  std::optional<std::int64_t> oracle;     // exact optimum when within reach
  std::optional<double> lower_bound;      // LP bound when the oracle is not
  std::optional<double> ratio;
  std::string ratio_basis = "none";       // oracle, lp-lower-bound, none
  std::optional<std::int64_t> budget;
  double wall_seconds = 0;
};

// Solves, audits the cut against the instance, and compares with the oracle
// when it is within reach. Infeasibility is reported in `status`; other
// failures throw.
SolveReport run_solve(const InstanceDocument& doc, const SolveRequest& request);

nlohmann::json report_to_json(const SolveReport& report, bool timing = true);

enum class ReductionKind { kSetCoverDirected, kSetCoverMultipartner, kBisectionTmec,
                           kMaxCoverInterdiction };

// Accepted pairs: setcover->cpmec, setcover->multipartner-cpmec,
// bisection->tmec, maxcover->interdiction. Throws kInvalidArgument.
ReductionKind reduction_from_names(std::string_view from, std::string_view to);

struct ReductionOutput {
  InstanceDocument target;
  ReductionCertificate certificate;
  nlohmann::json certificate_json;  // source, target, relation
};

ReductionOutput run_reduction(const InstanceDocument& source, ReductionKind kind);

// Rebuilds the reduction from the stored source, checks the stored fields
// against it, then runs verify_certificate.
Verdict verify_certificate_json(const nlohmann::json& cert, const Encoded& source_solution,
                                const Encoded& target_solution, bool optimal_pair = false);

// Accepts {"solution": [...]} or a bare array. Throws kSchemaError.
Encoded solution_from_json(const nlohmann::json& j);

struct BenchCase {
  std::string name;
  InstanceDocument doc;
  SolveRequest request;
};

// Suite file: {"format_version": 1, "cases": [{"name", "instance" (path,
// relative to the suite) or "generate" {"kind", "seed", "params"},
// "problem", "algo", "backend", "paper_scales"}]}.
std::vector<BenchCase> load_suite(const std::string& path);

// CUTLAB_THREADS when set to a positive integer, else the hardware count.
int thread_count();

// Cases run in parallel; results keep suite order.
std::vector<SolveReport> run_bench(const std::vector<BenchCase>& cases, int threads);

nlohmann::json bench_to_json(const std::vector<BenchCase>& cases,
                             const std::vector<SolveReport>& reports, bool timing = true);
std::string bench_table(const std::vector<BenchCase>& cases,
                        const std::vector<SolveReport>& reports);

}  // namespace cutlab

#endif  // CUTLAB_RUNNER_H_
