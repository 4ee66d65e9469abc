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


// cutlab command-line interface: solve, reduce, verify, gen, bench.
//
// Exit codes: 0 success, 2 infeasible (or over budget), 1 error, 64 usage.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cutlab/error.h"
#include "cutlab/generate.h"
#include "cutlab/io.h"
#include "cutlab/runner.h"

namespace {

using nlohmann::json;
using namespace cutlab;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitUsage = 64;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

std::string report_text(const SolveReport& r) {
  std::ostringstream os;
  os << "problem  " << r.problem << " (" << r.algo;
  if (r.algo == "bisection") os << ", " << r.backend << " backend";
  os << ")\nstatus   " << r.status << "\n";
  if (!r.message.empty()) os << "message  " << r.message << "\n";
  if (r.status == "infeasible") return os.str();
  os << "value    " << r.value << "\nmembers ";
  for (int m : r.members) os << " " << m;
  os << "\n";
  if (r.oracle) os << "oracle   " << *r.oracle << "\n";
  if (r.lower_bound) os << "lp bound " << *r.lower_bound << "\n";
  if (r.ratio) {
    os << "ratio    " << std::fixed << std::setprecision(3) << *r.ratio << " (" << r.ratio_basis
       << ")\n";
  }
  return os.str();
}

Encoded read_solution_file(const std::string& path) {
  try {
    return solution_from_json(json::parse(read_text_file(path)));
  } catch (const json::parse_error& e) {
    throw CutError(ErrorCode::kParseError, path + ": " + e.what());
  } catch (const CutError& e) {
    throw CutError(e.code(), path + ": " + e.detail());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cutlab: connectivity preserving and threshold minimum cuts"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "Solve a cpmc or tmc instance");
  std::string problem, algo = "exact", backend = "exact", in_path, out_path;
  bool as_json = false, use_paper_scales = false;
  solve->add_option("--problem", problem, "cpmnc, cpmec, tmnc or tmec")
      ->required()
      ->check(CLI::IsMember({"cpmnc", "cpmec", "tmnc", "tmec"}));
  solve->add_option("--algo", algo, "exact, lp-rounding, bisection or 2v2-planar")
      ->check(CLI::IsMember({"exact", "lp-rounding", "bisection", "2v2-planar"}));
  solve->add_option("--in", in_path, "Instance file (JSON, or DIMACS by extension)")->required();
  solve->add_option("--backend", backend, "Bisection backend: exact or local-search")
      ->check(CLI::IsMember({"exact", "local-search"}));
  solve->add_flag("--paper-scales", use_paper_scales, "Use n^2 gadget scales for bisection");
  solve->add_flag("--json", as_json, "Print a JSON report");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Build a reduction target and its certificate");
  std::string from, to, cert_path;
  reduce->add_option("--from", from, "setcover, bisection or maxcover")->required();
  reduce->add_option("--to", to, "cpmec, multipartner-cpmec, tmec or interdiction")->required();
  reduce->add_option("--in", in_path, "Source instance")->required();
  reduce->add_option("--out", out_path, "Target instance file")->required();
  reduce->add_option("--cert", cert_path, "Certificate file (default: OUT.cert.json)");

  // verify
  auto* verify = app.add_subcommand("verify", "Check a certificate against two solutions");
  std::string source_sol, target_sol;
  bool optimal_pair = false;
  verify->add_option("--cert", cert_path, "Certificate file")->required();
  verify->add_option("--source-sol", source_sol, "Source solution file")->required();
  verify->add_option("--target-sol", target_sol, "Target solution file")->required();
  verify->add_flag("--optimal", optimal_pair, "Also check the relation between the two values");
  verify->add_flag("--json", as_json, "Print a JSON verdict");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  std::string gen_kind, mode = "edge";
  std::uint64_t seed = 1;
  GenParams params;
  gen->add_option("--kind", gen_kind, "graph, planar, cpmc, tmc, setcover, cover, interdiction")
      ->required()
      ->check(CLI::IsMember({"graph", "planar", "cpmc", "tmc", "setcover", "cover", "interdiction"}));
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_option("--n", params.n, "Nodes, or ground-set size");
  gen->add_option("--k", params.k, "Services, partners or sets");
  gen->add_option("--l", params.l, "Threshold");
  gen->add_option("--destinations", params.destinations, "cpmc destinations");
  gen->add_option("--param", params.param, "Cover cardinality parameter");
  gen->add_option("--tau", params.tau, "Largest cover subset");
  gen->add_option("--density", params.density, "Edge probability");
  gen->add_option("--min-weight", params.min_weight, "Smallest weight");
  gen->add_option("--max-weight", params.max_weight, "Largest weight");
  gen->add_flag("--directed", params.directed, "Directed graph");
  gen->add_option("--mode", mode, "node or edge")->check(CLI::IsMember({"node", "edge"}));
  gen->add_option("--rows", params.rows, "Planar grid rows");
  gen->add_option("--cols", params.cols, "Planar grid columns");
  gen->add_option("--out", out_path, "Output file (default stdout)");

  // bench
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite");
  std::string suite_path;
  int threads = 0;
  bool no_timing = false;
  bench->add_option("--suite", suite_path, "Suite file")->required();
  bench->add_option("--threads", threads, "Worker threads (default CUTLAB_THREADS)");
  bench->add_flag("--json", as_json, "Print a JSON table");
  bench->add_flag("--no-timing", no_timing, "Leave out wall times");
  bench->add_option("--out", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) {
      SolveRequest req;
      req.problem = problem_from_name(problem);
      req.algo = algo_from_name(algo);
      req.backend = backend_from_name(backend);
      req.paper_scales = use_paper_scales;
      const SolveReport rep = run_solve(read_instance_file(in_path), req);
      std::cout << (as_json ? report_to_json(rep).dump(2) + "\n" : report_text(rep));
      return rep.status == "ok" ? kExitOk : kExitInfeasible;
    }
    if (*reduce) {
      const ReductionOutput r = run_reduction(read_instance_file(in_path),
                                              reduction_from_names(from, to));
      if (cert_path.empty()) cert_path = out_path + ".cert.json";
      write_text_file(out_path, serialize_instance(r.target));
      write_text_file(cert_path, r.certificate_json.dump(2) + "\n");
      std::cout << "wrote " << out_path << " and " << cert_path << "\n";
      return kExitOk;
    }
    if (*verify) {
      json cert;
      try {
        cert = json::parse(read_text_file(cert_path));
      } catch (const json::parse_error& e) {
        throw CutError(ErrorCode::kParseError, cert_path + ": " + e.what());
      }
      const Verdict v = verify_certificate_json(cert, read_solution_file(source_sol),
                                                read_solution_file(target_sol), optimal_pair);
      if (as_json) {
        std::cout << json{{"kind", "verdict"}, {"ok", v.ok}, {"violations", v.violations}}.dump(2)
                  << "\n";
      } else {
        std::cout << (v.ok ? "certificate holds\n" : "certificate violated\n");
        for (const auto& msg : v.violations) std::cout << "  " << msg << "\n";
      }
      return v.ok ? kExitOk : kExitError;
    }
    if (*gen) {
      params.mode = cut_kind_from_name(mode);
      emit(serialize_instance(generate_random(gen_kind_from_name(gen_kind), params, seed)),
           out_path);
      return kExitOk;
    }
    if (*bench) {
      const auto cases = load_suite(suite_path);
      const auto reports = run_bench(cases, threads > 0 ? threads : thread_count());
      emit(as_json ? bench_to_json(cases, reports, !no_timing).dump(2) + "\n"
                   : bench_table(cases, reports),
           out_path);
      for (const auto& r : reports) {
        if (r.status == "error") return kExitError;
      }
      return kExitOk;
    }
  } catch (const CutError& e) {
    std::cerr << "cutlab: " << e.what() << "\n";
    return e.code() == ErrorCode::kInvalidParams ? kExitUsage : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "cutlab: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}
