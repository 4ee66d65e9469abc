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


#include "cutlab/runner.h"

#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <sstream>
#include <thread>

#include "cutlab/bisection.h"
#include "cutlab/cpmc.h"
#include "cutlab/error.h"
#include "cutlab/generate.h"
#include "cutlab/lp.h"
#include "cutlab/planar.h"
#include "cutlab/tmc.h"

namespace cutlab {
namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 4> kProblemNames = {"cpmnc", "cpmec", "tmnc", "tmec"};
constexpr std::array<std::string_view, 4> kAlgoNames = {"exact", "lp-rounding", "bisection",
                                                        "2v2-planar"};
constexpr std::array<std::string_view, 2> kBackendNames = {"exact", "local-search"};

template <typename E, std::size_t N>
E lookup(const std::array<std::string_view, N>& names, std::string_view name, const char* what) {
  for (std::size_t i = 0; i < N; ++i) {
    if (names[i] == name) return static_cast<E>(i);
  }
  throw CutError(ErrorCode::kInvalidArgument,
                 std::string("unknown ") + what + " \"" + std::string(name) + "\"");
}

bool infeasible_code(ErrorCode c) {
  return c == ErrorCode::kInfeasible || c == ErrorCode::kNoFiniteCut ||
         c == ErrorCode::kLpInfeasible;
}

[[noreturn]] void mismatch(const std::string& what) {
  throw CutError(ErrorCode::kInvalidArgument, what);
}

// Exact oracle values, nullopt when out of reach.
std::optional<std::int64_t> cpmc_oracle(const CpmcInstance& inst) {
  try {
    return solve_cpmc_exact(inst).weight;
  } catch (const CutError& e) {
    if (e.code() == ErrorCode::kInstanceTooLarge) return std::nullopt;
    throw;
  }
}

std::optional<std::int64_t> tmc_oracle(const TmcInstance& inst) {
  try {
    return solve_tmc_exact(inst).weight;
  } catch (const CutError& e) {
    if (e.code() == ErrorCode::kInstanceTooLarge) return std::nullopt;
    throw;
  }
}

CutSolution solve_cpmc(const CpmcInstance& inst, const SolveRequest& req,
                       std::optional<std::int64_t>& oracle) {
  const CutKind want = req.problem == Problem::kCpmnc ? CutKind::kNode : CutKind::kEdge;
  if (inst.mode != want) {
    mismatch("instance mode is " + std::string(cut_kind_name(inst.mode)) + ", " +
             std::string(problem_name(req.problem)) + " needs " +
             std::string(cut_kind_name(want)));
  }
  switch (req.algo) {
    case Algo::kExact: {
      CutSolution s = solve_cpmc_exact(inst);
      oracle = s.weight;
      return s;
    }
    case Algo::kPlanar2v2: {
      if (req.problem != Problem::kCpmec || inst.graph.directed() || inst.partners.size() != 1 ||
          inst.destinations.size() != 2 || !inst.keep_destinations_connected) {
        mismatch("2v2-planar needs an undirected edge instance with one partner and two "
                 "destinations kept connected");
      }
      const PlanarEmbedding emb = build_embedding(inst.graph);
      CutSolution s = solve_2v2_planar_cpmec(emb, inst.source, inst.partners[0],
                                             inst.destinations[0], inst.destinations[1]);
      oracle = cpmc_oracle(inst);
      return s;
    }
    default:
      mismatch(std::string(algo_name(req.algo)) + " does not solve " +
               std::string(problem_name(req.problem)));
  }
}

CutSolution solve_tmc(const TmcInstance& inst, const SolveRequest& req,
                      std::optional<std::int64_t>& oracle, std::optional<double>& lower) {
  const CutKind want = req.problem == Problem::kTmnc ? CutKind::kNode : CutKind::kEdge;
  if (inst.mode != want) {
    mismatch("instance mode is " + std::string(cut_kind_name(inst.mode)) + ", " +
             std::string(problem_name(req.problem)) + " needs " +
             std::string(cut_kind_name(want)));
  }
  CutSolution s;
  switch (req.algo) {
    case Algo::kExact:
      s = solve_tmc_exact(inst);
      oracle = s.weight;
      return s;
    case Algo::kLpRounding: {
      if (req.problem != Problem::kTmnc) mismatch("lp-rounding solves tmnc only");
      const TmncResult r = solve_tmnc_lp_detailed(inst);
      s = r.cut;
      oracle = tmc_oracle(inst);
      if (!oracle) {
        const LpSolution lp = solve_lp(build_tmnc_lp(inst).model);
        if (lp.status == LpStatus::kOptimal) lower = lp.objective;
      }
      return s;
    }
    case Algo::kBisection: {
      if (req.problem != Problem::kTmec) mismatch("bisection solves tmec only");
      const GadgetScales scales = req.paper_scales ? paper_scales(inst) : minimal_scales(inst);
      BisectionSolver backend;
      if (req.backend == Backend::kExact) {
        backend = [](const Graph& g) { return min_bisection_exact(g); };
      } else {
        backend = [](const Graph& g) { return min_bisection_local(g); };
      }
      s = solve_tmec_via_bisection(inst, backend, scales);
      oracle = tmc_oracle(inst);
      return s;
    }
    default:
      mismatch(std::string(algo_name(req.algo)) + " does not solve " +
               std::string(problem_name(req.problem)));
  }
}

void audit(const InstanceDocument& doc, const CutSolution& cut) {
  bool ok = true;
  if (const auto* c = std::get_if<CpmcInstance>(&doc.payload)) {
    ok = cut_is_feasible(*c, cut.members);
  } else if (const auto* t = std::get_if<TmcInstance>(&doc.payload)) {
    ok = disconnected_services(*t, cut.members) >= t->threshold;
  }
  if (!ok) throw CutError(ErrorCode::kInfeasible, "solver output failed the feasibility audit");
}

json optional_json(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }
json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

constexpr std::array<std::string_view, 4> kReductionNames = {
    "setcover->directed-cpmec", "setcover->multipartner-cpmec", "bisection->tmec",
    "maxcover->interdiction"};

json relation_json(const ValueRelation& r) {
  return {{"scale", r.scale}, {"slack_min", r.slack_min}, {"slack_max", r.slack_max}};
}

}  // namespace

Problem problem_from_name(std::string_view name) {
  return lookup<Problem>(kProblemNames, name, "problem");
}
Algo algo_from_name(std::string_view name) { return lookup<Algo>(kAlgoNames, name, "algorithm"); }
Backend backend_from_name(std::string_view name) {
  return lookup<Backend>(kBackendNames, name, "backend");
}
std::string_view problem_name(Problem p) { return kProblemNames[static_cast<int>(p)]; }
std::string_view algo_name(Algo a) { return kAlgoNames[static_cast<int>(a)]; }
std::string_view backend_name(Backend b) { return kBackendNames[static_cast<int>(b)]; }

SolveReport run_solve(const InstanceDocument& doc, const SolveRequest& req) {
  SolveReport rep;
  rep.problem = problem_name(req.problem);
  rep.algo = algo_name(req.algo);
  rep.backend = backend_name(req.backend);
  const auto start = std::chrono::steady_clock::now();
  const bool cpmc_problem = req.problem == Problem::kCpmnc || req.problem == Problem::kCpmec;
  if (cpmc_problem && doc.kind() != InstanceKind::kCpmc) {
    mismatch(std::string(rep.problem) + " needs a cpmc instance, got " +
             std::string(kind_name(doc.kind())));
  }
  if (!cpmc_problem && doc.kind() != InstanceKind::kTmc) {
    mismatch(std::string(rep.problem) + " needs a tmc instance, got " +
             std::string(kind_name(doc.kind())));
  }
  try {
    CutSolution cut;
    if (cpmc_problem) {
      const auto& inst = std::get<CpmcInstance>(doc.payload);
      rep.budget = inst.budget;
      cut = solve_cpmc(inst, req, rep.oracle);
    } else {
      const auto& inst = std::get<TmcInstance>(doc.payload);
      rep.budget = inst.budget;
      cut = solve_tmc(inst, req, rep.oracle, rep.lower_bound);
    }
    audit(doc, cut);
    rep.kind = cut.kind;
    rep.value = cut.weight;
    rep.members = cut.members;
    if (rep.oracle) {
      rep.ratio_basis = "oracle";
      if (*rep.oracle > 0) {
        rep.ratio = static_cast<double>(rep.value) / static_cast<double>(*rep.oracle);
      } else if (rep.value == 0) {
        rep.ratio = 1.0;
      }
    } else if (rep.lower_bound && *rep.lower_bound > kLpTolerance) {
      rep.ratio_basis = "lp-lower-bound";
      rep.ratio = static_cast<double>(rep.value) / *rep.lower_bound;
    }
    if (rep.budget && rep.value > *rep.budget) {
      rep.status = "over-budget";
      rep.message = "cut weight " + std::to_string(rep.value) + " exceeds budget " +
                    std::to_string(*rep.budget);
    }
  } catch (const CutError& e) {
    if (!infeasible_code(e.code())) throw;
    rep.status = "infeasible";
    rep.message = e.what();
    rep.members.clear();
    rep.value = 0;
  }
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

json report_to_json(const SolveReport& r, bool timing) {
  json j = {{"problem", r.problem},
            {"algo", r.algo},
            {"backend", r.backend},
            {"status", r.status},
            {"message", r.message},
            {"kind", cut_kind_name(r.kind)},
            {"value", r.status == "infeasible" ? json(nullptr) : json(r.value)},
            {"members", r.members},
            {"oracle", optional_json(r.oracle)},
            {"lower_bound", optional_json(r.lower_bound)},
            {"ratio", optional_json(r.ratio)},
            {"ratio_basis", r.ratio_basis},
            {"budget", optional_json(r.budget)}};
  if (timing) j["wall_seconds"] = r.wall_seconds;
  return j;
}

ReductionKind reduction_from_names(std::string_view from, std::string_view to) {
  if (from == "setcover" && (to == "cpmec" || to == "directed-cpmec")) {
    return ReductionKind::kSetCoverDirected;
  }
  if (from == "setcover" && to == "multipartner-cpmec") return ReductionKind::kSetCoverMultipartner;
  if (from == "bisection" && to == "tmec") return ReductionKind::kBisectionTmec;
  if (from == "maxcover" && to == "interdiction") return ReductionKind::kMaxCoverInterdiction;
  throw CutError(ErrorCode::kInvalidArgument,
                 "no reduction from " + std::string(from) + " to " + std::string(to));
}

ReductionOutput run_reduction(const InstanceDocument& source, ReductionKind kind) {
  ReductionOutput out;
  auto need = [&](InstanceKind k) {
    if (source.kind() != k) {
      mismatch("reduction needs a " + std::string(kind_name(k)) + " instance, got " +
               std::string(kind_name(source.kind())));
    }
  };
  switch (kind) {
    case ReductionKind::kSetCoverDirected:
    case ReductionKind::kSetCoverMultipartner: {
      need(InstanceKind::kSetCover);
      const auto& sc = std::get<SetCoverInstance>(source.payload);
      SetCoverGadget gd = kind == ReductionKind::kSetCoverDirected
                              ? reduce_setcover_to_directed_cpmec(sc)
                              : reduce_setcover_to_multipartner_cpmec(sc);
      out.target.payload = std::move(gd.instance);
      out.certificate = std::move(gd.certificate);
      break;
    }
    case ReductionKind::kBisectionTmec: {
      need(InstanceKind::kGraph);
      BisectionTmec r = reduce_bisection_to_tmec(std::get<Graph>(source.payload));
      out.target.payload = std::move(r.instance);
      out.certificate = std::move(r.certificate);
      break;
    }
    case ReductionKind::kMaxCoverInterdiction: {
      need(InstanceKind::kCover);
      CoverInterdiction r = reduce_maxcover_to_interdiction(std::get<CoverInstance>(source.payload));
      out.target.payload = std::move(r.instance);
      out.certificate = std::move(r.certificate);
      break;
    }
  }
  const json source_json = instance_to_json(source);
  out.target.provenance = {{"reduction", kReductionNames[static_cast<int>(kind)]},
                           {"source", source_json}};
  out.certificate_json = {{"format_version", kFormatVersion},
                          {"kind", "certificate"},
                          {"reduction", kReductionNames[static_cast<int>(kind)]},
                          {"relation", relation_json(out.certificate.relation)},
                          {"source", source_json},
                          {"target", instance_to_json(out.target)}};
  return out;
}

Verdict verify_certificate_json(const json& cert, const Encoded& source_solution,
                                const Encoded& target_solution, bool optimal_pair) {
  Verdict v;
  auto fail = [&](const std::string& msg) {
    v.ok = false;
    v.violations.push_back(msg);
  };
  if (!cert.is_object() || cert.value("kind", "") != "certificate") {
    throw CutError(ErrorCode::kSchemaError, "/kind: not a certificate");
  }
  const std::string name = cert.value("reduction", "");
  int index = -1;
  for (std::size_t i = 0; i < kReductionNames.size(); ++i) {
    if (kReductionNames[i] == name) index = static_cast<int>(i);
  }
  if (index < 0) throw CutError(ErrorCode::kSchemaError, "/reduction: unknown \"" + name + "\"");
  if (!cert.contains("source")) throw CutError(ErrorCode::kSchemaError, "/source: missing");
  const InstanceDocument source = instance_from_json(cert["source"]);
  const ReductionOutput rebuilt = run_reduction(source, static_cast<ReductionKind>(index));

  const json want_rel = relation_json(rebuilt.certificate.relation);
  const json have_rel = cert.value("relation", json());
  for (const auto& [key, value] : want_rel.items()) {
    if (!have_rel.is_object() || !have_rel.contains(key) || have_rel[key] != value) {
      fail("/relation/" + key + ": certificate has " +
           (have_rel.is_object() && have_rel.contains(key) ? have_rel[key].dump() : "nothing") +
           ", the reduction gives " + value.dump());
    }
  }
  if (cert.value("target", json()) != rebuilt.certificate_json["target"]) {
    fail("/target: stored instance differs from the rebuilt reduction");
  }
  const Verdict inner =
      verify_certificate(rebuilt.certificate, source_solution, target_solution, optimal_pair);
  for (const auto& msg : inner.violations) fail(msg);
  return v;
}

Encoded solution_from_json(const json& j) {
  const json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("solution")) throw CutError(ErrorCode::kSchemaError, "/solution: missing");
    arr = &j["solution"];
  }
  if (!arr->is_array()) throw CutError(ErrorCode::kSchemaError, "/solution: expected an array");
  Encoded out;
  for (std::size_t i = 0; i < arr->size(); ++i) {
    const json& x = (*arr)[i];
    if (!x.is_number_integer()) {
      throw CutError(ErrorCode::kSchemaError, "/solution/" + std::to_string(i) + ": expected an integer");
    }
    out.push_back(x.get<int>());
  }
  return out;
}

std::vector<BenchCase> load_suite(const std::string& path) {
  json suite;
  try {
    suite = json::parse(read_text_file(path));
  } catch (const json::parse_error& e) {
    throw CutError(ErrorCode::kParseError, path + ": " + e.what());
  }
  if (!suite.is_object() || !suite.contains("cases") || !suite["cases"].is_array()) {
    throw CutError(ErrorCode::kSchemaError, path + ": /cases: expected an array");
  }
  const std::filesystem::path dir = std::filesystem::path(path).parent_path();
  std::vector<BenchCase> cases;
  for (std::size_t i = 0; i < suite["cases"].size(); ++i) {
    const json& c = suite["cases"][i];
    const std::string where = path + ": /cases/" + std::to_string(i);
    if (!c.is_object()) throw CutError(ErrorCode::kSchemaError, where + ": expected an object");
    BenchCase bc;
    try {
      if (c.contains("instance")) {
        bc.doc = read_instance_file((dir / c["instance"].get<std::string>()).string());
        bc.name = c.value("name", c["instance"].get<std::string>());
      } else if (c.contains("generate")) {
        const json& g = c["generate"];
        const GenKind kind = gen_kind_from_name(g.at("kind").get<std::string>());
        const GenParams params = gen_params_from_json(g.value("params", json::object()));
        const auto seed = g.value("seed", std::uint64_t{1});
        bc.doc = generate_random(kind, params, seed);
        bc.name = c.value("name", std::string(gen_kind_name(kind)) + "-" + std::to_string(seed));
      } else {
        throw CutError(ErrorCode::kSchemaError, "needs \"instance\" or \"generate\"");
      }
      bc.request.problem = problem_from_name(c.at("problem").get<std::string>());
      bc.request.algo = algo_from_name(c.value("algo", "exact"));
      bc.request.backend = backend_from_name(c.value("backend", "exact"));
      bc.request.paper_scales = c.value("paper_scales", false);
    } catch (const json::exception& e) {
      throw CutError(ErrorCode::kSchemaError, where + ": " + e.what());
    } catch (const CutError& e) {
      throw CutError(e.code(), where + ": " + e.detail());
    }
    cases.push_back(std::move(bc));
  }
  return cases;
}

int thread_count() {
  if (const char* env = std::getenv("CUTLAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 1024) return static_cast<int>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<SolveReport> run_bench(const std::vector<BenchCase>& cases, int threads) {
  std::vector<SolveReport> reports(cases.size());
  std::vector<std::string> errors(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      try {
        reports[i] = run_solve(cases[i].doc, cases[i].request);
      } catch (const CutError& e) {
        errors[i] = e.what();
      }
    }
  };
  const int n = std::max(1, std::min<int>(threads, static_cast<int>(cases.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (!errors[i].empty()) {
      reports[i].problem = problem_name(cases[i].request.problem);
      reports[i].algo = algo_name(cases[i].request.algo);
      reports[i].backend = backend_name(cases[i].request.backend);
      reports[i].status = "error";
      reports[i].message = errors[i];
    }
  }
  return reports;
}

json bench_to_json(const std::vector<BenchCase>& cases, const std::vector<SolveReport>& reports,
                   bool timing) {
  json rows = json::array();
  for (std::size_t i = 0; i < cases.size(); ++i) {
    json row = report_to_json(reports[i], timing);
    row["instance"] = cases[i].name;
    rows.push_back(std::move(row));
  }
  return {{"format_version", kFormatVersion}, {"kind", "bench"}, {"rows", rows}};
}

std::string bench_table(const std::vector<BenchCase>& cases,
                        const std::vector<SolveReport>& reports) {
  std::ostringstream os;
  os << std::left << std::setw(24) << "instance" << std::setw(13) << "algo" << std::setw(12)
     << "status" << std::right << std::setw(12) << "value" << std::setw(12) << "oracle"
     << std::setw(10) << "ratio" << std::setw(12) << "wall_ms" << "\n";
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const SolveReport& r = reports[i];
    std::ostringstream ratio;
    if (r.ratio) {
      ratio << std::fixed << std::setprecision(3) << *r.ratio;
      if (r.ratio_basis == "lp-lower-bound") ratio << "*";
    } else {
      ratio << "-";
    }
    os << std::left << std::setw(24) << cases[i].name << std::setw(13) << r.algo << std::setw(12)
       << r.status << std::right << std::setw(12)
       << (r.status == "ok" || r.status == "over-budget" ? std::to_string(r.value) : "-")
       << std::setw(12) << (r.oracle ? std::to_string(*r.oracle) : "-") << std::setw(10)
       << ratio.str() << std::setw(12) << std::fixed << std::setprecision(2)
       << r.wall_seconds * 1000 << "\n";
  }
  os << "(* ratio against the LP lower bound)\n";
  return os.str();
}

}  // namespace cutlab
