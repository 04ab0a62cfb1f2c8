// Copyright 2026 The kpcst Authors
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

// kpcst command-line tool. Verbs: solve, verify, bench, oracle, gen.
// Exit codes: 0 ok, 1 verification failure, 2 bad input or flags,
// 3 solver error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "kpcst/kpcst.h"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitSolver = 3;

struct CliFailure {
  int code;
  std::string message;
};

int ExitCodeFor(kpcst_status s) {
  switch (s) {
    case KPCST_ERR_PARSE:
    case KPCST_ERR_VALIDATION:
    case KPCST_ERR_DISCONNECTED:
    case KPCST_ERR_INVALID_ARGUMENT:
      return kExitBadInput;
    default:
      return kExitSolver;
  }
}

void Check(kpcst_status s) {
  if (s != KPCST_OK) {
    throw CliFailure{ExitCodeFor(s), std::string(kpcst_status_name(s)) + ": " +
                                         kpcst_last_error()};
  }
}

struct InstanceDeleter {
  void operator()(kpcst_instance* p) const { kpcst_instance_free(p); }
};
struct ResultDeleter {
  void operator()(kpcst_result* p) const { kpcst_result_free(p); }
};
using InstancePtr = std::unique_ptr<kpcst_instance, InstanceDeleter>;
using ResultPtr = std::unique_ptr<kpcst_result, ResultDeleter>;

// Takes ownership of a library string.
std::string Take(char* s) {
  std::string out = s ? s : "";
  kpcst_string_free(s);
  return out;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliFailure{kExitBadInput, "cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    throw CliFailure{kExitBadInput, "cannot write '" + path + "'"};
  }
}

InstancePtr LoadInstance(const std::string& path, bool metric_closure) {
  const std::string text = ReadFile(path);
  kpcst_instance* raw = nullptr;
  Check(kpcst_instance_parse(text.c_str(), &raw));
  InstancePtr inst(raw);
  if (metric_closure) {
    kpcst_instance* closed = nullptr;
    Check(kpcst_instance_metric_closure(inst.get(), &closed));
    inst.reset(closed);
  }
  return inst;
}

const std::map<std::string, kpcst_problem> kProblems = {
    {"kpcst", KPCST_PROBLEM_KPCST},
    {"pcst", KPCST_PROBLEM_PCST},
    {"kmst", KPCST_PROBLEM_KMST},
    {"kpctsp", KPCST_PROBLEM_KPCTSP}};

const std::map<std::string, kpcst_kmst_strategy> kStrategies = {
    {"exact", KPCST_KMST_EXACT}, {"lagrangian", KPCST_KMST_LAGRANGIAN}};

// Flags shared by the solving verbs.
struct SolveFlags {
  kpcst_problem problem = KPCST_PROBLEM_KPCST;
  kpcst_kmst_strategy strategy = KPCST_KMST_EXACT;
  std::string tolerance;
  int max_iterations = 0;
  bool strong_prune = false;

  void Register(CLI::App* cmd) {
    cmd->add_option("--problem", problem, "kpcst | pcst | kmst | kpctsp")
        ->transform(CLI::CheckedTransformer(kProblems, CLI::ignore_case));
    cmd->add_option("--kmst-strategy", strategy, "exact | lagrangian")
        ->transform(CLI::CheckedTransformer(kStrategies, CLI::ignore_case));
    cmd->add_option("--kmst-tol", tolerance,
                    "Lagrangian bisection tolerance, rational (default 1/1000)");
    cmd->add_option("--kmst-max-iter", max_iterations,
                    "Lagrangian bisection iteration cap (default 64)")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--strong-prune", strong_prune,
                  "extra net-worth pruning after GW pruning");
  }

  kpcst_solve_options Options() const {
    kpcst_solve_options o;
    kpcst_solve_options_init(&o);
    o.problem = problem;
    o.kmst_strategy = strategy;
    o.kmst_tolerance = tolerance.empty() ? nullptr : tolerance.c_str();
    o.kmst_max_iterations = max_iterations;
    o.strong_prune = strong_prune ? 1 : 0;
    return o;
  }
};

struct GenFlags {
  bool sparse = false;
  int coordinate_range = 20;
  int penalty_min = 0;
  int penalty_max = 30;
  int cost_min = 1;
  int cost_max = 20;
  int extra_edge_percent = 30;

  void Register(CLI::App* cmd) {
    cmd->add_flag("--sparse", sparse,
                  "random incomplete graphs instead of Euclidean ones");
    cmd->add_option("--coord-range", coordinate_range)->capture_default_str();
    cmd->add_option("--penalty-min", penalty_min)->capture_default_str();
    cmd->add_option("--penalty-max", penalty_max)->capture_default_str();
    cmd->add_option("--cost-min", cost_min)->capture_default_str();
    cmd->add_option("--cost-max", cost_max)->capture_default_str();
    cmd->add_option("--extra-edges", extra_edge_percent,
                    "percent of non-tree pairs added (sparse)")
        ->capture_default_str();
  }

  kpcst_generator_options Options() const {
    kpcst_generator_options o;
    kpcst_generator_options_init(&o);
    o.sparse = sparse ? 1 : 0;
    o.coordinate_range = coordinate_range;
    o.penalty_min = penalty_min;
    o.penalty_max = penalty_max;
    o.cost_min = cost_min;
    o.cost_max = cost_max;
    o.extra_edge_percent = extra_edge_percent;
    return o;
  }
};

// First non-passing line of a findings block, for the exit-1 diagnostic.
std::optional<std::string> FirstFailure(const std::string& findings) {
  std::istringstream in(findings);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("FAIL ", 0) == 0) return line;
  }
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-prize-collecting Steiner tree and tour solver"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string out_path;
  bool metric_closure = false;
  bool timing = false;
  bool use_oracle = false;
  std::uint64_t seed = 1;

  // solve
  SolveFlags solve_flags;
  std::string dot_path;
  std::string trace_path;
  CLI::App* solve = app.add_subcommand("solve", "solve one instance");
  solve->add_option("--instance", instance_path, "instance file")->required();
  solve_flags.Register(solve);
  solve->add_flag("--metric-closure", metric_closure,
                  "replace costs by shortest-path distances first");
  solve->add_option("--emit-dot", dot_path, "write a Graphviz rendering");
  solve->add_option("--out", out_path, "write the solution file");
  solve->add_option("--trace", trace_path,
                    "write the GW event log ('-' for stdout)");
  solve->add_flag("--timing", timing, "include wall time in the report");

  // verify
  SolveFlags verify_flags;
  std::string solution_path;
  CLI::App* verify =
      app.add_subcommand("verify", "run the invariant and certificate suite");
  verify->add_option("--instance", instance_path, "instance file")->required();
  verify_flags.Register(verify);
  verify->add_flag("--metric-closure", metric_closure);
  verify->add_flag("--oracle", use_oracle,
                   "compare against exact optima (small instances)");
  verify->add_option("--solution", solution_path,
                     "also check this solution file");

  // bench
  SolveFlags bench_flags;
  GenFlags bench_gen;
  int count = 10;
  int n_fixed = 0;
  int n_min = 8;
  int n_max = 8;
  int oracle_cap = 10;
  CLI::App* bench = app.add_subcommand("bench", "randomized sweep as CSV");
  bench_flags.Register(bench);
  bench_gen.Register(bench);
  bench->add_option("--seed", seed)->capture_default_str();
  bench->add_option("--count", count)->check(CLI::NonNegativeNumber);
  auto* n_opt = bench->add_option("--n", n_fixed, "fixed vertex count")
                    ->check(CLI::PositiveNumber);
  bench->add_option("--n-min", n_min)->check(CLI::PositiveNumber)->excludes(n_opt);
  bench->add_option("--n-max", n_max)->check(CLI::PositiveNumber)->excludes(n_opt);
  bench->add_option("--oracle-cap", oracle_cap,
                    "largest n compared against the oracle")
      ->capture_default_str();
  bench->add_flag("--timing", timing, "fill the ms column");
  bench->add_option("--out", out_path, "write CSV here instead of stdout");

  // oracle
  kpcst_problem oracle_problem = KPCST_PROBLEM_KPCST;
  CLI::App* oracle = app.add_subcommand("oracle", "exact optimum by enumeration");
  oracle->add_option("--instance", instance_path, "instance file")->required();
  oracle->add_option("--problem", oracle_problem)
      ->transform(CLI::CheckedTransformer(kProblems, CLI::ignore_case));
  oracle->add_flag("--metric-closure", metric_closure);

  // gen
  GenFlags gen_flags;
  int gen_n = 8;
  int gen_k = -1;
  CLI::App* gen = app.add_subcommand("gen", "write a random instance");
  gen->add_option("--n", gen_n)->check(CLI::PositiveNumber)->capture_default_str();
  gen->add_option("--k", gen_k, "coverage target (default n/2)");
  gen->add_option("--seed", seed)->capture_default_str();
  gen_flags.Register(gen);
  gen->add_flag("--metric-closure", metric_closure);
  gen->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitBadInput;
  }

  try {
    if (*solve) {
      InstancePtr inst = LoadInstance(instance_path, metric_closure);
      const kpcst_solve_options o = solve_flags.Options();
      kpcst_result* raw = nullptr;
      Check(kpcst_solve(inst.get(), &o, &raw));
      ResultPtr result(raw);
      char* s = nullptr;
      Check(kpcst_result_report(result.get(), timing ? 1 : 0, &s));
      std::cout << Take(s);
      if (!dot_path.empty()) {
        Check(kpcst_result_dot(result.get(), &s));
        WriteFile(dot_path, Take(s));
      }
      if (!out_path.empty()) {
        Check(kpcst_result_solution(result.get(), &s));
        WriteFile(out_path, Take(s));
      }
      if (!trace_path.empty()) {
        Check(kpcst_result_trace(result.get(), &s));
        WriteFile(trace_path, Take(s));
      }
      return 0;
    }

    if (*verify) {
      InstancePtr inst = LoadInstance(instance_path, metric_closure);
      std::string solution_text;
      kpcst_verify_options o;
      kpcst_verify_options_init(&o);
      o.solve = verify_flags.Options();
      o.use_oracle = use_oracle ? 1 : 0;
      if (!solution_path.empty()) {
        solution_text = ReadFile(solution_path);
        o.solution_text = solution_text.c_str();
      }
      char* s = nullptr;
      int all_pass = 0;
      Check(kpcst_verify(inst.get(), &o, &s, &all_pass));
      const std::string findings = Take(s);
      std::cout << findings;
      if (!all_pass) {
        std::cerr << "first violation: "
                  << FirstFailure(findings).value_or("unknown") << "\n";
        return kExitVerifyFailed;
      }
      return 0;
    }

    if (*bench) {
      kpcst_bench_options o;
      kpcst_bench_options_init(&o);
      o.seed = seed;
      o.count = count;
      o.n_min = n_fixed > 0 ? n_fixed : n_min;
      o.n_max = n_fixed > 0 ? n_fixed : n_max;
      o.solve = bench_flags.Options();
      o.generator = bench_gen.Options();
      o.timing = timing ? 1 : 0;
      o.oracle_cap = oracle_cap;
      char* s = nullptr;
      Check(kpcst_bench(&o, &s));
      WriteFile(out_path.empty() ? "-" : out_path, Take(s));
      return 0;
    }

    if (*oracle) {
      InstancePtr inst = LoadInstance(instance_path, metric_closure);
      char* s = nullptr;
      Check(kpcst_oracle(inst.get(), oracle_problem, &s));
      std::cout << Take(s);
      return 0;
    }

    if (*gen) {
      const int k = gen_k >= 0 ? gen_k : gen_n / 2;
      const kpcst_generator_options g = gen_flags.Options();
      kpcst_instance* raw = nullptr;
      Check(kpcst_instance_generate(gen_n, k, seed, &g, &raw));
      InstancePtr inst(raw);
      if (metric_closure) {
        kpcst_instance* closed = nullptr;
        Check(kpcst_instance_metric_closure(inst.get(), &closed));
        inst.reset(closed);
      }
      char* s = nullptr;
      Check(kpcst_instance_serialize(inst.get(), &s));
      WriteFile(out_path.empty() ? "-" : out_path, Take(s));
      return 0;
    }
  } catch (const CliFailure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  }
  return kExitBadInput;
}
