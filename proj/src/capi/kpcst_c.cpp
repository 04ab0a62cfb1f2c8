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

#include "kpcst/kpcst.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/error.hpp"
#include "core/harness.hpp"
#include "core/oracle.hpp"

struct kpcst_instance {
  kpcst::Instance value;
};

struct kpcst_result {
  kpcst::Instance instance;  // kept for DOT rendering
  kpcst::SolveOutput output;
};

namespace {

thread_local std::string g_last_error;

kpcst_status FromCode(kpcst::ErrorCode code) {
  using kpcst::ErrorCode;
  switch (code) {
    case ErrorCode::kParse: return KPCST_ERR_PARSE;
    case ErrorCode::kValidation: return KPCST_ERR_VALIDATION;
    case ErrorCode::kDisconnectedInput: return KPCST_ERR_DISCONNECTED;
    case ErrorCode::kIncompleteGraph: return KPCST_ERR_INCOMPLETE_GRAPH;
    case ErrorCode::kNonMetricGraph: return KPCST_ERR_NON_METRIC;
    case ErrorCode::kInfeasibleK: return KPCST_ERR_INFEASIBLE_K;
    case ErrorCode::kInstanceTooLarge: return KPCST_ERR_TOO_LARGE;
    case ErrorCode::kUndefinedFactor: return KPCST_ERR_UNDEFINED_FACTOR;
    case ErrorCode::kMissingOracle: return KPCST_ERR_MISSING_ORACLE;
    case ErrorCode::kRootMismatch: return KPCST_ERR_ROOT_MISMATCH;
    case ErrorCode::kIterationLimit: return KPCST_ERR_ITERATION_LIMIT;
    case ErrorCode::kInvalidArgument: return KPCST_ERR_INVALID_ARGUMENT;
  }
  return KPCST_ERR_INTERNAL;
}

kpcst_status Fail(kpcst_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
kpcst_status Guard(F&& body) {
  try {
    g_last_error.clear();
    body();
    return KPCST_OK;
  } catch (const kpcst::Error& e) {
    return Fail(FromCode(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(KPCST_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(KPCST_ERR_INTERNAL, e.what());
  }
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void Require(const void* p, const char* what) {
  if (!p) {
    throw kpcst::Error(kpcst::ErrorCode::kInvalidArgument,
                       std::string(what) + " is NULL");
  }
}

kpcst::Problem ToProblem(kpcst_problem p) {
  switch (p) {
    case KPCST_PROBLEM_KPCST: return kpcst::Problem::kKpcst;
    case KPCST_PROBLEM_PCST: return kpcst::Problem::kPcst;
    case KPCST_PROBLEM_KMST: return kpcst::Problem::kKmst;
    case KPCST_PROBLEM_KPCTSP: return kpcst::Problem::kKpctsp;
  }
  throw kpcst::Error(kpcst::ErrorCode::kInvalidArgument, "unknown problem");
}

kpcst::ComposeOptions ToCompose(const kpcst_solve_options& o) {
  kpcst::ComposeOptions out;
  switch (o.kmst_strategy) {
    case KPCST_KMST_EXACT: break;
    case KPCST_KMST_LAGRANGIAN:
      out.kmst.kind = kpcst::KmstStrategy::Kind::kLagrangian;
      break;
    default:
      throw kpcst::Error(kpcst::ErrorCode::kInvalidArgument,
                         "unknown k-MST strategy");
  }
  if (o.kmst_tolerance) {
    auto tol = kpcst::ParseRational(o.kmst_tolerance);
    if (!tol) {
      throw kpcst::Error(kpcst::ErrorCode::kInvalidArgument,
                         std::string("bad tolerance '") + o.kmst_tolerance +
                             "'");
    }
    out.kmst.tolerance = *tol;
  }
  if (o.kmst_max_iterations > 0) out.kmst.max_iterations = o.kmst_max_iterations;
  out.kmst.Validate();
  out.strong_prune = o.strong_prune != 0;
  return out;
}

kpcst::GeneratorOptions ToGenerator(const kpcst_generator_options& o) {
  kpcst::GeneratorOptions g;
  g.coordinate_range = o.coordinate_range;
  g.penalty_min = o.penalty_min;
  g.penalty_max = o.penalty_max;
  g.cost_min = o.cost_min;
  g.cost_max = o.cost_max;
  g.extra_edge_percent = o.extra_edge_percent;
  if (g.coordinate_range < 0 || g.penalty_min < 0 ||
      g.penalty_max < g.penalty_min || g.cost_min < 0 ||
      g.cost_max < g.cost_min || g.extra_edge_percent < 0 ||
      g.extra_edge_percent > 100) {
    throw kpcst::Error(kpcst::ErrorCode::kInvalidArgument,
                       "bad generator ranges");
  }
  return g;
}

}  // namespace

extern "C" {

void kpcst_solve_options_init(kpcst_solve_options* options) {
  if (!options) return;
  options->problem = KPCST_PROBLEM_KPCST;
  options->kmst_strategy = KPCST_KMST_EXACT;
  options->kmst_tolerance = nullptr;
  options->kmst_max_iterations = 0;
  options->strong_prune = 0;
}

void kpcst_generator_options_init(kpcst_generator_options* options) {
  if (!options) return;
  const kpcst::GeneratorOptions d;
  options->sparse = 0;
  options->coordinate_range = d.coordinate_range;
  options->penalty_min = d.penalty_min;
  options->penalty_max = d.penalty_max;
  options->cost_min = d.cost_min;
  options->cost_max = d.cost_max;
  options->extra_edge_percent = d.extra_edge_percent;
}

void kpcst_verify_options_init(kpcst_verify_options* options) {
  if (!options) return;
  kpcst_solve_options_init(&options->solve);
  options->use_oracle = 0;
  options->solution_text = nullptr;
}

void kpcst_bench_options_init(kpcst_bench_options* options) {
  if (!options) return;
  const kpcst::BenchOptions d;
  options->seed = d.seed;
  options->count = d.count;
  options->n_min = d.n_min;
  options->n_max = d.n_max;
  kpcst_solve_options_init(&options->solve);
  kpcst_generator_options_init(&options->generator);
  options->timing = 0;
  options->oracle_cap = d.oracle_cap;
}

const char* kpcst_last_error(void) { return g_last_error.c_str(); }

const char* kpcst_status_name(kpcst_status status) {
  switch (status) {
    case KPCST_OK: return "OK";
    case KPCST_ERR_PARSE: return "ParseError";
    case KPCST_ERR_VALIDATION: return "ValidationError";
    case KPCST_ERR_DISCONNECTED: return "DisconnectedInput";
    case KPCST_ERR_INCOMPLETE_GRAPH: return "IncompleteGraph";
    case KPCST_ERR_NON_METRIC: return "NonMetricGraph";
    case KPCST_ERR_INFEASIBLE_K: return "InfeasibleK";
    case KPCST_ERR_TOO_LARGE: return "InstanceTooLarge";
    case KPCST_ERR_UNDEFINED_FACTOR: return "UndefinedFactor";
    case KPCST_ERR_MISSING_ORACLE: return "MissingOracle";
    case KPCST_ERR_ROOT_MISMATCH: return "RootMismatch";
    case KPCST_ERR_ITERATION_LIMIT: return "IterationLimit";
    case KPCST_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case KPCST_ERR_INTERNAL: return "InternalError";
  }
  return "Unknown";
}

void kpcst_string_free(char* str) { std::free(str); }

kpcst_status kpcst_instance_parse(const char* text, kpcst_instance** out) {
  return Guard([&] {
    Require(text, "text");
    Require(out, "out");
    *out = new kpcst_instance{kpcst::ParseInstance(text)};
  });
}

kpcst_status kpcst_instance_generate(int n, int k, uint64_t seed,
                                     const kpcst_generator_options* options,
                                     kpcst_instance** out) {
  return Guard([&] {
    Require(out, "out");
    kpcst_generator_options o;
    kpcst_generator_options_init(&o);
    if (options) o = *options;
    if (n < 1 || k < 0 || k > n) {
      throw kpcst::Error(kpcst::ErrorCode::kInvalidArgument,
                         "need n >= 1 and 0 <= k <= n");
    }
    const kpcst::GeneratorOptions g = ToGenerator(o);
    *out = new kpcst_instance{o.sparse ? kpcst::GenerateSparse(n, k, seed, g)
                                       : kpcst::GenerateEuclidean(n, k, seed, g)};
  });
}

kpcst_status kpcst_instance_metric_closure(const kpcst_instance* instance,
                                           kpcst_instance** out) {
  return Guard([&] {
    Require(instance, "instance");
    Require(out, "out");
    kpcst::Instance copy = instance->value;
    copy.graph = kpcst::MetricClosure(copy.graph);
    *out = new kpcst_instance{std::move(copy)};
  });
}

kpcst_status kpcst_instance_serialize(const kpcst_instance* instance,
                                      char** out) {
  return Guard([&] {
    Require(instance, "instance");
    Require(out, "out");
    *out = Dup(kpcst::SerializeInstance(instance->value));
  });
}

kpcst_status kpcst_instance_check_assumptions(const kpcst_instance* instance,
                                              int use_oracle, char** out) {
  return Guard([&] {
    Require(instance, "instance");
    Require(out, "out");
    std::optional<kpcst::OracleValues> oracle;
    if (use_oracle) {
      oracle = kpcst::ComputeOracleValues(instance->value, kpcst::kTreeOracleCap);
    }
    *out = Dup(kpcst::FormatFindings(
        kpcst::ValidateAssumptions(instance->value, oracle)));
  });
}

int kpcst_instance_vertex_count(const kpcst_instance* instance) {
  return instance ? instance->value.vertex_count() : -1;
}

int kpcst_instance_edge_count(const kpcst_instance* instance) {
  return instance ? static_cast<int>(instance->value.graph.edges().size())
                  : -1;
}

int kpcst_instance_root(const kpcst_instance* instance) {
  return instance ? instance->value.root : -1;
}

int kpcst_instance_k(const kpcst_instance* instance) {
  return instance ? instance->value.k : -1;
}

void kpcst_instance_free(kpcst_instance* instance) { delete instance; }

kpcst_status kpcst_solve(const kpcst_instance* instance,
                         const kpcst_solve_options* options,
                         kpcst_result** out) {
  return Guard([&] {
    Require(instance, "instance");
    Require(out, "out");
    kpcst_solve_options o;
    kpcst_solve_options_init(&o);
    if (options) o = *options;
    auto* result = new kpcst_result{instance->value, {}};
    try {
      result->output =
          kpcst::Solve(instance->value, ToProblem(o.problem), ToCompose(o));
    } catch (...) {
      delete result;
      throw;
    }
    *out = result;
  });
}

kpcst_status kpcst_result_report(const kpcst_result* result,
                                 int include_timing, char** out) {
  return Guard([&] {
    Require(result, "result");
    Require(out, "out");
    *out = Dup(kpcst::FormatReport(result->output.report, include_timing != 0));
  });
}

kpcst_status kpcst_result_trace(const kpcst_result* result, char** out) {
  return Guard([&] {
    Require(result, "result");
    Require(out, "out");
    *out = Dup(result->output.trace);
  });
}

kpcst_status kpcst_result_solution(const kpcst_result* result, char** out) {
  return Guard([&] {
    Require(result, "result");
    Require(out, "out");
    *out = Dup(kpcst::SerializeSolution(result->output.report.solution));
  });
}

kpcst_status kpcst_result_dot(const kpcst_result* result, char** out) {
  return Guard([&] {
    Require(result, "result");
    Require(out, "out");
    *out = Dup(kpcst::ToDot(result->instance, result->output.report.solution));
  });
}

kpcst_status kpcst_result_objective(const kpcst_result* result, char** out) {
  return Guard([&] {
    Require(result, "result");
    Require(out, "out");
    *out = Dup(kpcst::ToString(result->output.report.objective));
  });
}

int kpcst_result_vertex_count(const kpcst_result* result) {
  if (!result) return -1;
  return std::visit([](const auto& s) { return static_cast<int>(s.size()); },
                    result->output.report.solution);
}

kpcst_termination kpcst_result_termination(const kpcst_result* result) {
  if (!result) return KPCST_TERMINATION_NONE;
  switch (result->output.report.termination) {
    case kpcst::Termination::kStep1: return KPCST_TERMINATION_STEP1;
    case kpcst::Termination::kStep3: return KPCST_TERMINATION_STEP3;
    case kpcst::Termination::kNone: break;
  }
  return KPCST_TERMINATION_NONE;
}

void kpcst_result_free(kpcst_result* result) { delete result; }

kpcst_status kpcst_oracle(const kpcst_instance* instance,
                          kpcst_problem problem, char** out) {
  return Guard([&] {
    Require(instance, "instance");
    Require(out, "out");
    *out = Dup(kpcst::OracleReport(instance->value, ToProblem(problem)));
  });
}

kpcst_status kpcst_verify(const kpcst_instance* instance,
                          const kpcst_verify_options* options,
                          char** findings, int* all_pass) {
  return Guard([&] {
    Require(instance, "instance");
    Require(findings, "findings");
    kpcst_verify_options o;
    kpcst_verify_options_init(&o);
    if (options) o = *options;
    kpcst::VerifyOptions v;
    v.problem = ToProblem(o.solve.problem);
    v.solve = ToCompose(o.solve);
    v.use_oracle = o.use_oracle != 0;
    if (o.solution_text) {
      v.external_solution =
          kpcst::ParseSolution(instance->value, o.solution_text);
    }
    const auto result = kpcst::Verify(instance->value, v);
    *findings = Dup(kpcst::FormatFindings(result));
    if (all_pass) *all_pass = kpcst::AllPass(result) ? 1 : 0;
  });
}

kpcst_status kpcst_bench(const kpcst_bench_options* options, char** csv) {
  return Guard([&] {
    Require(csv, "csv");
    kpcst_bench_options o;
    kpcst_bench_options_init(&o);
    if (options) o = *options;
    kpcst::BenchOptions b;
    b.seed = o.seed;
    b.count = o.count;
    b.n_min = o.n_min;
    b.n_max = o.n_max;
    b.problem = ToProblem(o.solve.problem);
    b.solve = ToCompose(o.solve);
    b.sparse = o.generator.sparse != 0;
    b.generator = ToGenerator(o.generator);
    b.timing = o.timing != 0;
    b.oracle_cap = o.oracle_cap;
    *csv = Dup(kpcst::RunBench(b));
  });
}

}  // extern "C"
