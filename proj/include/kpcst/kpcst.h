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

// C interface to the kpcst solver library: k-prize-collecting Steiner tree
// and tour solvers, exact oracles, verification and benchmarking.
//
// Objects are opaque handles released with their *_free function. Every
// function that can fail returns a kpcst_status; on failure a message is
// available from kpcst_last_error() on the calling thread. Strings returned
// through char** are heap allocated and released with kpcst_string_free().
// All numeric values cross the boundary as exact rational literals ("p" or
// "p/q").

#ifndef KPCST_KPCST_H_
#define KPCST_KPCST_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(KPCST_BUILDING_LIBRARY)
#define KPCST_API __declspec(dllexport)
#else
#define KPCST_API __declspec(dllimport)
#endif
#else
#define KPCST_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kpcst_status {
  KPCST_OK = 0,
  KPCST_ERR_PARSE = 1,
  KPCST_ERR_VALIDATION = 2,
  KPCST_ERR_DISCONNECTED = 3,
  KPCST_ERR_INCOMPLETE_GRAPH = 4,
  KPCST_ERR_NON_METRIC = 5,
  KPCST_ERR_INFEASIBLE_K = 6,
  KPCST_ERR_TOO_LARGE = 7,
  KPCST_ERR_UNDEFINED_FACTOR = 8,
  KPCST_ERR_MISSING_ORACLE = 9,
  KPCST_ERR_ROOT_MISMATCH = 10,
  KPCST_ERR_ITERATION_LIMIT = 11,
  KPCST_ERR_INVALID_ARGUMENT = 12,
  KPCST_ERR_INTERNAL = 13
} kpcst_status;

typedef enum kpcst_problem {
  KPCST_PROBLEM_KPCST = 0,
  KPCST_PROBLEM_PCST = 1,
  KPCST_PROBLEM_KMST = 2,
  KPCST_PROBLEM_KPCTSP = 3
} kpcst_problem;

typedef enum kpcst_kmst_strategy {
  KPCST_KMST_EXACT = 0,
  KPCST_KMST_LAGRANGIAN = 1
} kpcst_kmst_strategy;

typedef enum kpcst_termination {
  KPCST_TERMINATION_NONE = 0,
  KPCST_TERMINATION_STEP1 = 1,
  KPCST_TERMINATION_STEP3 = 3
} kpcst_termination;

typedef struct kpcst_instance kpcst_instance;
typedef struct kpcst_result kpcst_result;

typedef struct kpcst_solve_options {
  kpcst_problem problem;
  kpcst_kmst_strategy kmst_strategy;
  const char* kmst_tolerance;  // rational literal; NULL selects 1/1000
  int kmst_max_iterations;  // <= 0 selects 64
  int strong_prune;  // nonzero enables net-worth pruning
} kpcst_solve_options;

typedef struct kpcst_generator_options {
  int sparse;  // nonzero: random incomplete graph instead of Euclidean
  int coordinate_range;
  int penalty_min;
  int penalty_max;
  int cost_min;
  int cost_max;
  int extra_edge_percent;
} kpcst_generator_options;

typedef struct kpcst_verify_options {
  kpcst_solve_options solve;
  int use_oracle;
  const char* solution_text;  // optional solution file contents to check
} kpcst_verify_options;

typedef struct kpcst_bench_options {
  uint64_t seed;
  int count;
  int n_min;
  int n_max;
  kpcst_solve_options solve;
  kpcst_generator_options generator;
  int timing;
  int oracle_cap;
} kpcst_bench_options;

KPCST_API void kpcst_solve_options_init(kpcst_solve_options* options);
KPCST_API void kpcst_generator_options_init(kpcst_generator_options* options);
KPCST_API void kpcst_verify_options_init(kpcst_verify_options* options);
KPCST_API void kpcst_bench_options_init(kpcst_bench_options* options);

KPCST_API const char* kpcst_last_error(void);
KPCST_API const char* kpcst_status_name(kpcst_status status);
KPCST_API void kpcst_string_free(char* str);

// ---- instances ----

KPCST_API kpcst_status kpcst_instance_parse(const char* text,
                                            kpcst_instance** out);
// options may be NULL for defaults. Root is vertex 0.
KPCST_API kpcst_status kpcst_instance_generate(
    int n, int k, uint64_t seed, const kpcst_generator_options* options,
    kpcst_instance** out);
KPCST_API kpcst_status kpcst_instance_metric_closure(
    const kpcst_instance* instance, kpcst_instance** out);
KPCST_API kpcst_status kpcst_instance_serialize(const kpcst_instance* instance,
                                                char** out);
// One finding per line: "<PASS|FAIL|WARN|SKIPPED|INFO> <name>: <detail>".
KPCST_API kpcst_status kpcst_instance_check_assumptions(
    const kpcst_instance* instance, int use_oracle, char** out);
KPCST_API int kpcst_instance_vertex_count(const kpcst_instance* instance);
KPCST_API int kpcst_instance_edge_count(const kpcst_instance* instance);
KPCST_API int kpcst_instance_root(const kpcst_instance* instance);
KPCST_API int kpcst_instance_k(const kpcst_instance* instance);
KPCST_API void kpcst_instance_free(kpcst_instance* instance);

// ---- solving ----

KPCST_API kpcst_status kpcst_solve(const kpcst_instance* instance,
                                   const kpcst_solve_options* options,
                                   kpcst_result** out);
// Key-value report block; wall time only when include_timing is nonzero.
KPCST_API kpcst_status kpcst_result_report(const kpcst_result* result,
                                           int include_timing, char** out);
// GW event log, one `t=... kind=... subject=...` line per event.
KPCST_API kpcst_status kpcst_result_trace(const kpcst_result* result,
                                          char** out);
// Solution file text (format described in the README).
KPCST_API kpcst_status kpcst_result_solution(const kpcst_result* result,
                                             char** out);
KPCST_API kpcst_status kpcst_result_dot(const kpcst_result* result,
                                        char** out);
KPCST_API kpcst_status kpcst_result_objective(const kpcst_result* result,
                                              char** out);
KPCST_API int kpcst_result_vertex_count(const kpcst_result* result);
KPCST_API kpcst_termination kpcst_result_termination(
    const kpcst_result* result);
KPCST_API void kpcst_result_free(kpcst_result* result);

// ---- oracle, verification, benchmarking ----

KPCST_API kpcst_status kpcst_oracle(const kpcst_instance* instance,
                                    kpcst_problem problem, char** out);
// all_pass is set to 1 when no finding failed.
KPCST_API kpcst_status kpcst_verify(const kpcst_instance* instance,
                                    const kpcst_verify_options* options,
                                    char** findings, int* all_pass);
KPCST_API kpcst_status kpcst_bench(const kpcst_bench_options* options,
                                   char** csv);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // KPCST_KPCST_H_
