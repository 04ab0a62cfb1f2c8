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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "core/compose.hpp"
#include "core/instance.hpp"

namespace kpcst {

enum class Problem { kKpcst, kPcst, kKmst, kKpctsp };

const char* ProblemName(Problem p);
std::optional<Problem> ParseProblem(std::string_view name);

struct SolveOutput {
  SolveReport report;
  std::string trace;  // GW event log when the problem runs GW directly
};

// Dispatches to the solver for `problem`.
SolveOutput Solve(const Instance& instance, Problem problem,
                  const ComposeOptions& options);

// Oracle report block for `problem`.
std::string OracleReport(const Instance& instance, Problem problem);

struct VerifyOptions {
  Problem problem = Problem::kKpcst;
  ComposeOptions solve;
  bool use_oracle = false;
  // Solution to check in addition to the solver's own.
  std::optional<std::variant<SolutionTree, Tour>> external_solution;
};

// Full invariant and certificate suite on one instance. No finding is
// dropped: anything not evaluated is reported as SKIPPED.
std::vector<Finding> Verify(const Instance& instance,
                            const VerifyOptions& options);

bool AllPass(const std::vector<Finding>& findings);

struct BenchOptions {
  std::uint64_t seed = 1;
  int count = 10;
  int n_min = 8;
  int n_max = 8;
  Problem problem = Problem::kKpcst;
  ComposeOptions solve;
  bool sparse = false;  // random incomplete graphs, metric-closed
  bool timing = false;  // fill the ms column
  int oracle_cap = 10;
  GeneratorOptions generator;
};

// CSV with header `id,n,m,k,alg_cost,opt,ratio,step,ms`, one row per
// instance and a final `max` row. Deterministic per options unless timing.
std::string RunBench(const BenchOptions& options);

// Exact ratio rendered with its 6-digit decimal: "7/5 (1.400000)".
std::string FormatRatio(const Rational& ratio);

}  // namespace kpcst
