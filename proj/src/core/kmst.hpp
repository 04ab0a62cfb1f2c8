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

#include <string>

#include "core/instance.hpp"
#include "core/oracle.hpp"

namespace kpcst {

// Rooted k-MST solvers. The exact strategy enumerates; the Lagrangian one
// prices coverage with a uniform penalty and bisects on it, calling the GW
// solver at every probe.

struct KmstStrategy {
  enum class Kind { kExact, kLagrangian };

  Kind kind = Kind::kExact;
  Rational tolerance{1, 1000};
  int max_iterations = 64;
  int exact_cap = kTreeOracleCap;

  static KmstStrategy Exact() { return {}; }
  static KmstStrategy Lagrangian(Rational tol = Rational(1, 1000),
                                 int max_iter = 64) {
    KmstStrategy s;
    s.kind = Kind::kLagrangian;
    s.tolerance = std::move(tol);
    s.max_iterations = max_iter;
    return s;
  }

  // Throws kInvalidArgument for tolerance <= 0 or max_iterations < 1.
  void Validate() const;
};

const char* KmstStrategyName(KmstStrategy::Kind kind);

struct LagrangianAudit {
  Rational lambda_minus;       // largest probe that covered < k vertices
  Rational lambda_plus;        // smallest probe that covered >= k vertices
  int iterations = 0;
  bool iteration_limit = false;  // stopped on max_iterations, not tolerance
  bool augmented = false;        // result came from the greedy augmentation
  bool non_monotone = false;     // a larger lambda produced a smaller tree
  Rational dual_bound;
};

struct KmstResult {
  SolutionTree tree;  // penalty_cost = 0
  SolveReport report;
  LagrangianAudit audit;  // meaningful for the Lagrangian strategy only
};

// Tree containing the root with at least max(k, 1) vertices. The instance's
// penalties are ignored. Throws kInfeasibleK when k > n.
KmstResult KmstSolve(const Instance& instance, const KmstStrategy& strategy);

struct LagrangianResult {
  SolutionTree tree;
  Rational dual_bound;
  LagrangianAudit audit;
};

LagrangianResult KmstLagrangian(const Graph& graph, Vertex root, int k,
                                const Rational& tolerance, int max_iterations);

}  // namespace kpcst
