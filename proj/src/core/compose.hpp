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

#include <optional>
#include <vector>

#include "core/gw.hpp"
#include "core/instance.hpp"
#include "core/kmst.hpp"

namespace kpcst {

struct ComposeOptions {
  KmstStrategy kmst;
  bool strong_prune = false;
};

struct ComposeResult {
  SolutionTree tree;
  SolveReport report;
  PcstResult pcst;
  std::optional<KmstResult> kmst;  // absent on Step 1 termination
};

// k-PCST by composition:
//   1. GW on the PCST relaxation; return it if it already covers k vertices.
//   2. Otherwise solve the rooted k-MST instance.
//   3. Return the MST of the union of both trees.
// Throws kInfeasibleK when k > n.
ComposeResult SolveKpcst(const Instance& instance,
                         const ComposeOptions& options = {});

// MST of (V_a u V_b, E_a u E_b), duplicates collapsed, costs from the
// instance. Both trees must contain the root.
SolutionTree MergeAndMst(const SolutionTree& a, const SolutionTree& b,
                         const Instance& instance);

// Checks the approximation chain against exact optimal values: 2*OPT after
// Step 1, the merge decomposition and 4*OPT after Step 3 (when the k-MST
// subroutine was within twice its optimum), 3*OPT with an exact k-MST, and
// 3*OPT whenever some optimal solution spends at most OPT/2 on edges.
// Throws kMissingOracle without oracle values.
std::vector<Finding> CertifyRatio(const ComposeResult& result,
                                  const std::optional<OracleValues>& oracle);

}  // namespace kpcst
