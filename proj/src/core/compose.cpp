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

#include "core/compose.hpp"

#include <algorithm>
#include <chrono>

#include "core/error.hpp"

namespace kpcst {

SolutionTree MergeAndMst(const SolutionTree& a, const SolutionTree& b,
                         const Instance& instance) {
  if (!a.Contains(instance.root) || !b.Contains(instance.root)) {
    throw Error(ErrorCode::kRootMismatch, "both trees must contain the root");
  }
  std::vector<Vertex> vertices;
  std::set_union(a.vertices.begin(), a.vertices.end(), b.vertices.begin(),
                 b.vertices.end(), std::back_inserter(vertices));
  std::vector<VertexPair> pairs = a.edges.pairs();
  pairs.insert(pairs.end(), b.edges.begin(), b.edges.end());
  EdgeSet merged(std::move(pairs));
  EdgeSet tree = KruskalMst(instance.graph, vertices, merged);
  return SolutionTree::Build(instance.graph, instance.penalties,
                             std::move(vertices), std::move(tree));
}

ComposeResult SolveKpcst(const Instance& instance,
                         const ComposeOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (instance.k > instance.vertex_count()) {
    throw Error(ErrorCode::kInfeasibleK,
                "k = " + std::to_string(instance.k) + " exceeds n = " +
                    std::to_string(instance.vertex_count()));
  }
  ValidateInstance(instance);
  options.kmst.Validate();

  ComposeResult out;
  out.pcst = GwPcst(instance, GwOptions{options.strong_prune});
  SolveReport& r = out.report;
  r.solver = "kpcst_compose";
  r.problem = "kpcst";
  const int n = instance.vertex_count();
  const Rational dual_total = out.pcst.dual.Total();
  r.Detail("pcst_total", ToString(out.pcst.tree.total));
  r.Detail("pcst_vertices", std::to_string(out.pcst.tree.size()));
  r.Detail("dual_sum", ToString(dual_total));
  r.Detail("kmst_strategy", KmstStrategyName(options.kmst.kind));

  Rational bound = dual_total;
  if (out.pcst.tree.size() >= instance.k) {
    out.tree = out.pcst.tree;
    r.termination = Termination::kStep1;
    r.certified_factor =
        n >= 2 ? Rational(2) - Rational(1, n - 1) : Rational(1);
  } else {
    out.kmst = KmstSolve(instance, options.kmst);
    const KmstResult& kmst = *out.kmst;
    out.tree = MergeAndMst(out.pcst.tree, kmst.tree, instance);
    r.termination = Termination::kStep3;
    r.Detail("kmst_cost", ToString(kmst.tree.edge_cost));
    r.Detail("kmst_vertices", std::to_string(kmst.tree.size()));
    if (kmst.report.lower_bound) {
      r.Detail("kmst_lower_bound", ToString(kmst.report.lower_bound->value));
      // OPT_kMST <= OPT, so its bound is a bound on OPT as well.
      if (kmst.report.lower_bound->value > bound) {
        bound = kmst.report.lower_bound->value;
      }
    }
    for (const auto& [key, value] : kmst.report.details) {
      r.Detail("kmst_" + key, value);
    }
    // alpha * OPT + 2 * OPT with alpha = 1 for the exact subroutine.
    if (options.kmst.kind == KmstStrategy::Kind::kExact) {
      r.certified_factor = Rational(3);
    }
  }
  r.lower_bound = LowerBound{bound, BoundSource::kDual};
  r.solution = out.tree;
  r.objective = out.tree.total;
  r.wall_ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  return out;
}

std::vector<Finding> CertifyRatio(const ComposeResult& result,
                                  const std::optional<OracleValues>& oracle) {
  if (!oracle) {
    throw Error(ErrorCode::kMissingOracle,
                "ratio certification needs oracle values");
  }
  std::vector<Finding> findings;
  const Rational& total = result.tree.total;
  const Rational& opt = oracle->opt_kpcst;
  auto check = [&](std::string name, const Rational& lhs, const Rational& rhs,
                   const std::string& label) {
    const bool ok = lhs <= rhs;
    findings.push_back({std::move(name),
                        ok ? FindingStatus::kPass : FindingStatus::kFail,
                        ToString(lhs) + " <= " + label + " = " + ToString(rhs) +
                            " (slack " + ToString(rhs - lhs) + ")"});
  };
  auto skip = [&](std::string name, std::string why) {
    findings.push_back({std::move(name), FindingStatus::kSkipped, std::move(why)});
  };

  if (result.report.lower_bound) {
    check("lower_bound_below_opt", result.report.lower_bound->value, opt, "OPT");
  }
  check("pcst_within_2opt_pcst", result.pcst.tree.total, 2 * oracle->opt_pcst,
        "2*OPT_PCST");

  if (result.report.termination == Termination::kStep1) {
    check("lemma3_step1_2opt", total, 2 * opt, "2*OPT");
    check("theorem_4opt", total, 4 * opt, "4*OPT");
    skip("merge_decomposition", "terminated at Step1");
  } else {
    skip("lemma3_step1_2opt", "terminated at Step3");
    const KmstResult& kmst = *result.kmst;
    const Rational& kmst_cost = kmst.tree.edge_cost;
    check("merge_decomposition", total, kmst_cost + result.pcst.tree.total,
          "c(F_kMST) + total(F_PCST)");
    if (kmst_cost <= 2 * oracle->opt_kmst) {
      check("theorem_4opt", total, 4 * opt, "4*OPT");
    } else {
      skip("theorem_4opt", "k-MST subroutine returned " + ToString(kmst_cost) +
                               " > 2*OPT_kMST = " +
                               ToString(2 * oracle->opt_kmst));
    }
    if (kmst_cost == oracle->opt_kmst) {
      check("exact_kmst_3opt", total, 3 * opt, "3*OPT");
    } else {
      skip("exact_kmst_3opt", "k-MST subroutine was not optimal");
    }
  }

  if (2 * oracle->min_optimal_edge_cost <= opt) {
    check("proposition_3opt", total, 3 * opt, "3*OPT");
  } else {
    skip("proposition_3opt", "no optimal solution with edge cost <= OPT/2");
  }
  return findings;
}

}  // namespace kpcst
