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

#include "core/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "core/error.hpp"
#include "core/gw.hpp"
#include "core/kmst.hpp"
#include "core/oracle.hpp"
#include "core/random.hpp"
#include "core/tour.hpp"

namespace kpcst {

const char* ProblemName(Problem p) {
  switch (p) {
    case Problem::kKpcst: return "kpcst";
    case Problem::kPcst: return "pcst";
    case Problem::kKmst: return "kmst";
    case Problem::kKpctsp: return "kpctsp";
  }
  return "?";
}

std::optional<Problem> ParseProblem(std::string_view name) {
  if (name == "kpcst") return Problem::kKpcst;
  if (name == "pcst") return Problem::kPcst;
  if (name == "kmst") return Problem::kKmst;
  if (name == "kpctsp") return Problem::kKpctsp;
  return std::nullopt;
}

SolveOutput Solve(const Instance& instance, Problem problem,
                  const ComposeOptions& options) {
  SolveOutput out;
  switch (problem) {
    case Problem::kKpcst: {
      ComposeResult r = SolveKpcst(instance, options);
      out.trace = FormatTrace(r.pcst.trace, r.pcst.dual);
      out.report = std::move(r.report);
      break;
    }
    case Problem::kPcst: {
      PcstResult r = GwPcst(instance, GwOptions{options.strong_prune});
      out.trace = FormatTrace(r.trace, r.dual);
      out.report = std::move(r.report);
      break;
    }
    case Problem::kKmst:
      out.report = KmstSolve(instance, options.kmst).report;
      break;
    case Problem::kKpctsp: {
      KpctspResult r = SolveKpctsp(instance, options);
      out.trace = FormatTrace(r.ptsp.pcst.trace, r.ptsp.pcst.dual);
      out.report = std::move(r.report);
      break;
    }
  }
  return out;
}

namespace {

std::string Join(std::span<const Vertex> vs) {
  std::string out;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(vs[i]);
  }
  return out;
}

std::string TreeLines(const SolutionTree& t) {
  std::string edges;
  for (const VertexPair& p : t.edges) {
    if (!edges.empty()) edges += ' ';
    edges += std::to_string(p.first) + "-" + std::to_string(p.second);
  }
  return "vertices=" + Join(t.vertices) + "\nedges=" + edges +
         "\nedge_cost=" + ToString(t.edge_cost) +
         "\npenalty_cost=" + ToString(t.penalty_cost) + "\n";
}

}  // namespace

std::string OracleReport(const Instance& instance, Problem problem) {
  std::string out = "problem=" + std::string(ProblemName(problem)) + "\n";
  switch (problem) {
    case Problem::kKpcst: {
      const TreeOracleResult r = OracleKpcst(instance);
      out += "opt=" + ToString(r.opt) + "\n" + TreeLines(r.tree);
      out += "min_optimal_edge_cost=" + ToString(r.min_optimal_edge_cost) + "\n";
      break;
    }
    case Problem::kPcst: {
      const TreeOracleResult r = OraclePcst(instance);
      out += "opt=" + ToString(r.opt) + "\n" + TreeLines(r.tree);
      break;
    }
    case Problem::kKmst: {
      const TreeOracleResult r = OracleKmst(instance);
      out += "opt=" + ToString(r.opt) + "\n" + TreeLines(r.tree);
      break;
    }
    case Problem::kKpctsp: {
      const TourOracleResult r = OracleKpctsp(instance);
      out += "opt=" + ToString(r.opt) + "\ntour=" + Join(r.tour.sequence) +
             "\ntour_cost=" + ToString(r.tour.cost) + "\n";
      break;
    }
  }
  return out;
}

bool AllPass(const std::vector<Finding>& findings) {
  return std::none_of(findings.begin(), findings.end(), [](const Finding& f) {
    return f.status == FindingStatus::kFail;
  });
}

namespace {

class FindingList {
 public:
  void Check(std::string name, bool ok, std::string detail = {}) {
    items_.push_back({std::move(name),
                      ok ? FindingStatus::kPass : FindingStatus::kFail,
                      std::move(detail)});
  }
  void Leq(std::string name, const Rational& lhs, const Rational& rhs,
           const std::string& label) {
    Check(std::move(name), lhs <= rhs,
          ToString(lhs) + " <= " + label + " = " + ToString(rhs) + " (slack " +
              ToString(rhs - lhs) + ")");
  }
  void Skip(std::string name, std::string why) {
    items_.push_back({std::move(name), FindingStatus::kSkipped, std::move(why)});
  }
  void Add(Finding f) { items_.push_back(std::move(f)); }
  std::vector<Finding> Take() { return std::move(items_); }

 private:
  std::vector<Finding> items_;
};

std::string Defects(const std::vector<std::string>& d) {
  std::string out;
  for (const auto& s : d) out += (out.empty() ? "" : "; ") + s;
  return out;
}

void AddAssumptions(FindingList& list, const Instance& instance,
                    const std::optional<OracleValues>& oracle) {
  for (Finding f : ValidateAssumptions(instance, oracle)) {
    // Assumptions inform; they are not verification failures.
    if (f.status == FindingStatus::kFail) f.status = FindingStatus::kWarn;
    f.name = "assumption_" + f.name;
    list.Add(std::move(f));
  }
}

void AddDualChecks(FindingList& list, const Instance& instance,
                   const PcstResult& pcst) {
  int events = 0;
  std::string first_defect;
  GwGrow(instance, [&](const DualState& dual, const GrowthTrace&) {
    ++events;
    if (!first_defect.empty()) return;
    const auto defects = DualDefects(instance, dual);
    if (!defects.empty()) {
      first_defect = "after event " + std::to_string(events) + ": " + defects[0];
    }
  });
  list.Check("dual_feasibility_every_event", first_defect.empty(),
             first_defect.empty() ? std::to_string(events) + " events checked"
                                  : first_defect);
  if (instance.vertex_count() < 2) {
    list.Skip("gw_theorem", "factor 2 - 1/(n-1) undefined for n < 2");
  } else {
    const GuaranteeCheck c =
        VerifyGwGuarantee(pcst.tree, pcst.dual, instance.vertex_count());
    list.Check("gw_theorem", c.holds,
               ToString(c.lhs) + " <= " + ToString(c.rhs) + " (slack " +
                   ToString(c.slack) + ")");
  }
}

void AddExternal(FindingList& list, const Instance& instance,
                 const VerifyOptions& options,
                 const std::optional<Rational>& opt) {
  if (!options.external_solution) return;
  const auto& s = *options.external_solution;
  if (const auto* tree = std::get_if<SolutionTree>(&s)) {
    auto defects = TreeDefects(instance, *tree);
    if (tree->size() < instance.k) defects.push_back("fewer than k vertices");
    list.Check("external_solution_feasibility", defects.empty(),
               Defects(defects));
    if (opt && defects.empty()) {
      list.Leq("external_solution_not_below_opt", *opt, tree->total, "total");
    }
  } else {
    const Tour& tour = std::get<Tour>(s);
    auto defects = TourDefects(instance, tour);
    if (tour.size() < std::max(instance.k, 1)) {
      defects.push_back("fewer than k vertices");
    }
    list.Check("external_solution_feasibility", defects.empty(),
               Defects(defects));
  }
}

std::optional<OracleValues> MaybeOracle(FindingList& list,
                                        const Instance& instance,
                                        const VerifyOptions& options,
                                        int cap) {
  if (!options.use_oracle) return std::nullopt;
  if (instance.vertex_count() > cap) {
    list.Skip("oracle", "n = " + std::to_string(instance.vertex_count()) +
                            " exceeds oracle cap " + std::to_string(cap));
    return std::nullopt;
  }
  return ComputeOracleValues(instance, cap);
}

std::vector<Finding> VerifyTree(const Instance& instance,
                                const VerifyOptions& options) {
  FindingList list;
  const auto oracle = MaybeOracle(list, instance, options, kTreeOracleCap);
  AddAssumptions(list, instance, oracle);

  const auto skip_oracle = [&](std::initializer_list<const char*> names) {
    for (const char* name : names) {
      list.Skip(name, options.use_oracle ? "oracle unavailable"
                                         : "needs --oracle");
    }
  };

  if (options.problem == Problem::kKmst) {
    const KmstResult r = KmstSolve(instance, options.solve.kmst);
    auto defects = TreeDefects(instance, r.tree, /*penalties_ignored=*/true);
    if (r.tree.size() < std::max(instance.k, 1)) {
      defects.push_back("fewer than k vertices");
    }
    list.Check("feasibility", defects.empty(), Defects(defects));
    if (oracle) {
      list.Leq("lemma1", oracle->opt_kmst, oracle->opt_kpcst, "OPT");
      if (options.solve.kmst.kind == KmstStrategy::Kind::kExact) {
        list.Check("kmst_exact_matches_oracle",
                   r.tree.edge_cost == oracle->opt_kmst,
                   ToString(r.tree.edge_cost) + " vs " +
                       ToString(oracle->opt_kmst));
      } else {
        list.Leq("kmst_within_2opt", r.tree.edge_cost, 2 * oracle->opt_kmst,
                 "2*OPT_kMST");
      }
      list.Leq("kmst_lower_bound", r.report.lower_bound->value,
               oracle->opt_kmst, "OPT_kMST");
    } else {
      skip_oracle({"lemma1", "kmst_within_2opt", "kmst_lower_bound"});
    }
    AddExternal(list, instance, options,
                oracle ? std::optional<Rational>(oracle->opt_kmst) : std::nullopt);
    return list.Take();
  }

  if (options.problem == Problem::kPcst) {
    const PcstResult r = GwPcst(instance, GwOptions{options.solve.strong_prune});
    const auto defects = TreeDefects(instance, r.tree);
    list.Check("feasibility", defects.empty(), Defects(defects));
    AddDualChecks(list, instance, r);
    if (oracle) {
      list.Leq("weak_duality", r.dual.Total(), oracle->opt_pcst, "OPT_PCST");
      list.Leq("pcst_within_2opt_pcst", r.tree.total, 2 * oracle->opt_pcst,
               "2*OPT_PCST");
      list.Leq("lemma2", oracle->opt_pcst, oracle->opt_kpcst, "OPT");
    } else {
      skip_oracle({"weak_duality", "pcst_within_2opt_pcst", "lemma2"});
    }
    AddExternal(list, instance, options,
                oracle ? std::optional<Rational>(oracle->opt_pcst) : std::nullopt);
    return list.Take();
  }

  const ComposeResult r = SolveKpcst(instance, options.solve);
  auto defects = TreeDefects(instance, r.tree);
  if (r.tree.size() < instance.k) defects.push_back("fewer than k vertices");
  EdgeSet allowed = r.pcst.tree.edges;
  if (r.kmst) {
    for (const VertexPair& p : r.kmst->tree.edges) allowed.Insert(p);
  }
  for (const VertexPair& p : r.tree.edges) {
    if (!allowed.Contains(p)) {
      defects.push_back("edge outside E_PCST u E_kMST");
      break;
    }
  }
  list.Check("feasibility", defects.empty(), Defects(defects));
  AddDualChecks(list, instance, r.pcst);
  if (oracle) {
    list.Leq("weak_duality", r.pcst.dual.Total(), oracle->opt_pcst, "OPT_PCST");
    list.Leq("lemma1", oracle->opt_kmst, oracle->opt_kpcst, "OPT");
    list.Leq("lemma2", oracle->opt_pcst, oracle->opt_kpcst, "OPT");
    for (Finding f : CertifyRatio(r, oracle)) list.Add(std::move(f));
  } else {
    skip_oracle({"weak_duality", "lemma1", "lemma2", "lemma3_step1_2opt",
                 "theorem_4opt", "proposition_3opt"});
  }
  AddExternal(list, instance, options,
              oracle ? std::optional<Rational>(oracle->opt_kpcst) : std::nullopt);
  return list.Take();
}

std::vector<Finding> VerifyTour(const Instance& instance,
                                const VerifyOptions& options) {
  FindingList list;
  const auto oracle = MaybeOracle(list, instance, options, kTourOracleCap);
  AddAssumptions(list, instance, oracle);
  const KpctspResult r = SolveKpctsp(instance, options.solve);
  auto defects = TourDefects(instance, r.tour);
  if (r.tour.size() < std::max(instance.k, 1)) {
    defects.push_back("fewer than k vertices");
  }
  list.Check("feasibility", defects.empty(), Defects(defects));
  list.Leq("tour_merge_inequality", r.tour.cost,
           r.ktsp.cost + r.ptsp.tour.cost, "p_kTSP + p_PTSP");
  list.Leq("tour_objective_decomposition", r.objective,
           r.ktsp.cost + r.ptsp.objective, "p_kTSP + objective_PTSP");
  list.Check("shortcut_steps_non_increasing", r.shortcuts.AllNonIncreasing(),
             std::to_string(r.shortcuts.deltas.size()) + " steps");
  std::optional<Rational> opt;
  if (oracle) {
    const TourOracleResult best = OracleKpctsp(instance);
    opt = best.opt;
    list.Leq("tour_theorem_4opt", r.objective, 4 * best.opt, "4*OPT");
    const TourOracleResult ptsp = OraclePtsp(instance);
    list.Leq("ptsp_within_2opt", r.ptsp.objective, 2 * ptsp.opt, "2*OPT_PTSP");
    if (options.solve.kmst.kind == KmstStrategy::Kind::kExact) {
      Instance no_penalty = instance.WithPenalties(
          std::vector<Rational>(instance.vertex_count(), Rational(0)));
      const TourOracleResult ktsp = OracleKpctsp(no_penalty);
      list.Leq("ktsp_within_2opt", r.ktsp.cost, 2 * ktsp.opt, "2*OPT_kTSP");
    } else {
      list.Skip("ktsp_within_2opt", "k-MST subroutine is not exact");
    }
  } else {
    for (const char* name :
         {"tour_theorem_4opt", "ptsp_within_2opt", "ktsp_within_2opt"}) {
      list.Skip(name, options.use_oracle ? "oracle unavailable"
                                         : "needs --oracle");
    }
  }
  AddExternal(list, instance, options, opt);
  return list.Take();
}

}  // namespace

std::vector<Finding> Verify(const Instance& instance,
                            const VerifyOptions& options) {
  ValidateInstance(instance);
  return options.problem == Problem::kKpctsp ? VerifyTour(instance, options)
                                             : VerifyTree(instance, options);
}

std::string FormatRatio(const Rational& ratio) {
  return ToString(ratio) + " (" + ToDecimal(ratio) + ")";
}

std::string RunBench(const BenchOptions& options) {
  if (options.count < 0 || options.n_min < 1 || options.n_max < options.n_min) {
    throw Error(ErrorCode::kInvalidArgument, "bad bench size flags");
  }
  std::string csv = "id,n,m,k,alg_cost,opt,ratio,step,ms\n";
  std::optional<Rational> max_ratio;
  bool unbounded = false;
  Rng rng(options.seed);
  for (int id = 0; id < options.count; ++id) {
    const int n = static_cast<int>(rng.Uniform(options.n_min, options.n_max));
    const int k_min = options.problem == Problem::kKpctsp ||
                              options.problem == Problem::kKmst
                          ? 1
                          : 0;
    const int k = static_cast<int>(rng.Uniform(k_min, n));
    const auto instance_seed = static_cast<std::uint64_t>(
        rng.Uniform(0, INT64_MAX));
    Instance inst =
        options.sparse
            ? GenerateSparse(n, k, instance_seed, options.generator)
            : GenerateEuclidean(n, k, instance_seed, options.generator);
    if (options.sparse) inst.graph = MetricClosure(inst.graph);

    const auto start = std::chrono::steady_clock::now();
    const SolveOutput out = Solve(inst, options.problem, options.solve);
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();

    std::optional<Rational> opt;
    const int cap = std::min(options.oracle_cap,
                             options.problem == Problem::kKpctsp
                                 ? kTourOracleCap
                                 : kTreeOracleCap);
    if (n <= cap) {
      switch (options.problem) {
        case Problem::kKpcst: opt = OracleKpcst(inst).opt; break;
        case Problem::kPcst: opt = OraclePcst(inst).opt; break;
        case Problem::kKmst: opt = OracleKmst(inst).opt; break;
        case Problem::kKpctsp: opt = OracleKpctsp(inst).opt; break;
      }
    }
    std::string ratio_cell;
    if (opt) {
      if (sgn(*opt) == 0) {
        if (sgn(out.report.objective) == 0) {
          ratio_cell = FormatRatio(Rational(1));
          if (!max_ratio || *max_ratio < 1) max_ratio = Rational(1);
        } else {
          ratio_cell = "inf";
          unbounded = true;
        }
      } else {
        const Rational ratio = out.report.objective / *opt;
        ratio_cell = FormatRatio(ratio);
        if (!max_ratio || ratio > *max_ratio) max_ratio = ratio;
      }
    }
    char ms_buf[32] = "-";
    if (options.timing) std::snprintf(ms_buf, sizeof ms_buf, "%.3f", ms);
    csv += std::to_string(id) + "," + std::to_string(n) + "," +
           std::to_string(inst.graph.edges().size()) + "," +
           std::to_string(k) + "," + ToString(out.report.objective) + "," +
           (opt ? ToString(*opt) : "") + "," + ratio_cell + "," +
           TerminationName(out.report.termination) + "," + ms_buf + "\n";
  }
  csv += "max,,,,,,";
  if (unbounded) {
    csv += "inf";
  } else if (max_ratio) {
    csv += FormatRatio(*max_ratio);
  }
  csv += ",,\n";
  return csv;
}

}  // namespace kpcst
