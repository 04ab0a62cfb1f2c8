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

#include <gtest/gtest.h>

#include "core/error.hpp"
#include "core/instance.hpp"
#include "core/oracle.hpp"
#include "support/reference.hpp"

namespace kpcst {
namespace {

ErrorCode CodeOf(std::string_view text) {
  try {
    ParseInstance(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return ErrorCode::kInvalidArgument;
}

const FindingStatus* StatusOf(const std::vector<Finding>& f,
                              std::string_view name) {
  for (const Finding& x : f) {
    if (x.name == name) return &x.status;
  }
  return nullptr;
}

TEST(Rationals, ParseAndFormat) {
  EXPECT_EQ(*ParseRational("6/4"), Rational(3, 2));
  EXPECT_EQ(*ParseRational("7"), 7);
  EXPECT_FALSE(ParseRational("1/0"));
  EXPECT_FALSE(ParseRational("-1"));
  EXPECT_FALSE(ParseRational("1.5"));
  EXPECT_FALSE(ParseRational(""));
  EXPECT_EQ(ToString(Rational(6, 4)), "3/2");
  EXPECT_EQ(ToDecimal(Rational(7, 5)), "1.400000");
  EXPECT_EQ(ToDecimal(Rational(2, 3)), "0.666667");
  EXPECT_EQ(ToDecimal(Rational(1, 3), 2), "0.33");
}

TEST(Parse, TwoVertexExample) {
  const Instance inst =
      ParseInstance("kpcst 2 1\nroot 0\nk 2\npenalties 0 10\ne 0 1 1\n");
  EXPECT_EQ(inst.vertex_count(), 2);
  EXPECT_EQ(inst.root, 0);
  EXPECT_EQ(inst.k, 2);
  EXPECT_EQ(inst.penalties[1], 10);
  EXPECT_EQ(inst.graph.CostOf(0, 1), 1);
}

TEST(Parse, KAboveNIsValidationError) {
  EXPECT_EQ(CodeOf("kpcst 2 1\nroot 0\nk 3\npenalties 0 10\ne 0 1 1\n"),
            ErrorCode::kValidation);
}

TEST(Parse, ValidationErrors) {
  EXPECT_EQ(CodeOf("kpcst 2 1\nroot 0\nk 1\npenalties 0 -1\ne 0 1 1\n"),
            ErrorCode::kValidation);
  EXPECT_EQ(CodeOf("kpcst 2 1\nroot 0\nk 1\npenalties 0 1\ne 0 1 -2\n"),
            ErrorCode::kValidation);
  EXPECT_EQ(CodeOf("kpcst 2 1\nroot 0\nk 1\npenalties 0 1\ne 0 2 1\n"),
            ErrorCode::kValidation);
  EXPECT_EQ(CodeOf("kpcst 2 1\nroot 0\nk 1\npenalties 0 1\ne 1 1 1\n"),
            ErrorCode::kValidation);
  EXPECT_EQ(CodeOf("kpcst 2 1\nroot 5\nk 1\npenalties 0 1\ne 0 1 1\n"),
            ErrorCode::kValidation);
  // Disconnected graph.
  EXPECT_EQ(CodeOf("kpcst 3 1\nroot 0\nk 1\npenalties 0 1 1\ne 0 1 1\n"),
            ErrorCode::kValidation);
}

TEST(Parse, ParseErrorsCarryLineNumbers) {
  try {
    ParseInstance("kpcst 2 1\n# comment\nroot 0\nk x\npenalties 0 1\ne 0 1 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_EQ(e.line(), 4);
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
  }
  EXPECT_EQ(CodeOf("kpcst 2 2\nroot 0\nk 1\npenalties 0 1\ne 0 1 1\n"),
            ErrorCode::kParse);
  EXPECT_EQ(CodeOf("graph 2 1\n"), ErrorCode::kParse);
  EXPECT_EQ(CodeOf("kpcst 2 1\nroot 0\nk 1\npenalties 0\ne 0 1 1\n"),
            ErrorCode::kParse);
}

TEST(Parse, ParallelEdgesCollapseToMinimum) {
  const Instance inst = ParseInstance(
      "kpcst 2 3\nroot 0\nk 1\npenalties 0 1\ne 0 1 4\ne 1 0 3/2\ne 0 1 2\n");
  ASSERT_EQ(inst.graph.edges().size(), 1u);
  EXPECT_EQ(inst.graph.CostOf(0, 1), Rational(3, 2));
}

TEST(Serialize, CanonicalForm) {
  const Instance inst = ParseInstance(
      "# unsorted input\nkpcst 3 2\nroot 0\nk 1\npenalties 0 2/4 3\n"
      "e 2 1 6/3\ne 0 1 1\n");
  EXPECT_EQ(SerializeInstance(inst),
            "kpcst 3 2\nroot 0\nk 1\npenalties 0 1/2 3\ne 0 1 1\ne 1 2 2\n");
}

TEST(Serialize, SingleVertexIsHeaderOnly) {
  const Instance inst = ParseInstance("kpcst 1 0\nroot 0\nk 1\npenalties 0\n");
  EXPECT_EQ(SerializeInstance(inst),
            "kpcst 1 0\nroot 0\nk 1\npenalties 0\n");
}

TEST(Serialize, RoundTripOnRandomInstances) {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    Instance inst = reference::RandomMetricInstance(rng, 1, 10);
    if (trial % 3 == 0) {
      inst = GenerateSparse(inst.vertex_count(), inst.k, trial);
      inst.penalties = reference::RandomPenalties(rng, inst.vertex_count(), 50);
    }
    const std::string text = SerializeInstance(inst);
    const Instance back = ParseInstance(text);
    EXPECT_EQ(SerializeInstance(back), text);
    EXPECT_EQ(back.k, inst.k);
    EXPECT_EQ(back.root, inst.root);
    EXPECT_EQ(back.penalties, inst.penalties);
    ASSERT_EQ(back.graph.edges().size(), inst.graph.edges().size());
    for (size_t i = 0; i < inst.graph.edges().size(); ++i) {
      EXPECT_EQ(back.graph.edges()[i].pair(), inst.graph.edges()[i].pair());
      EXPECT_EQ(back.graph.edges()[i].cost, inst.graph.edges()[i].cost);
    }
  }
}

TEST(Generators, SingleVertex) {
  const Instance inst = GenerateEuclidean(1, 1, 5);
  EXPECT_EQ(inst.vertex_count(), 1);
  EXPECT_TRUE(inst.graph.edges().empty());
}

TEST(Generators, DeterministicPerSeed) {
  EXPECT_EQ(SerializeInstance(GenerateEuclidean(9, 4, 77)),
            SerializeInstance(GenerateEuclidean(9, 4, 77)));
  EXPECT_NE(SerializeInstance(GenerateEuclidean(9, 4, 77)),
            SerializeInstance(GenerateEuclidean(9, 4, 78)));
  EXPECT_EQ(SerializeInstance(GenerateSparse(9, 4, 77)),
            SerializeInstance(GenerateSparse(9, 4, 77)));
}

TEST(Generators, EuclideanIsCompleteAndMetric) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance inst = GenerateEuclidean(8, 3, seed);
    EXPECT_TRUE(inst.graph.IsComplete());
    EXPECT_TRUE(CheckTriangleInequality(inst.graph).empty());
    EXPECT_EQ(inst.root, 0);
    EXPECT_NO_THROW(ValidateInstance(inst));
  }
}

TEST(Generators, SparseIsConnected) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance inst = GenerateSparse(9, 3, seed);
    EXPECT_TRUE(inst.graph.IsConnected());
    EXPECT_NO_THROW(ValidateInstance(inst));
  }
}

TEST(Assumptions, MetricInstancePassesStructuralChecks) {
  Instance inst = GenerateSparse(7, 3, 4);
  inst.graph = MetricClosure(inst.graph);
  const auto f = ValidateAssumptions(inst, std::nullopt);
  EXPECT_EQ(*StatusOf(f, "complete_graph"), FindingStatus::kPass);
  EXPECT_EQ(*StatusOf(f, "triangle_inequality"), FindingStatus::kPass);
  EXPECT_EQ(*StatusOf(f, "root_distance_below_opt_pcst"),
            FindingStatus::kSkipped);
  EXPECT_EQ(*StatusOf(f, "min_positive_cost_below_opt"),
            FindingStatus::kSkipped);
}

TEST(Assumptions, PathGraphFailsCompleteness) {
  const Instance inst = ParseInstance(
      "kpcst 3 2\nroot 0\nk 1\npenalties 0 1 1\ne 0 1 1\ne 1 2 1\n");
  const auto f = ValidateAssumptions(inst, std::nullopt);
  EXPECT_EQ(*StatusOf(f, "complete_graph"), FindingStatus::kFail);
  EXPECT_EQ(*StatusOf(f, "triangle_inequality"), FindingStatus::kSkipped);
}

TEST(Assumptions, OracleValuesAreComparedExactly) {
  // Triangle with cost 5 everywhere and penalties 1: OPT_PCST = 2, OPT = 10.
  const Instance inst = ParseInstance(
      "kpcst 3 3\nroot 0\nk 3\npenalties 0 1 1\ne 0 1 5\ne 0 2 5\ne 1 2 5\n");
  const OracleValues ov = ComputeOracleValues(inst);
  EXPECT_EQ(ov.opt_pcst, 2);
  EXPECT_EQ(ov.opt_kpcst, 10);
  const auto f = ValidateAssumptions(inst, ov);
  EXPECT_EQ(*StatusOf(f, "root_distance_below_opt_pcst"), FindingStatus::kWarn);
  EXPECT_EQ(*StatusOf(f, "root_edge_below_opt_pcst"), FindingStatus::kWarn);
  EXPECT_EQ(*StatusOf(f, "min_positive_cost_below_opt"), FindingStatus::kPass);

  // Penalties raised to 100: OPT_PCST = 10 > 5.
  const Instance rich = inst.WithPenalties({0, 100, 100});
  const auto g = ValidateAssumptions(rich, ComputeOracleValues(rich));
  EXPECT_EQ(*StatusOf(g, "root_distance_below_opt_pcst"), FindingStatus::kPass);
}

TEST(SolutionTreeTest, DefectsAreDetected) {
  const Instance inst = ParseInstance(
      "kpcst 3 3\nroot 0\nk 1\npenalties 0 1 1\ne 0 1 5\ne 0 2 5\ne 1 2 5\n");
  const SolutionTree good =
      SolutionTree::Build(inst.graph, inst.penalties, {0, 1}, EdgeSet({{0, 1}}));
  EXPECT_TRUE(TreeDefects(inst, good).empty());
  EXPECT_EQ(good.total, 6);

  SolutionTree no_root =
      SolutionTree::Build(inst.graph, inst.penalties, {1, 2}, EdgeSet({{1, 2}}));
  EXPECT_FALSE(TreeDefects(inst, no_root).empty());

  SolutionTree cycle = SolutionTree::Build(
      inst.graph, inst.penalties, {0, 1, 2}, EdgeSet({{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_FALSE(TreeDefects(inst, cycle).empty());

  SolutionTree wrong_cost = good;
  wrong_cost.total = 1;
  EXPECT_FALSE(TreeDefects(inst, wrong_cost).empty());
}

TEST(SolutionFiles, RoundTripAndCorruption) {
  const Instance inst = ParseInstance(
      "kpcst 3 2\nroot 0\nk 1\npenalties 0 1 1\ne 0 1 1\ne 1 2 1\n");
  const SolutionTree tree = SolutionTree::Build(inst.graph, inst.penalties,
                                                {0, 1, 2},
                                                EdgeSet({{0, 1}, {1, 2}}));
  const std::string text = SerializeSolution(tree);
  const auto back = ParseSolution(inst, text);
  ASSERT_TRUE(std::holds_alternative<SolutionTree>(back));
  EXPECT_TRUE(TreeDefects(inst, std::get<SolutionTree>(back)).empty());
  EXPECT_EQ(std::get<SolutionTree>(back).total, 2);

  // Edge 0-2 is not in the graph.
  const auto bad = ParseSolution(
      inst, "solution tree\nvertices 0 1 2\nedge 0 1\nedge 0 2\n");
  EXPECT_FALSE(TreeDefects(inst, std::get<SolutionTree>(bad)).empty());

  const Tour tour = MakeTour(inst.graph, {0, 1});
  const auto tb = ParseSolution(inst, SerializeSolution(tour));
  ASSERT_TRUE(std::holds_alternative<Tour>(tb));
  EXPECT_EQ(std::get<Tour>(tb).sequence, tour.sequence);
  EXPECT_EQ(std::get<Tour>(tb).cost, 2);
}

TEST(Tours, DegenerateCosts) {
  const Graph g(3, {{0, 1, 3}, {0, 2, 4}, {1, 2, 5}});
  EXPECT_EQ(MakeTour(g, {0}).cost, 0);
  EXPECT_EQ(MakeTour(g, {0, 1}).cost, 6);
  EXPECT_EQ(MakeTour(g, {0, 1, 2}).cost, 12);
}

TEST(Reports, KeyValueBlock) {
  const Instance inst = ParseInstance(
      "kpcst 2 1\nroot 0\nk 2\npenalties 0 10\ne 0 1 1\n");
  SolveReport r;
  r.solver = "x";
  r.problem = "kpcst";
  r.solution = SolutionTree::Build(inst.graph, inst.penalties, {0, 1},
                                   EdgeSet({{0, 1}}));
  r.objective = 1;
  r.termination = Termination::kStep1;
  r.lower_bound = LowerBound{Rational(1, 2), BoundSource::kDual};
  r.wall_ms = 1.5;
  const std::string text = FormatReport(r, false);
  EXPECT_NE(text.find("termination=Step1\n"), std::string::npos);
  EXPECT_NE(text.find("edges=0-1\n"), std::string::npos);
  EXPECT_NE(text.find("lower_bound=1/2\n"), std::string::npos);
  EXPECT_NE(text.find("lower_bound_source=dual\n"), std::string::npos);
  EXPECT_EQ(text.find("wall_ms"), std::string::npos);
  EXPECT_NE(FormatReport(r, true).find("wall_ms="), std::string::npos);
}

TEST(Dot, MarksSolutionRootAndPenalties) {
  const Instance inst = ParseInstance(
      "kpcst 3 3\nroot 0\nk 1\npenalties 0 7/2 1\ne 0 1 5\ne 0 2 5\ne 1 2 5\n");
  const SolutionTree t =
      SolutionTree::Build(inst.graph, inst.penalties, {0, 1}, EdgeSet({{0, 1}}));
  const std::string dot = ToDot(inst, t);
  EXPECT_EQ(dot.rfind("graph kpcst {", 0), 0u);
  EXPECT_NE(dot.find("0 -- 1 [label=\"5\", color=red"), std::string::npos);
  EXPECT_NE(dot.find("1 -- 2 [label=\"5\", color=gray"), std::string::npos);
  EXPECT_NE(dot.find("peripheries=2"), std::string::npos);
  EXPECT_NE(dot.find("pi=7/2"), std::string::npos);
}

}  // namespace
}  // namespace kpcst
