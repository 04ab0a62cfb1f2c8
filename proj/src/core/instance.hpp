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
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "core/graph.hpp"
#include "core/rational.hpp"

namespace kpcst {

// A k-prize-collecting Steiner tree instance: graph, root, coverage target
// and per-vertex penalties. The root's penalty is stored but never charged.
struct Instance {
  Graph graph;
  Vertex root = 0;
  int k = 0;
  std::vector<Rational> penalties;

  int vertex_count() const { return graph.vertex_count(); }

  // Same graph and root with every penalty replaced.
  Instance WithPenalties(std::vector<Rational> replacement) const;
  Instance WithK(int new_k) const;
};

// Throws kValidation unless: n >= 1, root in range, 0 <= k <= n, one
// nonnegative penalty per vertex, graph connected.
void ValidateInstance(const Instance& instance);

// A rooted subtree with its objective breakdown.
struct SolutionTree {
  std::vector<Vertex> vertices;  // sorted
  EdgeSet edges;
  Rational edge_cost;
  Rational penalty_cost;
  Rational total;

  bool Contains(Vertex v) const;
  int size() const { return static_cast<int>(vertices.size()); }

  // Computes the cost fields from the graph and the given penalties.
  static SolutionTree Build(const Graph& graph,
                            std::span<const Rational> penalties,
                            std::vector<Vertex> vertices, EdgeSet edges);
  // Root alone.
  static SolutionTree RootOnly(const Instance& instance);
};

// Human-readable reasons `tree` is not a feasible rooted tree for
// `instance` (coverage target not included). Empty means valid.
std::vector<std::string> TreeDefects(const Instance& instance,
                                     const SolutionTree& tree,
                                     bool penalties_ignored = false);

// Closed tour (u1, ..., uq, u1) starting at the root. q = 1 costs 0; q = 2
// traverses its edge twice.
struct Tour {
  std::vector<Vertex> sequence;
  Rational cost;

  bool Contains(Vertex v) const;
  int size() const { return static_cast<int>(sequence.size()); }
};

// Cyclic cost of a vertex sequence on a complete graph.
Rational ClosedWalkCost(const Graph& graph, std::span<const Vertex> walk);
Tour MakeTour(const Graph& graph, std::vector<Vertex> sequence);
Rational TourPenalty(const Instance& instance, const Tour& tour);
std::vector<std::string> TourDefects(const Instance& instance,
                                     const Tour& tour);

enum class Termination { kNone, kStep1, kStep3 };
enum class BoundSource { kDual, kOracle };

const char* TerminationName(Termination t);
const char* BoundSourceName(BoundSource s);

struct LowerBound {
  Rational value;
  BoundSource source = BoundSource::kDual;
};

struct SolveReport {
  std::string solver;
  std::string problem;
  std::variant<SolutionTree, Tour> solution;
  Rational objective;
  std::optional<LowerBound> lower_bound;
  std::optional<Rational> certified_factor;
  Termination termination = Termination::kNone;
  double wall_ms = 0.0;
  // Ordered solver-specific details (sub-solver costs, flags).
  std::vector<std::pair<std::string, std::string>> details;

  void Detail(std::string key, std::string value) {
    details.emplace_back(std::move(key), std::move(value));
  }
};

// Key-value text block. Wall time is only printed when include_timing is
// set so that reports are reproducible byte for byte.
std::string FormatReport(const SolveReport& report, bool include_timing);

// Optimal values from the exact oracle, used by the assumption validator
// and the certificate checks.
struct OracleValues {
  Rational opt_kpcst;
  Rational opt_pcst;
  Rational opt_kmst;
  // Smallest edge cost over all optimal k-PCST solutions.
  Rational min_optimal_edge_cost;
};

enum class FindingStatus { kPass, kFail, kWarn, kSkipped, kInfo };
const char* FindingStatusName(FindingStatus s);

struct Finding {
  std::string name;
  FindingStatus status = FindingStatus::kPass;
  std::string detail;
};

std::string FormatFindings(std::span<const Finding> findings);

// ---- file format ----

// Parses the `kpcst` text format. Parallel edges collapse to their minimum
// cost. Throws ParseError (with line) or kValidation.
Instance ParseInstance(std::string_view text);
// Canonical text: edges sorted by (u, v), fractions reduced.
std::string SerializeInstance(const Instance& instance);

// ---- assumptions ----

// One finding per standing assumption (completeness, triangle inequality,
// root distances below OPT_PCST, minimum positive cost below OPT), plus an
// informational note when the root carries a penalty. The OPT-relative
// findings are warnings and need oracle values.
std::vector<Finding> ValidateAssumptions(
    const Instance& instance, const std::optional<OracleValues>& oracle);

// ---- generators ----

struct GeneratorOptions {
  int coordinate_range = 20;
  int penalty_min = 0;
  int penalty_max = 30;
  // GenerateSparse only.
  int cost_min = 1;
  int cost_max = 20;
  int extra_edge_percent = 30;
};

// Complete metric instance on integer points with ceil-rounded Euclidean
// costs. Root is vertex 0. Deterministic per seed.
Instance GenerateEuclidean(int n, int k, std::uint64_t seed,
                           const GeneratorOptions& options = {});

// Connected, typically incomplete instance: random spanning tree plus extra
// random edges. Root is vertex 0. Deterministic per seed.
Instance GenerateSparse(int n, int k, std::uint64_t seed,
                        const GeneratorOptions& options = {});

// ---- solution files ----

// Plain text solution: `solution tree|tour`, `vertices ...`, `edge u v`
// lines or a `tour ...` line.
std::string SerializeSolution(const std::variant<SolutionTree, Tour>& s);
std::variant<SolutionTree, Tour> ParseSolution(const Instance& instance,
                                               std::string_view text);

// Graphviz rendering. Solution edges are red, penalties label vertices and
// the root has a doubled border.
std::string ToDot(const Instance& instance,
                  const std::variant<SolutionTree, Tour>& solution);

}  // namespace kpcst
