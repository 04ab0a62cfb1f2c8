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

#include "core/instance.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "core/error.hpp"
#include "core/random.hpp"

namespace kpcst {

Instance Instance::WithPenalties(std::vector<Rational> replacement) const {
  Instance out = *this;
  out.penalties = std::move(replacement);
  return out;
}

Instance Instance::WithK(int new_k) const {
  Instance out = *this;
  out.k = new_k;
  return out;
}

void ValidateInstance(const Instance& instance) {
  const int n = instance.vertex_count();
  if (n < 1) throw Error(ErrorCode::kValidation, "instance needs n >= 1");
  if (instance.root < 0 || instance.root >= n) {
    throw Error(ErrorCode::kValidation,
                "root " + std::to_string(instance.root) + " out of range");
  }
  if (instance.k < 0 || instance.k > n) {
    throw Error(ErrorCode::kValidation,
                "k = " + std::to_string(instance.k) + " outside [0, " +
                    std::to_string(n) + "]");
  }
  if (static_cast<int>(instance.penalties.size()) != n) {
    throw Error(ErrorCode::kValidation, "expected one penalty per vertex");
  }
  for (const Rational& p : instance.penalties) {
    if (sgn(p) < 0) throw Error(ErrorCode::kValidation, "negative penalty");
  }
  if (!instance.graph.IsConnected()) {
    throw Error(ErrorCode::kValidation, "graph is not connected");
  }
}

// ---- SolutionTree ----

bool SolutionTree::Contains(Vertex v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

SolutionTree SolutionTree::Build(const Graph& graph,
                                 std::span<const Rational> penalties,
                                 std::vector<Vertex> vertices, EdgeSet edges) {
  SolutionTree t;
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  t.vertices = std::move(vertices);
  t.edges = std::move(edges);
  t.edge_cost = TotalCost(graph, t.edges);
  t.penalty_cost = 0;
  for (int v = 0; v < static_cast<int>(penalties.size()); ++v) {
    if (!t.Contains(v)) t.penalty_cost += penalties[v];
  }
  t.total = t.edge_cost + t.penalty_cost;
  return t;
}

SolutionTree SolutionTree::RootOnly(const Instance& instance) {
  return Build(instance.graph, instance.penalties, {instance.root}, {});
}

std::vector<std::string> TreeDefects(const Instance& instance,
                                     const SolutionTree& tree,
                                     bool penalties_ignored) {
  std::vector<std::string> defects;
  if (!tree.Contains(instance.root)) defects.push_back("root not in tree");
  if (!std::is_sorted(tree.vertices.begin(), tree.vertices.end())) {
    defects.push_back("vertex list not sorted");
  }
  for (Vertex v : tree.vertices) {
    if (v < 0 || v >= instance.vertex_count()) {
      defects.push_back("vertex id out of range");
      return defects;
    }
  }
  if (!tree.edges.IsSubsetOf(instance.graph)) {
    defects.push_back("edge not in graph");
    return defects;
  }
  if (!IsTreeOn(tree.vertices, tree.edges)) {
    defects.push_back("edges do not form a tree on the vertex set");
  }
  if (tree.edge_cost != TotalCost(instance.graph, tree.edges)) {
    defects.push_back("edge_cost mismatch");
  }
  Rational penalty = 0;
  if (!penalties_ignored) {
    for (int v = 0; v < instance.vertex_count(); ++v) {
      if (!tree.Contains(v)) penalty += instance.penalties[v];
    }
  }
  if (tree.penalty_cost != penalty) defects.push_back("penalty_cost mismatch");
  if (tree.total != tree.edge_cost + tree.penalty_cost) {
    defects.push_back("total mismatch");
  }
  return defects;
}

// ---- Tour ----

bool Tour::Contains(Vertex v) const {
  return std::find(sequence.begin(), sequence.end(), v) != sequence.end();
}

Rational ClosedWalkCost(const Graph& graph, std::span<const Vertex> walk) {
  Rational sum = 0;
  const size_t q = walk.size();
  for (size_t i = 0; i < q; ++i) {
    const Vertex a = walk[i];
    const Vertex b = walk[(i + 1) % q];
    if (a != b) sum += graph.CostOf(a, b);
  }
  return sum;
}

Tour MakeTour(const Graph& graph, std::vector<Vertex> sequence) {
  Tour t;
  t.cost = ClosedWalkCost(graph, sequence);
  t.sequence = std::move(sequence);
  return t;
}

Rational TourPenalty(const Instance& instance, const Tour& tour) {
  std::vector<char> seen(instance.vertex_count(), 0);
  for (Vertex v : tour.sequence) seen[v] = 1;
  Rational sum = 0;
  for (int v = 0; v < instance.vertex_count(); ++v) {
    if (!seen[v]) sum += instance.penalties[v];
  }
  return sum;
}

std::vector<std::string> TourDefects(const Instance& instance,
                                     const Tour& tour) {
  std::vector<std::string> defects;
  if (tour.sequence.empty()) {
    defects.push_back("empty tour");
    return defects;
  }
  if (tour.sequence.front() != instance.root) {
    defects.push_back("tour does not start at root");
  }
  std::vector<char> seen(instance.vertex_count(), 0);
  for (Vertex v : tour.sequence) {
    if (v < 0 || v >= instance.vertex_count()) {
      defects.push_back("vertex id out of range");
      return defects;
    }
    if (seen[v]) defects.push_back("vertex repeated: " + std::to_string(v));
    seen[v] = 1;
  }
  const size_t q = tour.sequence.size();
  for (size_t i = 0; i < q && q > 1; ++i) {
    if (!instance.graph.HasEdge(tour.sequence[i],
                                tour.sequence[(i + 1) % q])) {
      defects.push_back("tour step is not an edge");
      return defects;
    }
  }
  if (tour.cost != ClosedWalkCost(instance.graph, tour.sequence)) {
    defects.push_back("tour cost mismatch");
  }
  return defects;
}

const char* TerminationName(Termination t) {
  switch (t) {
    case Termination::kNone: return "None";
    case Termination::kStep1: return "Step1";
    case Termination::kStep3: return "Step3";
  }
  return "None";
}

const char* BoundSourceName(BoundSource s) {
  return s == BoundSource::kDual ? "dual" : "oracle";
}

const char* FindingStatusName(FindingStatus s) {
  switch (s) {
    case FindingStatus::kPass: return "PASS";
    case FindingStatus::kFail: return "FAIL";
    case FindingStatus::kWarn: return "WARN";
    case FindingStatus::kSkipped: return "SKIPPED";
    case FindingStatus::kInfo: return "INFO";
  }
  return "?";
}

std::string FormatFindings(std::span<const Finding> findings) {
  std::string out;
  for (const Finding& f : findings) {
    out += FindingStatusName(f.status);
    out += ' ';
    out += f.name;
    if (!f.detail.empty()) out += ": " + f.detail;
    out += '\n';
  }
  return out;
}

// ---- parsing ----

namespace {

std::vector<std::string> Tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

Rational ReadValue(const std::string& tok, int line, const char* what) {
  if (!tok.empty() && tok.front() == '-' && ParseRational(tok.substr(1))) {
    throw Error(ErrorCode::kValidation, "line " + std::to_string(line) +
                                            ": negative " + what);
  }
  auto value = ParseRational(tok);
  if (!value) {
    throw ParseError(line, std::string("malformed ") + what + " '" + tok + "'");
  }
  return *value;
}

long ReadInt(const std::string& tok, int line, const char* what) {
  auto value = ReadValue(tok, line, what);
  if (value.get_den() != 1 || !value.get_num().fits_slong_p()) {
    throw ParseError(line, std::string(what) + " must be an integer");
  }
  return value.get_num().get_si();
}

struct Line {
  int number;
  std::vector<std::string> tokens;
};

}  // namespace

Instance ParseInstance(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    auto toks = Tokens(raw);
    if (!toks.empty()) lines.push_back({number, std::move(toks)});
    pos = end + 1;
  }

  auto expect = [&](size_t idx, const char* keyword,
                    size_t min_args) -> const Line& {
    if (idx >= lines.size()) {
      throw ParseError(number, std::string("missing '") + keyword + "' line");
    }
    const Line& l = lines[idx];
    if (l.tokens[0] != keyword) {
      throw ParseError(l.number, std::string("expected '") + keyword +
                                     "', got '" + l.tokens[0] + "'");
    }
    if (l.tokens.size() < min_args + 1) {
      throw ParseError(l.number, std::string("too few fields on '") +
                                     keyword + "' line");
    }
    return l;
  };

  const Line& header = expect(0, "kpcst", 2);
  if (header.tokens.size() != 3) {
    throw ParseError(header.number, "header must be 'kpcst <n> <m>'");
  }
  const long n = ReadInt(header.tokens[1], header.number, "vertex count");
  const long m = ReadInt(header.tokens[2], header.number, "edge count");
  if (n < 1) throw Error(ErrorCode::kValidation, "vertex count must be >= 1");

  const Line& root_line = expect(1, "root", 1);
  const long root = ReadInt(root_line.tokens[1], root_line.number, "root");
  const Line& k_line = expect(2, "k", 1);
  const long k = ReadInt(k_line.tokens[1], k_line.number, "k");
  const Line& pen_line = expect(3, "penalties", 0);
  if (static_cast<long>(pen_line.tokens.size()) - 1 != n) {
    throw ParseError(pen_line.number,
                     "expected " + std::to_string(n) + " penalties");
  }
  std::vector<Rational> penalties;
  for (size_t i = 1; i < pen_line.tokens.size(); ++i) {
    penalties.push_back(
        ReadValue(pen_line.tokens[i], pen_line.number, "penalty"));
  }

  if (static_cast<long>(lines.size()) - 4 != m) {
    const int at = lines.size() > 4 ? lines.back().number : pen_line.number;
    throw ParseError(at, "expected " + std::to_string(m) + " edge lines, got " +
                             std::to_string(lines.size() - 4));
  }
  std::map<VertexPair, Rational> collapsed;
  for (size_t i = 4; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens[0] != "e" || l.tokens.size() != 4) {
      throw ParseError(l.number, "edge line must be 'e <u> <v> <cost>'");
    }
    const long u = ReadInt(l.tokens[1], l.number, "vertex id");
    const long v = ReadInt(l.tokens[2], l.number, "vertex id");
    Rational cost = ReadValue(l.tokens[3], l.number, "edge cost");
    if (u >= n || v >= n) {
      throw Error(ErrorCode::kValidation,
                  "line " + std::to_string(l.number) + ": vertex id out of range");
    }
    if (u == v) {
      throw Error(ErrorCode::kValidation,
                  "line " + std::to_string(l.number) + ": self-loop");
    }
    VertexPair key(static_cast<Vertex>(u), static_cast<Vertex>(v));
    auto [it, inserted] = collapsed.emplace(key, cost);
    if (!inserted && cost < it->second) it->second = cost;
  }
  std::vector<Edge> edges;
  for (auto& [pair, cost] : collapsed) {
    edges.push_back({pair.first, pair.second, cost});
  }

  Instance inst;
  inst.graph = Graph(static_cast<int>(n), std::move(edges));
  inst.root = static_cast<Vertex>(root);
  if (k > n) {
    throw Error(ErrorCode::kValidation,
                "k = " + std::to_string(k) + " exceeds n = " +
                    std::to_string(n));
  }
  inst.k = static_cast<int>(k);
  inst.penalties = std::move(penalties);
  ValidateInstance(inst);
  return inst;
}

std::string SerializeInstance(const Instance& instance) {
  std::string out;
  out += "kpcst " + std::to_string(instance.vertex_count()) + " " +
         std::to_string(instance.graph.edges().size()) + "\n";
  out += "root " + std::to_string(instance.root) + "\n";
  out += "k " + std::to_string(instance.k) + "\n";
  out += "penalties";
  for (const Rational& p : instance.penalties) out += " " + ToString(p);
  out += "\n";
  for (const Edge& e : instance.graph.edges()) {
    out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + " " +
           ToString(e.cost) + "\n";
  }
  return out;
}

// ---- assumptions ----

std::vector<Finding> ValidateAssumptions(
    const Instance& instance, const std::optional<OracleValues>& oracle) {
  std::vector<Finding> findings;
  const Graph& g = instance.graph;
  const int n = instance.vertex_count();
  const bool complete = g.IsComplete();
  findings.push_back(
      {"complete_graph", complete ? FindingStatus::kPass : FindingStatus::kFail,
       complete ? "" :
                  std::to_string(g.edges().size()) + " of " +
                      std::to_string(static_cast<long>(n) * (n - 1) / 2) +
                      " pairs present"});

  if (complete) {
    const auto violations = CheckTriangleInequality(g);
    Finding f{"triangle_inequality",
              violations.empty() ? FindingStatus::kPass : FindingStatus::kFail,
              ""};
    if (!violations.empty()) {
      const Triple& t = violations.front();
      f.detail = std::to_string(violations.size()) +
                 " violating triples, first (" + std::to_string(t.u) + "," +
                 std::to_string(t.v) + "," + std::to_string(t.w) + ")";
    }
    findings.push_back(std::move(f));
  } else {
    findings.push_back({"triangle_inequality", FindingStatus::kSkipped,
                        "graph is incomplete"});
  }

  if (!oracle) {
    findings.push_back({"root_edge_below_opt_pcst", FindingStatus::kSkipped,
                        "needs oracle values"});
    findings.push_back({"root_distance_below_opt_pcst",
                        FindingStatus::kSkipped, "needs oracle values"});
    findings.push_back({"min_positive_cost_below_opt", FindingStatus::kSkipped,
                        "needs oracle values"});
  } else {
    // Direct edge reading of the root-distance condition.
    std::optional<Rational> worst_edge;
    for (int v = 0; v < n; ++v) {
      if (v == instance.root) continue;
      if (const Rational* c = g.Cost(instance.root, v)) {
        if (!worst_edge || *c > *worst_edge) worst_edge = *c;
      }
    }
    if (!worst_edge) {
      findings.push_back({"root_edge_below_opt_pcst", FindingStatus::kSkipped,
                          "root has no incident edges"});
    } else {
      const bool ok = *worst_edge < oracle->opt_pcst;
      findings.push_back(
          {"root_edge_below_opt_pcst",
           ok ? FindingStatus::kPass : FindingStatus::kWarn,
           "max c(r,v) = " + ToString(*worst_edge) +
               ", OPT_PCST = " + ToString(oracle->opt_pcst)});
    }
    // Shortest-path reading.
    if (n >= 2) {
      const Graph closure = MetricClosure(g);
      Rational worst = 0;
      for (int v = 0; v < n; ++v) {
        if (v == instance.root) continue;
        const Rational& d = closure.CostOf(instance.root, v);
        if (d > worst) worst = d;
      }
      const bool ok = worst < oracle->opt_pcst;
      findings.push_back({"root_distance_below_opt_pcst",
                          ok ? FindingStatus::kPass : FindingStatus::kWarn,
                          "max dist(r,v) = " + ToString(worst) +
                              ", OPT_PCST = " + ToString(oracle->opt_pcst)});
    } else {
      findings.push_back({"root_distance_below_opt_pcst",
                          FindingStatus::kSkipped, "single vertex"});
    }
    std::optional<Rational> min_positive;
    for (const Edge& e : g.edges()) {
      if (sgn(e.cost) > 0 && (!min_positive || e.cost < *min_positive)) {
        min_positive = e.cost;
      }
    }
    if (!min_positive) {
      findings.push_back({"min_positive_cost_below_opt",
                          FindingStatus::kSkipped, "no positive edge cost"});
    } else {
      const bool ok = *min_positive < oracle->opt_kpcst;
      findings.push_back({"min_positive_cost_below_opt",
                          ok ? FindingStatus::kPass : FindingStatus::kWarn,
                          "min c(e) = " + ToString(*min_positive) +
                              ", OPT = " + ToString(oracle->opt_kpcst)});
    }
  }

  if (sgn(instance.penalties[instance.root]) > 0) {
    findings.push_back({"root_penalty", FindingStatus::kInfo,
                        "pi(r) = " + ToString(instance.penalties[instance.root]) +
                            " is never charged"});
  }
  return findings;
}

// ---- generators ----

namespace {

// ceil(sqrt(x)) for nonnegative x.
std::int64_t CeilSqrt(std::int64_t x) {
  mpz_class z(static_cast<long>(x));
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  if (r * r < z) r += 1;
  return r.get_si();
}

std::vector<Rational> DrawPenalties(Rng& rng, int n,
                                    const GeneratorOptions& options) {
  std::vector<Rational> penalties(n);
  for (int v = 0; v < n; ++v) {
    penalties[v] = static_cast<long>(
        rng.Uniform(options.penalty_min, options.penalty_max));
  }
  return penalties;
}

void CheckGeneratorArgs(int n, int k) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  if (k < 0 || k > n) {
    throw Error(ErrorCode::kInvalidArgument, "k must lie in [0, n]");
  }
}

}  // namespace

Instance GenerateEuclidean(int n, int k, std::uint64_t seed,
                           const GeneratorOptions& options) {
  CheckGeneratorArgs(n, k);
  Rng rng(seed);
  std::vector<std::pair<std::int64_t, std::int64_t>> points(n);
  for (auto& [x, y] : points) {
    x = rng.Uniform(0, options.coordinate_range);
    y = rng.Uniform(0, options.coordinate_range);
  }
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const std::int64_t dx = points[a].first - points[b].first;
      const std::int64_t dy = points[a].second - points[b].second;
      edges.push_back({a, b, Rational(static_cast<long>(
                                 CeilSqrt(dx * dx + dy * dy)))});
    }
  }
  Instance inst;
  inst.graph = MetricClosure(Graph(n, std::move(edges)));
  inst.root = 0;
  inst.k = k;
  inst.penalties = DrawPenalties(rng, n, options);
  return inst;
}

Instance GenerateSparse(int n, int k, std::uint64_t seed,
                        const GeneratorOptions& options) {
  CheckGeneratorArgs(n, k);
  Rng rng(seed);
  std::map<VertexPair, Rational> chosen;
  auto cost = [&] {
    return Rational(
        static_cast<long>(rng.Uniform(options.cost_min, options.cost_max)));
  };
  for (int v = 1; v < n; ++v) {
    const auto parent = static_cast<Vertex>(rng.Uniform(0, v - 1));
    chosen.emplace(VertexPair(parent, v), cost());
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (chosen.count({a, b}) == 0 && rng.Percent(options.extra_edge_percent)) {
        chosen.emplace(VertexPair(a, b), cost());
      }
    }
  }
  std::vector<Edge> edges;
  for (auto& [p, c] : chosen) edges.push_back({p.first, p.second, c});
  Instance inst;
  inst.graph = Graph(n, std::move(edges));
  inst.root = 0;
  inst.k = k;
  inst.penalties = DrawPenalties(rng, n, options);
  return inst;
}

}  // namespace kpcst
