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

// Text renderings of solve results: report blocks, solution files, DOT.

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "core/error.hpp"
#include "core/instance.hpp"

namespace kpcst {

namespace {

std::string JoinVertices(std::span<const Vertex> vs) {
  std::string out;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(vs[i]);
  }
  return out;
}

std::string JoinEdges(const EdgeSet& edges) {
  std::string out;
  for (const VertexPair& p : edges) {
    if (!out.empty()) out += ' ';
    out += std::to_string(p.first) + "-" + std::to_string(p.second);
  }
  return out;
}

}  // namespace

std::string FormatReport(const SolveReport& report, bool include_timing) {
  std::string out;
  auto kv = [&out](const std::string& k, const std::string& v) {
    out += k + "=" + v + "\n";
  };
  kv("solver", report.solver);
  kv("problem", report.problem);
  kv("termination", TerminationName(report.termination));
  if (const auto* tree = std::get_if<SolutionTree>(&report.solution)) {
    kv("solution", "tree");
    kv("vertices", JoinVertices(tree->vertices));
    kv("vertex_count", std::to_string(tree->vertices.size()));
    kv("edges", JoinEdges(tree->edges));
    kv("edge_cost", ToString(tree->edge_cost));
    kv("penalty_cost", ToString(tree->penalty_cost));
  } else {
    const auto& tour = std::get<Tour>(report.solution);
    kv("solution", "tour");
    kv("tour", JoinVertices(tour.sequence));
    kv("vertex_count", std::to_string(tour.sequence.size()));
    kv("tour_cost", ToString(tour.cost));
  }
  kv("objective", ToString(report.objective));
  kv("objective_decimal", ToDecimal(report.objective));
  if (report.lower_bound) {
    kv("lower_bound", ToString(report.lower_bound->value));
    kv("lower_bound_source", BoundSourceName(report.lower_bound->source));
  }
  if (report.certified_factor) {
    kv("certified_factor", ToString(*report.certified_factor));
  }
  for (const auto& [k, v] : report.details) kv(k, v);
  if (include_timing) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", report.wall_ms);
    kv("wall_ms", buf);
  }
  return out;
}

std::string SerializeSolution(const std::variant<SolutionTree, Tour>& s) {
  std::string out;
  if (const auto* tree = std::get_if<SolutionTree>(&s)) {
    out += "solution tree\n";
    out += "vertices " + JoinVertices(tree->vertices) + "\n";
    for (const VertexPair& p : tree->edges) {
      out += "edge " + std::to_string(p.first) + " " +
             std::to_string(p.second) + "\n";
    }
  } else {
    out += "solution tour\n";
    out += "tour " + JoinVertices(std::get<Tour>(s).sequence) + "\n";
  }
  return out;
}

std::variant<SolutionTree, Tour> ParseSolution(const Instance& instance,
                                               std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  std::string kind;
  std::vector<Vertex> vertices;
  std::vector<VertexPair> edges;
  std::vector<Vertex> tour;
  auto read_ids = [&](std::istringstream& ls) {
    std::vector<Vertex> ids;
    std::string tok;
    while (ls >> tok) {
      try {
        size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        if (v < 0 || v >= instance.vertex_count()) {
          throw Error(ErrorCode::kValidation,
                      "line " + std::to_string(number) +
                          ": vertex id out of range");
        }
        ids.push_back(v);
      } catch (const std::logic_error&) {
        throw ParseError(number, "bad vertex id '" + tok + "'");
      }
    }
    return ids;
  };
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "solution") {
      ls >> kind;
      if (kind != "tree" && kind != "tour") {
        throw ParseError(number, "solution kind must be tree or tour");
      }
    } else if (head == "vertices") {
      vertices = read_ids(ls);
    } else if (head == "edge") {
      auto ids = read_ids(ls);
      if (ids.size() != 2) throw ParseError(number, "edge needs two ids");
      edges.emplace_back(ids[0], ids[1]);
    } else if (head == "tour") {
      tour = read_ids(ls);
    } else {
      throw ParseError(number, "unknown keyword '" + head + "'");
    }
  }
  if (kind.empty()) throw ParseError(1, "missing 'solution' line");
  if (kind == "tour") {
    Tour t;
    t.sequence = tour;
    Rational cost = 0;
    const size_t q = tour.size();
    for (size_t i = 0; i < q && q > 1; ++i) {
      if (const Rational* c =
              instance.graph.Cost(tour[i], tour[(i + 1) % q])) {
        cost += *c;
      }
    }
    t.cost = cost;
    return t;
  }
  // Costs of non-edges are left out so TreeDefects can report them.
  EdgeSet edge_set(edges);
  SolutionTree tree;
  std::sort(vertices.begin(), vertices.end());
  tree.vertices = vertices;
  tree.edges = edge_set;
  tree.edge_cost = 0;
  for (const VertexPair& p : edge_set) {
    if (const Rational* c = instance.graph.Cost(p.first, p.second)) {
      tree.edge_cost += *c;
    }
  }
  tree.penalty_cost = 0;
  for (int v = 0; v < instance.vertex_count(); ++v) {
    if (!tree.Contains(v)) tree.penalty_cost += instance.penalties[v];
  }
  tree.total = tree.edge_cost + tree.penalty_cost;
  return tree;
}

std::string ToDot(const Instance& instance,
                  const std::variant<SolutionTree, Tour>& solution) {
  EdgeSet highlighted;
  std::vector<char> in_solution(instance.vertex_count(), 0);
  if (const auto* tree = std::get_if<SolutionTree>(&solution)) {
    highlighted = tree->edges;
    for (Vertex v : tree->vertices) in_solution[v] = 1;
  } else {
    const auto& seq = std::get<Tour>(solution).sequence;
    for (size_t i = 0; i < seq.size(); ++i) {
      in_solution[seq[i]] = 1;
      if (seq.size() > 1) {
        const Vertex a = seq[i];
        const Vertex b = seq[(i + 1) % seq.size()];
        if (a != b) highlighted.Insert({a, b});
      }
    }
  }
  std::string out = "graph kpcst {\n";
  for (int v = 0; v < instance.vertex_count(); ++v) {
    out += "  " + std::to_string(v) + " [label=\"" + std::to_string(v) +
           "\\npi=" + ToString(instance.penalties[v]) + "\"";
    if (v == instance.root) out += ", peripheries=2";
    if (!in_solution[v]) out += ", style=dashed";
    out += "];\n";
  }
  for (const Edge& e : instance.graph.edges()) {
    const bool on = highlighted.Contains(e.pair());
    out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) +
           " [label=\"" + ToString(e.cost) + "\"";
    out += on ? ", color=red, penwidth=2" : ", color=gray";
    out += "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace kpcst
