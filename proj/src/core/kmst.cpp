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

#include "core/kmst.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "core/error.hpp"
#include "core/gw.hpp"

namespace kpcst {

void KmstStrategy::Validate() const {
  if (sgn(tolerance) <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "k-MST tolerance must be > 0");
  }
  if (max_iterations < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "k-MST max iterations must be >= 1");
  }
}

const char* KmstStrategyName(KmstStrategy::Kind kind) {
  return kind == KmstStrategy::Kind::kExact ? "exact" : "lagrangian";
}

namespace {

using Adj = std::vector<std::vector<Vertex>>;

Adj TreeAdjacency(int n, const EdgeSet& edges) {
  Adj adj(n);
  for (const VertexPair& p : edges) {
    adj[p.first].push_back(p.second);
    adj[p.second].push_back(p.first);
  }
  return adj;
}

// Drops the most expensive non-root leaf until `target` vertices remain.
std::vector<Vertex> TrimToSize(const Graph& g, Vertex root,
                               std::vector<Vertex> vertices, EdgeSet edges,
                               int target) {
  const int n = g.vertex_count();
  Adj adj = TreeAdjacency(n, edges);
  std::vector<char> in(n, 0);
  for (Vertex v : vertices) in[v] = 1;
  int size = static_cast<int>(vertices.size());
  while (size > target) {
    Vertex worst = -1;
    const Rational* worst_cost = nullptr;
    for (Vertex v : vertices) {
      if (!in[v] || v == root) continue;
      Vertex only = -1;
      int degree = 0;
      for (Vertex w : adj[v]) {
        if (in[w]) {
          ++degree;
          only = w;
        }
      }
      if (degree != 1) continue;
      const Rational* c = &g.CostOf(v, only);
      if (worst < 0 || *c > *worst_cost) {
        worst = v;
        worst_cost = c;
      }
    }
    in[worst] = 0;
    --size;
  }
  std::vector<Vertex> kept;
  for (Vertex v : vertices) {
    if (in[v]) kept.push_back(v);
  }
  return kept;
}

// Attaches the cheapest outside vertex by a single edge until `target`.
std::vector<Vertex> AugmentToSize(const Graph& g, std::vector<Vertex> vertices,
                                  int target) {
  const int n = g.vertex_count();
  std::vector<char> in(n, 0);
  for (Vertex v : vertices) in[v] = 1;
  while (static_cast<int>(vertices.size()) < target) {
    Vertex pick = -1;
    const Rational* pick_cost = nullptr;
    for (Vertex v : vertices) {
      for (int i : g.Incident(v)) {
        const Edge& e = g.edges()[i];
        const Vertex w = e.u == v ? e.v : e.u;
        if (in[w]) continue;
        if (pick < 0 || e.cost < *pick_cost ||
            (e.cost == *pick_cost && w < pick)) {
          pick = w;
          pick_cost = &e.cost;
        }
      }
    }
    if (pick < 0) {
      throw Error(ErrorCode::kDisconnectedInput,
                  "cannot reach k vertices from the root");
    }
    in[pick] = 1;
    vertices.push_back(pick);
  }
  std::sort(vertices.begin(), vertices.end());
  return vertices;
}

// Re-spans a vertex set with its induced MST. The set is connected in the
// graph because it came from a tree.
SolutionTree Respan(const Graph& g, std::span<const Rational> zero,
                    std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  EdgeSet edges = KruskalMst(g, std::span<const Vertex>(vertices));
  return SolutionTree::Build(g, zero, std::move(vertices), std::move(edges));
}

}  // namespace

LagrangianResult KmstLagrangian(const Graph& graph, Vertex root, int k,
                                const Rational& tolerance,
                                int max_iterations) {
  const int n = graph.vertex_count();
  if (k > n) {
    throw Error(ErrorCode::kInfeasibleK,
                "k = " + std::to_string(k) + " exceeds n = " +
                    std::to_string(n));
  }
  const int target = std::max(k, 1);
  const std::vector<Rational> zero(n, Rational(0));
  LagrangianResult out;
  out.dual_bound = 0;
  if (target == 1) {
    out.tree = SolutionTree::Build(graph, zero, {root}, {});
    return out;
  }

  Instance probe_instance;
  probe_instance.graph = graph;
  probe_instance.root = root;
  probe_instance.k = 0;
  const Rational slack_weight = n - target;

  std::map<Rational, int> sizes;  // lambda -> tree size, for monotonicity
  auto probe = [&](const Rational& lambda) {
    probe_instance.penalties.assign(n, lambda);
    PcstResult r = GwPcst(probe_instance);
    const Rational bound = r.dual.Total() - lambda * slack_weight;
    if (bound > out.dual_bound) out.dual_bound = bound;
    auto [it, inserted] = sizes.emplace(lambda, r.tree.size());
    if (it != sizes.begin() && std::prev(it)->second > r.tree.size()) {
      out.audit.non_monotone = true;
    }
    if (std::next(it) != sizes.end() && std::next(it)->second < r.tree.size()) {
      out.audit.non_monotone = true;
    }
    return r.tree;
  };

  std::optional<SolutionTree> best;
  auto consider = [&](const SolutionTree& t) {
    if (t.size() < target) return;
    SolutionTree candidate = Respan(
        graph, zero, TrimToSize(graph, root, t.vertices, t.edges, target));
    if (!best || candidate.edge_cost < best->edge_cost) best = std::move(candidate);
  };

  Rational lo = 0;
  Rational hi = n * graph.MaxEdgeCost();
  if (sgn(hi) == 0) hi = 1;
  SolutionTree lo_tree = probe(lo);
  SolutionTree hi_tree = probe(hi);
  consider(lo_tree);
  consider(hi_tree);
  if (lo_tree.size() >= target) hi = lo;

  int iterations = 0;
  bool exact_hit = lo_tree.size() == target;
  while (!exact_hit && hi - lo > tolerance && iterations < max_iterations) {
    ++iterations;
    const Rational mid = (lo + hi) / 2;
    SolutionTree t = probe(mid);
    if (t.size() >= target) {
      hi = mid;
      consider(t);
      exact_hit = t.size() == target;
    } else {
      lo = mid;
      lo_tree = std::move(t);
    }
  }
  out.audit.iterations = iterations;
  out.audit.iteration_limit = !exact_hit && hi - lo > tolerance;
  out.audit.lambda_minus = lo;
  out.audit.lambda_plus = hi;

  if (lo_tree.size() < target) {
    SolutionTree augmented =
        Respan(graph, zero, AugmentToSize(graph, lo_tree.vertices, target));
    if (!best || augmented.edge_cost < best->edge_cost) {
      best = std::move(augmented);
      out.audit.augmented = true;
    }
  }
  out.audit.dual_bound = out.dual_bound;
  out.tree = std::move(*best);
  return out;
}

KmstResult KmstSolve(const Instance& instance, const KmstStrategy& strategy) {
  strategy.Validate();
  const auto start = std::chrono::steady_clock::now();
  const int n = instance.vertex_count();
  if (instance.k > n) {
    throw Error(ErrorCode::kInfeasibleK,
                "k = " + std::to_string(instance.k) + " exceeds n = " +
                    std::to_string(n));
  }
  ValidateInstance(instance);
  KmstResult out;
  SolveReport& r = out.report;
  r.problem = "kmst";
  if (strategy.kind == KmstStrategy::Kind::kExact) {
    TreeOracleResult exact = OracleKmst(instance, strategy.exact_cap);
    out.tree = std::move(exact.tree);
    r.solver = "kmst_exact";
    r.lower_bound = LowerBound{exact.opt, BoundSource::kOracle};
    r.certified_factor = Rational(1);
  } else {
    LagrangianResult lag =
        KmstLagrangian(instance.graph, instance.root, instance.k,
                       strategy.tolerance, strategy.max_iterations);
    out.tree = std::move(lag.tree);
    out.audit = lag.audit;
    r.solver = "kmst_lagrangian";
    r.lower_bound = LowerBound{lag.dual_bound, BoundSource::kDual};
    r.Detail("lambda_minus", ToString(lag.audit.lambda_minus));
    r.Detail("lambda_plus", ToString(lag.audit.lambda_plus));
    r.Detail("iterations", std::to_string(lag.audit.iterations));
    r.Detail("iteration_limit", lag.audit.iteration_limit ? "true" : "false");
    r.Detail("augmented", lag.audit.augmented ? "true" : "false");
    r.Detail("non_monotone", lag.audit.non_monotone ? "true" : "false");
  }
  r.solution = out.tree;
  r.objective = out.tree.edge_cost;
  r.wall_ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  return out;
}

}  // namespace kpcst
