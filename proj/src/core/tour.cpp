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

#include "core/tour.hpp"

#include <algorithm>
#include <chrono>
#include <list>

#include "core/error.hpp"

namespace kpcst {

bool ShortcutLog::AllNonIncreasing() const {
  return std::all_of(deltas.begin(), deltas.end(),
                     [](const Rational& d) { return sgn(d) <= 0; });
}

void RequireMetric(const Graph& graph) {
  if (!graph.IsComplete()) {
    throw Error(ErrorCode::kNonMetricGraph,
                "tours need a complete graph (try --metric-closure)");
  }
  if (!CheckTriangleInequality(graph).empty()) {
    throw Error(ErrorCode::kNonMetricGraph,
                "costs violate the triangle inequality");
  }
}

namespace {

Rational Dist(const Graph& g, Vertex a, Vertex b) {
  return a == b ? Rational(0) : g.CostOf(a, b);
}

}  // namespace

Tour ShortcutClosedWalk(const Graph& graph, std::span<const Vertex> walk,
                        ShortcutLog* log) {
  if (walk.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty walk");
  }
  // Cyclic list; removing an element splices its neighbours together.
  std::list<Vertex> seq(walk.begin(), walk.end());
  std::vector<char> seen(graph.vertex_count(), 0);
  for (auto it = seq.begin(); it != seq.end();) {
    if (!seen[*it]) {
      seen[*it] = 1;
      ++it;
      continue;
    }
    const Vertex x = *std::prev(it);  // never the first element
    auto next = std::next(it);
    const Vertex z = next == seq.end() ? seq.front() : *next;
    if (log) {
      log->deltas.push_back(Dist(graph, x, z) - Dist(graph, x, *it) -
                            Dist(graph, *it, z));
    }
    it = seq.erase(it);
  }
  return MakeTour(graph, std::vector<Vertex>(seq.begin(), seq.end()));
}

Tour TreeToTour(const SolutionTree& tree, const Graph& graph, Vertex root,
                ShortcutLog* log) {
  if (!tree.Contains(root)) {
    throw Error(ErrorCode::kRootMismatch, "tree does not contain the root");
  }
  const int n = graph.vertex_count();
  std::vector<std::vector<Vertex>> adj(n);
  for (const VertexPair& p : tree.edges) {
    adj[p.first].push_back(p.second);
    adj[p.second].push_back(p.first);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  // Euler circuit of the doubled tree: enter each child, come back.
  std::vector<Vertex> walk;
  std::vector<std::pair<Vertex, size_t>> stack = {{root, 0}};
  std::vector<int> parent(n, -1);
  walk.push_back(root);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < adj[v].size()) {
      const Vertex w = adj[v][next++];
      if (w == parent[v]) continue;
      parent[w] = v;
      walk.push_back(w);
      stack.push_back({w, 0});
    } else {
      stack.pop_back();
      if (!stack.empty()) walk.push_back(stack.back().first);
    }
  }
  // The final return to the root closes the cycle implicitly.
  if (walk.size() > 1) walk.pop_back();
  return ShortcutClosedWalk(graph, walk, log);
}

Tour KtspSolve(const Instance& instance, const KmstStrategy& strategy,
               ShortcutLog* log) {
  RequireMetric(instance.graph);
  Instance covering = instance.WithK(std::max(instance.k, 1));
  const KmstResult kmst = KmstSolve(covering, strategy);
  return TreeToTour(kmst.tree, instance.graph, instance.root, log);
}

PtspResult PtspSolve(const Instance& instance, const GwOptions& options,
                     ShortcutLog* log) {
  RequireMetric(instance.graph);
  std::vector<Rational> halved = instance.penalties;
  for (Rational& p : halved) p /= 2;
  PtspResult out;
  out.pcst = GwPcst(instance.WithPenalties(std::move(halved)), options);
  out.tour = TreeToTour(out.pcst.tree, instance.graph, instance.root, log);
  out.objective = out.tour.cost + TourPenalty(instance, out.tour);
  return out;
}

Tour MergeToursShortcut(const Tour& first, const Tour& second,
                        const Graph& graph, ShortcutLog* log) {
  if (first.sequence.empty() || second.sequence.empty() ||
      first.sequence.front() != second.sequence.front()) {
    throw Error(ErrorCode::kRootMismatch, "tours must both start at the root");
  }
  std::vector<Vertex> walk = first.sequence;
  walk.insert(walk.end(), second.sequence.begin(), second.sequence.end());
  return ShortcutClosedWalk(graph, walk, log);
}

KpctspResult SolveKpctsp(const Instance& instance,
                         const ComposeOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (instance.k > instance.vertex_count()) {
    throw Error(ErrorCode::kInfeasibleK,
                "k = " + std::to_string(instance.k) + " exceeds n = " +
                    std::to_string(instance.vertex_count()));
  }
  ValidateInstance(instance);
  options.kmst.Validate();
  RequireMetric(instance.graph);

  KpctspResult out;
  out.ktsp = KtspSolve(instance, options.kmst, &out.shortcuts);
  out.ptsp = PtspSolve(instance, GwOptions{options.strong_prune},
                       &out.shortcuts);
  out.tour = MergeToursShortcut(out.ktsp, out.ptsp.tour, instance.graph,
                                &out.shortcuts);
  out.objective = out.tour.cost + TourPenalty(instance, out.tour);

  SolveReport& r = out.report;
  r.solver = "kpctsp_compose";
  r.problem = "kpctsp";
  r.solution = out.tour;
  r.objective = out.objective;
  r.termination = Termination::kStep3;
  const Rational merged_bound = out.ktsp.cost + out.ptsp.tour.cost;
  r.Detail("p", ToString(out.tour.cost));
  r.Detail("p_ktsp", ToString(out.ktsp.cost));
  r.Detail("p_ptsp", ToString(out.ptsp.tour.cost));
  r.Detail("ptsp_objective", ToString(out.ptsp.objective));
  r.Detail("merge_inequality",
           out.tour.cost <= merged_bound ? "holds" : "violated");
  r.Detail("shortcut_steps", std::to_string(out.shortcuts.deltas.size()));
  r.Detail("shortcuts_non_increasing",
           out.shortcuts.AllNonIncreasing() ? "true" : "false");
  r.Detail("kmst_strategy", KmstStrategyName(options.kmst.kind));
  r.wall_ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  return out;
}

}  // namespace kpcst
