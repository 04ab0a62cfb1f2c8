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

// Reference computations for tests. Each one deliberately takes a different
// route from the library code it checks: no Kruskal, no Floyd-Warshall, no
// subset-by-MST enumeration, no Held-Karp.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "core/graph.hpp"
#include "core/instance.hpp"
#include "core/random.hpp"

namespace kpcst::reference {

// Minimum spanning-tree cost by trying every (n-1)-subset of edges.
inline std::optional<Rational> BruteForceMstCost(const Graph& g) {
  const int n = g.vertex_count();
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  if (n <= 1) return Rational(0);
  std::optional<Rational> best;
  std::vector<int> pick(n - 1);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == n - 1) {
      std::vector<int> label(n);
      for (int i = 0; i < n; ++i) label[i] = i;
      Rational cost = 0;
      for (int idx : pick) {
        const int a = label[edges[idx].u], b = label[edges[idx].v];
        if (a == b) return;  // cycle
        for (int& l : label) {
          if (l == b) l = a;
        }
        cost += edges[idx].cost;
      }
      if (!best || cost < *best) best = cost;
      return;
    }
    for (int i = start; i <= m - (n - 1 - depth); ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return best;
}

// Shortest u-v distance by walking every simple path.
inline std::optional<Rational> SimplePathDistance(const Graph& g, Vertex s,
                                                  Vertex t) {
  if (s == t) return Rational(0);
  std::optional<Rational> best;
  std::vector<char> on_path(g.vertex_count(), 0);
  std::function<void(Vertex, Rational)> dfs = [&](Vertex v, Rational len) {
    if (v == t) {
      if (!best || len < *best) best = len;
      return;
    }
    on_path[v] = 1;
    for (int idx : g.Incident(v)) {
      const Edge& e = g.edges()[idx];
      const Vertex w = e.u == v ? e.v : e.u;
      if (!on_path[w]) dfs(w, len + e.cost);
    }
    on_path[v] = 0;
  };
  dfs(s, 0);
  return best;
}

// Component label = smallest reachable id, by relaxation to a fixed point.
inline std::vector<Vertex> FixedPointLabels(int n, const EdgeSet& edges) {
  std::vector<Vertex> label(n);
  for (int i = 0; i < n; ++i) label[i] = i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const VertexPair& p : edges) {
      const Vertex m = std::min(label[p.first], label[p.second]);
      if (label[p.first] != m || label[p.second] != m) {
        label[p.first] = label[p.second] = m;
        changed = true;
      }
    }
  }
  return label;
}

// best_tree[S] = cheapest tree whose vertex set is exactly S, built by
// leaf removal: a tree on S minus a leaf v is a tree on S \ {v}.
inline std::vector<std::optional<Rational>> ExactVertexSetTrees(const Graph& g) {
  const int n = g.vertex_count();
  const std::uint32_t full = 1u << n;
  std::vector<std::optional<Rational>> best(full);
  for (std::uint32_t s = 1; s < full; ++s) {
    if (__builtin_popcount(s) == 1) {
      best[s] = Rational(0);
      continue;
    }
    for (int v = 0; v < n; ++v) {
      if (!(s >> v & 1)) continue;
      const std::uint32_t rest = s & ~(1u << v);
      if (!best[rest]) continue;
      for (int u = 0; u < n; ++u) {
        if (!(rest >> u & 1)) continue;
        const Rational* c = g.Cost(u, v);
        if (!c) continue;
        const Rational cand = *best[rest] + *c;
        if (!best[s] || cand < *best[s]) best[s] = cand;
      }
    }
  }
  return best;
}

struct TreeOptimum {
  Rational opt;
  Rational min_optimal_edge_cost;
};

// k-PCST optimum through the leaf-removal DP.
inline TreeOptimum DpKpcst(const Instance& inst) {
  const int n = inst.vertex_count();
  const auto trees = ExactVertexSetTrees(inst.graph);
  std::optional<Rational> opt;
  Rational min_edge;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    if (!(s >> inst.root & 1) || __builtin_popcount(s) < inst.k || !trees[s]) {
      continue;
    }
    Rational outside = 0;
    for (int v = 0; v < n; ++v) {
      if (!(s >> v & 1)) outside += inst.penalties[v];
    }
    const Rational total = *trees[s] + outside;
    if (!opt || total < *opt) {
      opt = total;
      min_edge = *trees[s];
    } else if (total == *opt && *trees[s] < min_edge) {
      min_edge = *trees[s];
    }
  }
  return {*opt, min_edge};
}

inline Rational DpPcst(const Instance& inst) { return DpKpcst(inst.WithK(0)).opt; }

inline Rational DpKmst(const Instance& inst) {
  Instance zero = inst.WithPenalties(
      std::vector<Rational>(inst.vertex_count(), Rational(0)));
  return DpKpcst(zero.WithK(std::max(inst.k, 1))).opt;
}

// k-PCTSP optimum by enumerating every vertex order (n <= 7 or so).
inline Rational PermutationKpctsp(const Instance& inst) {
  const int n = inst.vertex_count();
  const Graph& g = inst.graph;
  std::optional<Rational> opt;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    if (!(s >> inst.root & 1) || __builtin_popcount(s) < std::max(inst.k, 1)) {
      continue;
    }
    std::vector<Vertex> rest;
    Rational outside = 0;
    for (int v = 0; v < n; ++v) {
      if (v == inst.root) continue;
      if (s >> v & 1) {
        rest.push_back(v);
      } else {
        outside += inst.penalties[v];
      }
    }
    std::optional<Rational> best_tour;
    do {
      Rational cost = 0;
      Vertex prev = inst.root;
      for (Vertex v : rest) {
        cost += g.CostOf(prev, v);
        prev = v;
      }
      if (prev != inst.root) cost += g.CostOf(prev, inst.root);
      if (!best_tour || cost < *best_tour) best_tour = cost;
    } while (std::next_permutation(rest.begin(), rest.end()));
    const Rational total = *best_tour + outside;
    if (!opt || total < *opt) opt = total;
  }
  return *opt;
}

// Random connected graph: random tree plus each other pair with
// probability extra_percent. Integer costs in [lo, hi].
inline Graph RandomConnectedGraph(Rng& rng, int n, int extra_percent, int lo,
                                  int hi) {
  std::vector<Edge> edges;
  std::vector<std::vector<char>> used(n, std::vector<char>(n, 0));
  for (int v = 1; v < n; ++v) {
    const int u = static_cast<int>(rng.Uniform(0, v - 1));
    edges.push_back({u, v, Rational(rng.Uniform(lo, hi))});
    used[u][v] = 1;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!used[u][v] && rng.Percent(extra_percent)) {
        edges.push_back({u, v, Rational(rng.Uniform(lo, hi))});
      }
    }
  }
  return Graph(n, std::move(edges));
}

// Penalties with small denominators so fractional dual events appear.
inline std::vector<Rational> RandomPenalties(Rng& rng, int n, int max_num) {
  std::vector<Rational> p(n);
  for (Rational& x : p) {
    x = Rational(rng.Uniform(0, max_num), rng.Uniform(1, 3));
    x.canonicalize();
  }
  return p;
}

// Mixed random instance: Euclidean or sparse-plus-closure, optional
// fractional penalties.
inline Instance RandomMetricInstance(Rng& rng, int n_lo, int n_hi) {
  const int n = static_cast<int>(rng.Uniform(n_lo, n_hi));
  const int k = static_cast<int>(rng.Uniform(0, n));
  const auto seed = static_cast<std::uint64_t>(rng.Uniform(0, 1 << 30));
  Instance inst;
  if (rng.Percent(50)) {
    inst = GenerateEuclidean(n, k, seed);
  } else {
    inst = GenerateSparse(n, k, seed);
    inst.graph = MetricClosure(inst.graph);
  }
  if (rng.Percent(30)) inst.penalties = RandomPenalties(rng, n, 40);
  return inst;
}

}  // namespace kpcst::reference
