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

#include "core/oracle.hpp"

#include <algorithm>
#include <optional>

#include "core/error.hpp"

namespace kpcst {

namespace {

void CheckCap(const Instance& instance, int cap) {
  if (instance.vertex_count() > cap) {
    throw Error(ErrorCode::kInstanceTooLarge,
                "oracle cap is " + std::to_string(cap) + " vertices, got " +
                    std::to_string(instance.vertex_count()));
  }
}

// Calls visit(S) for every root-containing set with |S| >= min_size, by
// increasing size then lexicographic order of the non-root members.
template <typename Visit>
void ForEachRootedSet(const Instance& instance, int min_size, Visit&& visit) {
  const int n = instance.vertex_count();
  std::vector<Vertex> others;
  for (int v = 0; v < n; ++v) {
    if (v != instance.root) others.push_back(v);
  }
  const int m = static_cast<int>(others.size());
  std::vector<Vertex> set;
  for (int size = std::max(min_size, 1); size <= n; ++size) {
    const int pick = size - 1;
    std::vector<int> idx(pick);
    for (int i = 0; i < pick; ++i) idx[i] = i;
    while (true) {
      set.clear();
      set.push_back(instance.root);
      for (int i : idx) set.push_back(others[i]);
      std::sort(set.begin(), set.end());
      visit(set);
      int i = pick - 1;
      while (i >= 0 && idx[i] == m - pick + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < pick; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

Rational OutsidePenalty(const Instance& instance,
                        const std::vector<Vertex>& set) {
  Rational sum = 0;
  size_t j = 0;
  for (int v = 0; v < instance.vertex_count(); ++v) {
    if (j < set.size() && set[j] == v) {
      ++j;
    } else {
      sum += instance.penalties[v];
    }
  }
  return sum;
}

}  // namespace

TreeOracleResult OracleKpcst(const Instance& instance, int cap) {
  ValidateInstance(instance);
  CheckCap(instance, cap);
  std::optional<Rational> best;
  TreeOracleResult out;
  ForEachRootedSet(instance, instance.k, [&](const std::vector<Vertex>& set) {
    Rational outside = OutsidePenalty(instance, set);
    if (best && outside > *best) return;
    auto mst = TryKruskalMst(instance.graph, set);
    if (!mst) return;  // G[S] disconnected
    const Rational edge_cost = TotalCost(instance.graph, *mst);
    const Rational value = edge_cost + outside;
    if (!best || value < *best) {
      best = value;
      out.tree = SolutionTree::Build(instance.graph, instance.penalties, set,
                                     std::move(*mst));
      out.min_optimal_edge_cost = edge_cost;
    } else if (value == *best && edge_cost < out.min_optimal_edge_cost) {
      out.min_optimal_edge_cost = edge_cost;
    }
  });
  out.opt = *best;  // the full vertex set is always feasible
  return out;
}

TreeOracleResult OraclePcst(const Instance& instance, int cap) {
  return OracleKpcst(instance.WithK(0), cap);
}

TreeOracleResult OracleKmst(const Instance& instance, int cap) {
  Instance zero = instance.WithPenalties(
      std::vector<Rational>(instance.vertex_count(), Rational(0)));
  zero.k = std::max(zero.k, 1);
  return OracleKpcst(zero, cap);
}

TourOracleResult OracleKpctsp(const Instance& instance, int cap) {
  ValidateInstance(instance);
  CheckCap(instance, cap);
  const Graph& g = instance.graph;
  if (!g.IsComplete()) {
    throw Error(ErrorCode::kNonMetricGraph, "tour oracle needs a complete graph");
  }
  const int n = instance.vertex_count();
  const int r = instance.root;
  const size_t masks = size_t{1} << n;
  // path[mask][v]: cheapest path from r through exactly `mask`, ending at v.
  std::vector<std::optional<Rational>> path(masks * n);
  std::vector<int> pred(masks * n, -1);
  auto at = [&](size_t mask, int v) -> std::optional<Rational>& {
    return path[mask * n + v];
  };
  const size_t root_bit = size_t{1} << r;
  at(root_bit, r) = Rational(0);
  for (size_t mask = 0; mask < masks; ++mask) {
    if (!(mask & root_bit) || mask == root_bit) continue;
    for (int v = 0; v < n; ++v) {
      if (v == r || !(mask & (size_t{1} << v))) continue;
      const size_t rest = mask & ~(size_t{1} << v);
      for (int u = 0; u < n; ++u) {
        if (!(rest & (size_t{1} << u)) || !at(rest, u)) continue;
        Rational candidate = *at(rest, u) + g.CostOf(u, v);
        if (!at(mask, v) || candidate < *at(mask, v)) {
          at(mask, v) = std::move(candidate);
          pred[mask * n + v] = u;
        }
      }
    }
  }

  std::optional<Rational> best;
  TourOracleResult out;
  ForEachRootedSet(instance, std::max(instance.k, 1),
                   [&](const std::vector<Vertex>& set) {
    Rational outside = OutsidePenalty(instance, set);
    if (best && outside > *best) return;
    size_t mask = 0;
    for (Vertex v : set) mask |= size_t{1} << v;
    Rational tour_cost = 0;
    int last = r;
    if (set.size() > 1) {
      std::optional<Rational> cheapest;
      for (Vertex v : set) {
        if (v == r) continue;
        Rational c = *at(mask, v) + g.CostOf(v, r);
        if (!cheapest || c < *cheapest) {
          cheapest = std::move(c);
          last = v;
        }
      }
      tour_cost = *cheapest;
    }
    const Rational value = tour_cost + outside;
    if (best && !(value < *best)) return;
    best = value;
    std::vector<Vertex> reversed;
    size_t cur_mask = mask;
    int cur = last;
    while (cur != r) {
      reversed.push_back(cur);
      const int prev = pred[cur_mask * n + cur];
      cur_mask &= ~(size_t{1} << cur);
      cur = prev;
    }
    std::vector<Vertex> seq = {r};
    seq.insert(seq.end(), reversed.rbegin(), reversed.rend());
    out.tour = MakeTour(g, std::move(seq));
  });
  out.opt = *best;
  return out;
}

TourOracleResult OraclePtsp(const Instance& instance, int cap) {
  return OracleKpctsp(instance.WithK(1), cap);
}

OracleValues ComputeOracleValues(const Instance& instance, int cap) {
  OracleValues v;
  const TreeOracleResult full = OracleKpcst(instance, cap);
  v.opt_kpcst = full.opt;
  v.min_optimal_edge_cost = full.min_optimal_edge_cost;
  v.opt_pcst = OraclePcst(instance, cap).opt;
  v.opt_kmst = OracleKmst(instance, cap).opt;
  return v;
}

}  // namespace kpcst
