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

#include "core/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "core/error.hpp"

namespace kpcst {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 0) throw Error(ErrorCode::kValidation, "negative vertex count");
  for (auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) {
      throw Error(ErrorCode::kValidation,
                  "edge endpoint out of range: " + std::to_string(e.u) + " " +
                      std::to_string(e.v));
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kValidation,
                  "self-loop on vertex " + std::to_string(e.u));
    }
    if (sgn(e.cost) < 0) {
      throw Error(ErrorCode::kValidation, "negative edge cost");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    e.cost.canonicalize();
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.pair() < b.pair();
  });
  index_.assign(static_cast<size_t>(n_) * n_, -1);
  incident_.assign(n_, {});
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    const Edge& e = edges_[i];
    int& slot = index_[static_cast<size_t>(e.u) * n_ + e.v];
    if (slot >= 0) {
      throw Error(ErrorCode::kValidation,
                  "duplicate edge " + std::to_string(e.u) + " " +
                      std::to_string(e.v));
    }
    slot = i;
    index_[static_cast<size_t>(e.v) * n_ + e.u] = i;
    incident_[e.u].push_back(i);
    incident_[e.v].push_back(i);
  }
}

int Graph::EdgeIndex(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return -1;
  return index_[static_cast<size_t>(a) * n_ + b];
}

const Rational* Graph::Cost(Vertex a, Vertex b) const {
  const int i = EdgeIndex(a, b);
  return i < 0 ? nullptr : &edges_[i].cost;
}

const Rational& Graph::CostOf(Vertex a, Vertex b) const {
  const Rational* c = Cost(a, b);
  if (c == nullptr) {
    throw Error(ErrorCode::kInvalidArgument,
                "no edge " + std::to_string(a) + " " + std::to_string(b));
  }
  return *c;
}

bool Graph::IsComplete() const {
  return edges_.size() == static_cast<size_t>(n_) * (n_ - 1) / 2;
}

bool Graph::IsConnected() const {
  if (n_ <= 1) return true;
  DisjointSet ds(n_);
  int joins = 0;
  for (const Edge& e : edges_) joins += ds.Union(e.u, e.v) ? 1 : 0;
  return joins == n_ - 1;
}

Rational Graph::MaxEdgeCost() const {
  Rational best = 0;
  for (const Edge& e : edges_) {
    if (e.cost > best) best = e.cost;
  }
  return best;
}

EdgeSet::EdgeSet(std::vector<VertexPair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

void EdgeSet::Insert(VertexPair p) {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p);
  if (it == pairs_.end() || *it != p) pairs_.insert(it, p);
}

bool EdgeSet::Contains(VertexPair p) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

bool EdgeSet::IsSubsetOf(const Graph& graph) const {
  return std::all_of(pairs_.begin(), pairs_.end(), [&](const VertexPair& p) {
    return graph.HasEdge(p.first, p.second);
  });
}

Rational TotalCost(const Graph& graph, const EdgeSet& edges) {
  Rational sum = 0;
  for (const VertexPair& p : edges) sum += graph.CostOf(p.first, p.second);
  return sum;
}

DisjointSet::DisjointSet(int n) : parent_(n), rank_(n, 0) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSet::Find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSet::Union(int a, int b) {
  a = Find(a);
  b = Find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  return true;
}

namespace {

std::optional<EdgeSet> KruskalOver(const Graph& graph,
                                   std::span<const Vertex> vertices,
                                   std::vector<int> candidate_edges) {
  const auto& edges = graph.edges();
  std::sort(candidate_edges.begin(), candidate_edges.end(),
            [&](int a, int b) {
              const Edge& x = edges[a];
              const Edge& y = edges[b];
              if (x.cost != y.cost) return x.cost < y.cost;
              return x.pair() < y.pair();
            });
  DisjointSet ds(graph.vertex_count());
  std::vector<VertexPair> tree;
  for (int i : candidate_edges) {
    if (ds.Union(edges[i].u, edges[i].v)) tree.push_back(edges[i].pair());
  }
  if (!vertices.empty() && tree.size() + 1 != vertices.size()) {
    return std::nullopt;
  }
  return EdgeSet(std::move(tree));
}

EdgeSet OrDisconnected(std::optional<EdgeSet> tree) {
  if (!tree) {
    throw Error(ErrorCode::kDisconnectedInput,
                "graph is not connected on the requested vertex set");
  }
  return std::move(*tree);
}

std::vector<char> Membership(int n, std::span<const Vertex> vertices) {
  std::vector<char> in(n, 0);
  for (Vertex v : vertices) {
    if (v < 0 || v >= n) {
      throw Error(ErrorCode::kInvalidArgument, "vertex id out of range");
    }
    in[v] = 1;
  }
  return in;
}

}  // namespace

EdgeSet KruskalMst(const Graph& graph,
                   std::optional<std::span<const Vertex>> restrict_to) {
  std::vector<Vertex> all;
  std::span<const Vertex> vertices;
  if (restrict_to) {
    vertices = *restrict_to;
  } else {
    all.resize(graph.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    vertices = all;
  }
  const auto in = Membership(graph.vertex_count(), vertices);
  std::vector<int> candidates;
  for (int i = 0; i < static_cast<int>(graph.edges().size()); ++i) {
    const Edge& e = graph.edges()[i];
    if (in[e.u] && in[e.v]) candidates.push_back(i);
  }
  return OrDisconnected(KruskalOver(graph, vertices, std::move(candidates)));
}

std::optional<EdgeSet> TryKruskalMst(const Graph& graph,
                                     std::span<const Vertex> vertices) {
  const auto in = Membership(graph.vertex_count(), vertices);
  std::vector<int> candidates;
  for (Vertex v : vertices) {
    for (int i : graph.Incident(v)) {
      const Edge& e = graph.edges()[i];
      if (e.u == v && in[e.v]) candidates.push_back(i);
    }
  }
  return KruskalOver(graph, vertices, std::move(candidates));
}

EdgeSet KruskalMst(const Graph& graph, std::span<const Vertex> vertices,
                   const EdgeSet& candidates) {
  const auto in = Membership(graph.vertex_count(), vertices);
  std::vector<int> ids;
  for (const VertexPair& p : candidates) {
    const int i = graph.EdgeIndex(p.first, p.second);
    if (i < 0) {
      throw Error(ErrorCode::kInvalidArgument, "candidate is not an edge");
    }
    if (in[p.first] && in[p.second]) ids.push_back(i);
  }
  return OrDisconnected(KruskalOver(graph, vertices, std::move(ids)));
}

Graph MetricClosure(const Graph& graph) {
  const int n = graph.vertex_count();
  if (!graph.IsConnected()) {
    throw Error(ErrorCode::kDisconnectedInput,
                "metric closure needs a connected graph");
  }
  std::vector<std::optional<Rational>> dist(static_cast<size_t>(n) * n);
  auto at = [&](int a, int b) -> std::optional<Rational>& {
    return dist[static_cast<size_t>(a) * n + b];
  };
  for (int v = 0; v < n; ++v) at(v, v) = Rational(0);
  for (const Edge& e : graph.edges()) {
    at(e.u, e.v) = e.cost;
    at(e.v, e.u) = e.cost;
  }
  for (int m = 0; m < n; ++m) {
    for (int a = 0; a < n; ++a) {
      if (!at(a, m)) continue;
      for (int b = 0; b < n; ++b) {
        if (!at(m, b)) continue;
        Rational through = *at(a, m) + *at(m, b);
        if (!at(a, b) || through < *at(a, b)) at(a, b) = through;
      }
    }
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) edges.push_back({a, b, *at(a, b)});
  }
  return Graph(n, std::move(edges));
}

std::vector<Triple> CheckTriangleInequality(const Graph& graph) {
  if (!graph.IsComplete()) {
    throw Error(ErrorCode::kIncompleteGraph,
                "triangle check needs a complete graph");
  }
  const int n = graph.vertex_count();
  std::vector<Triple> violations;
  for (int u = 0; u < n; ++u) {
    for (int w = u + 1; w < n; ++w) {
      const Rational& direct = graph.CostOf(u, w);
      for (int v = 0; v < n; ++v) {
        if (v == u || v == w) continue;
        if (direct > graph.CostOf(u, v) + graph.CostOf(v, w)) {
          violations.push_back({u, v, w});
        }
      }
    }
  }
  return violations;
}

std::vector<std::vector<Vertex>> ConnectedComponents(const Graph& graph,
                                                     const EdgeSet& edges) {
  const int n = graph.vertex_count();
  DisjointSet ds(n);
  for (const VertexPair& p : edges) ds.Union(p.first, p.second);
  std::vector<int> slot(n, -1);
  std::vector<std::vector<Vertex>> classes;
  for (int v = 0; v < n; ++v) {
    const int root = ds.Find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[slot[root]].push_back(v);
  }
  return classes;
}

bool IsTreeOn(std::span<const Vertex> vertices, const EdgeSet& edges) {
  if (vertices.empty()) return false;
  if (edges.size() + 1 != vertices.size()) return false;
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return false;
  }
  auto pos = [&](Vertex v) -> int {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    return it != sorted.end() && *it == v
               ? static_cast<int>(it - sorted.begin())
               : -1;
  };
  DisjointSet ds(static_cast<int>(sorted.size()));
  for (const VertexPair& p : edges) {
    const int a = pos(p.first);
    const int b = pos(p.second);
    if (a < 0 || b < 0) return false;
    if (!ds.Union(a, b)) return false;  // cycle
  }
  return true;
}

}  // namespace kpcst
