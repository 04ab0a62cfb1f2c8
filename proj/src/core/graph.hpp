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

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "core/rational.hpp"

namespace kpcst {

using Vertex = int;

// Unordered vertex pair stored with first < second.
struct VertexPair {
  Vertex first = 0;
  Vertex second = 0;

  VertexPair() = default;
  VertexPair(Vertex a, Vertex b)
      : first(a < b ? a : b), second(a < b ? b : a) {}

  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

struct Edge {
  Vertex u = 0;  // u < v
  Vertex v = 0;
  Rational cost;

  VertexPair pair() const { return {u, v}; }
};

// Simple undirected graph with nonnegative exact costs. Immutable once
// built; edges are kept sorted by (u, v).
class Graph {
 public:
  Graph() = default;

  // Throws kValidation on out-of-range ids, self-loops, duplicate pairs or
  // negative costs.
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool HasEdge(Vertex a, Vertex b) const { return EdgeIndex(a, b) >= 0; }
  // Returns nullptr when {a, b} is not an edge.
  const Rational* Cost(Vertex a, Vertex b) const;
  // Cost of an edge known to exist; throws kInvalidArgument otherwise.
  const Rational& CostOf(Vertex a, Vertex b) const;
  // Index into edges(), or -1.
  int EdgeIndex(Vertex a, Vertex b) const;

  // Edge indices incident to v.
  const std::vector<int>& Incident(Vertex v) const { return incident_[v]; }

  bool IsComplete() const;
  bool IsConnected() const;
  Rational MaxEdgeCost() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> index_;  // n x n, -1 where absent
  std::vector<std::vector<int>> incident_;
};

// Sorted duplicate-free set of unordered pairs.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::vector<VertexPair> pairs);

  void Insert(VertexPair p);
  bool Contains(VertexPair p) const;
  size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  const std::vector<VertexPair>& pairs() const { return pairs_; }
  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }

  // True when every pair is an edge of graph.
  bool IsSubsetOf(const Graph& graph) const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<VertexPair> pairs_;
};

Rational TotalCost(const Graph& graph, const EdgeSet& edges);

class DisjointSet {
 public:
  explicit DisjointSet(int n);
  int Find(int x);
  // Returns false when already joined.
  bool Union(int a, int b);

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

// Minimum spanning tree by Kruskal, ties broken by (cost, smaller id,
// larger id). With restrict_to, only edges with both endpoints in the set
// are considered and the tree spans exactly that set. Throws
// kDisconnectedInput if the (induced) graph is not connected.
EdgeSet KruskalMst(const Graph& graph,
                   std::optional<std::span<const Vertex>> restrict_to = {});

// Non-throwing induced-subgraph variant; nullopt when disconnected.
std::optional<EdgeSet> TryKruskalMst(const Graph& graph,
                                     std::span<const Vertex> vertices);

// Kruskal over an explicit candidate edge set spanning `vertices`.
EdgeSet KruskalMst(const Graph& graph, std::span<const Vertex> vertices,
                   const EdgeSet& candidates);

// Complete graph of shortest-path distances. Throws kDisconnectedInput.
Graph MetricClosure(const Graph& graph);

struct Triple {
  Vertex u, v, w;
  friend bool operator==(const Triple&, const Triple&) = default;
};

// Every (u, v, w) with cost(u, w) > cost(u, v) + cost(v, w), reported with
// u < w. Throws kIncompleteGraph when a pair has no edge.
std::vector<Triple> CheckTriangleInequality(const Graph& graph);

// Maximal classes connected by `edges`, each sorted, ordered by smallest
// member.
std::vector<std::vector<Vertex>> ConnectedComponents(const Graph& graph,
                                                     const EdgeSet& edges);

// True when `edges` forms a tree whose vertex set is exactly `vertices`.
bool IsTreeOn(std::span<const Vertex> vertices, const EdgeSet& edges);

}  // namespace kpcst
