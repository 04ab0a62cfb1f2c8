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

#include "core/instance.hpp"

namespace kpcst {

// Brute-force exact solvers for desk-scale instances. They enumerate vertex
// sets containing the root, by increasing size then lexicographically, and
// keep the first strictly better candidate.

inline constexpr int kTreeOracleCap = 12;
inline constexpr int kTourOracleCap = 10;

struct TreeOracleResult {
  SolutionTree tree;
  Rational opt;
  // Smallest edge cost among all optimal solutions.
  Rational min_optimal_edge_cost;
};

// Minimum of MST(G[S]) + pi(V \ S) over root-containing S with |S| >= k and
// G[S] connected. Throws kInstanceTooLarge when n > cap.
TreeOracleResult OracleKpcst(const Instance& instance,
                             int cap = kTreeOracleCap);

// OracleKpcst with k forced to 0.
TreeOracleResult OraclePcst(const Instance& instance, int cap = kTreeOracleCap);

// OracleKpcst with all penalties set to 0 (k kept, raised to 1).
TreeOracleResult OracleKmst(const Instance& instance, int cap = kTreeOracleCap);

struct TourOracleResult {
  Tour tour;
  Rational opt;
};

// Minimum of HeldKarp(S) + pi(V \ S) over root-containing S with
// |S| >= max(k, 1). Needs a complete graph; throws kNonMetricGraph
// otherwise, kInstanceTooLarge when n > cap.
TourOracleResult OracleKpctsp(const Instance& instance,
                              int cap = kTourOracleCap);

// Penalty-TSP optimum: OracleKpctsp with k forced to 1.
TourOracleResult OraclePtsp(const Instance& instance, int cap = kTourOracleCap);

OracleValues ComputeOracleValues(const Instance& instance,
                                 int cap = kTreeOracleCap);

}  // namespace kpcst
