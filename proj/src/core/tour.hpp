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

#include <span>
#include <vector>

#include "core/compose.hpp"
#include "core/gw.hpp"
#include "core/instance.hpp"
#include "core/kmst.hpp"

namespace kpcst {

// Tour variant (k-PCTSP) on complete metric graphs: a k-TSP tour and a
// penalty-TSP tour, concatenated at the root and shortcut.

// Cost change of every single-vertex shortcut, in the order applied.
// Under the triangle inequality each entry is <= 0.
struct ShortcutLog {
  std::vector<Rational> deltas;

  bool AllNonIncreasing() const;
};

// Throws kNonMetricGraph unless the graph is complete and metric.
void RequireMetric(const Graph& graph);

// Drops every repeated occurrence of a closed walk, keeping first visits.
// walk[0] stays first. Each removal of y between x and z logs
// c(x, z) - c(x, y) - c(y, z).
Tour ShortcutClosedWalk(const Graph& graph, std::span<const Vertex> walk,
                        ShortcutLog* log = nullptr);

// Doubles the tree, walks the Euler circuit from the root (children in
// increasing id order) and shortcuts it.
Tour TreeToTour(const SolutionTree& tree, const Graph& graph, Vertex root,
                ShortcutLog* log = nullptr);

// k-TSP: tour over the k-MST tree.
Tour KtspSolve(const Instance& instance, const KmstStrategy& strategy,
               ShortcutLog* log = nullptr);

struct PtspResult {
  Tour tour;
  Rational objective;  // tour cost + original penalties of skipped vertices
  PcstResult pcst;     // on halved penalties
};

// Penalty TSP: GW on the instance with every penalty halved, then doubled
// into a tour.
PtspResult PtspSolve(const Instance& instance, const GwOptions& options = {},
                     ShortcutLog* log = nullptr);

// Concatenates both closed walks at the root and shortcuts. Throws
// kRootMismatch when either tour does not start at the same vertex.
Tour MergeToursShortcut(const Tour& first, const Tour& second,
                        const Graph& graph, ShortcutLog* log = nullptr);

struct KpctspResult {
  Tour tour;
  Rational objective;
  Tour ktsp;
  PtspResult ptsp;
  ShortcutLog shortcuts;  // every shortcut step of all three stages
  SolveReport report;
};

KpctspResult SolveKpctsp(const Instance& instance,
                         const ComposeOptions& options = {});

}  // namespace kpcst
