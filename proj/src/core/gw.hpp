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

#include <functional>
#include <string>
#include <vector>

#include "core/graph.hpp"
#include "core/instance.hpp"
#include "core/rational.hpp"

namespace kpcst {

// Rooted Goemans-Williamson primal-dual algorithm for prize-collecting
// Steiner tree. Growth is simulated event by event in exact arithmetic.

// One component that existed at some point during growth. Components are
// never destroyed; a merge creates a new one and links the two halves as
// its children, so `sets` is the full laminar merge history.
struct Moat {
  std::vector<Vertex> members;  // sorted
  Rational y;                   // dual raised while this exact set was live
  bool contains_root = false;
  bool deactivated = false;     // ran out of penalty at some point
  int parent = -1;              // component it merged into, or -1
  std::vector<int> children;
  Rational penalty_sum;         // sum of member penalties (root excluded)
  Rational inner_dual;          // sum of y over this set and its descendants
  Rational Slack() const { return penalty_sum - inner_dual; }
};

struct DualState {
  std::vector<Moat> sets;

  // Sum of y_S over all sets (root-containing sets carry y = 0).
  Rational Total() const;
};

enum class EventKind { kEdgeTight, kDeactivation };

struct TraceEvent {
  Rational time;
  EventKind kind = EventKind::kEdgeTight;
  VertexPair edge;    // kEdgeTight
  int component = -1; // kDeactivation: index into DualState::sets
};

struct GrowthTrace {
  std::vector<TraceEvent> events;
};

// One line per event: `t=<rational> kind=<...> subject=<...>`.
std::string FormatTrace(const GrowthTrace& trace, const DualState& dual);

struct GrowResult {
  EdgeSet forest;
  DualState dual;
  GrowthTrace trace;
  // Per vertex: covered by some deactivated set.
  std::vector<char> covered_by_deactivated;
};

// Called after every event with the live dual state.
using GrowObserver =
    std::function<void(const DualState&, const GrowthTrace&)>;

// Growth phase. The instance's k is ignored.
GrowResult GwGrow(const Instance& instance,
                  const GrowObserver& observer = nullptr);

// Keeps exactly the vertices of the root's tree that lie on a path from the
// root to a vertex no deactivated set ever covered. With strong_prune, a
// bottom-up net-worth pass follows.
SolutionTree GwPrune(const GrowResult& grown, const Instance& instance,
                     bool strong_prune = false);

struct PcstResult {
  SolutionTree tree;
  DualState dual;
  GrowthTrace trace;
  SolveReport report;
};

struct GwOptions {
  bool strong_prune = false;
};

PcstResult GwPcst(const Instance& instance, const GwOptions& options = {});

struct GuaranteeCheck {
  bool holds = false;
  Rational factor;  // 2 - 1/(n-1)
  Rational lhs;     // edge cost + factor * penalty cost
  Rational rhs;     // factor * dual total
  Rational slack;   // rhs - lhs
};

// c(E_F) + f * pi(V \ V_F) <= f * sum y_S with f = 2 - 1/(n-1), exactly.
// Throws kUndefinedFactor for n < 2.
GuaranteeCheck VerifyGwGuarantee(const SolutionTree& tree,
                                 const DualState& dual, int n);

// Violations of laminarity, nonnegativity, edge feasibility
// (sum of y over sets cut by e <= c(e)) and penalty feasibility
// (inner dual <= penalty sum). Empty means feasible.
std::vector<std::string> DualDefects(const Instance& instance,
                                     const DualState& dual);

}  // namespace kpcst
