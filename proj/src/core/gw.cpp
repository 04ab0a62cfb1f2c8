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

#include "core/gw.hpp"

#include <algorithm>
#include <chrono>
#include <deque>

#include "core/error.hpp"

namespace kpcst {

Rational DualState::Total() const {
  Rational sum = 0;
  for (const Moat& s : sets) sum += s.y;
  return sum;
}

std::string FormatTrace(const GrowthTrace& trace, const DualState& dual) {
  std::string out;
  for (const TraceEvent& e : trace.events) {
    out += "t=" + ToString(e.time);
    if (e.kind == EventKind::kEdgeTight) {
      out += " kind=EdgeTight subject=" + std::to_string(e.edge.first) + "-" +
             std::to_string(e.edge.second);
    } else {
      out += " kind=Deactivation subject={";
      const auto& members = dual.sets[e.component].members;
      for (size_t i = 0; i < members.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(members[i]);
      }
      out += '}';
    }
    out += '\n';
  }
  return out;
}

GrowResult GwGrow(const Instance& instance, const GrowObserver& observer) {
  ValidateInstance(instance);
  const Graph& g = instance.graph;
  const int n = instance.vertex_count();
  GrowResult out;
  auto& sets = out.dual.sets;
  std::vector<int> comp_of(n);
  std::vector<char> active;
  std::vector<int> live;
  std::vector<Rational> load(n, Rational(0));  // sum of y over sets holding v

  for (int v = 0; v < n; ++v) {
    Moat m;
    m.members = {v};
    m.y = 0;
    m.contains_root = v == instance.root;
    m.penalty_sum = m.contains_root ? Rational(0) : instance.penalties[v];
    m.inner_dual = 0;
    sets.push_back(std::move(m));
    active.push_back(v == instance.root ? 0 : 1);
    comp_of[v] = v;
    live.push_back(v);
  }

  Rational now = 0;
  while (true) {
    // Earliest deactivation; ties go to the smallest member id.
    int deact = -1;
    Rational deact_delta;
    for (int c : live) {
      if (!active[c]) continue;
      Rational delta = sets[c].Slack();
      if (deact < 0 || delta < deact_delta ||
          (delta == deact_delta &&
           sets[c].members.front() < sets[deact].members.front())) {
        deact = c;
        deact_delta = std::move(delta);
      }
    }
    // Earliest tight edge; ties by (cost, endpoints).
    int tight = -1;
    Rational tight_delta;
    for (int i = 0; i < static_cast<int>(g.edges().size()); ++i) {
      const Edge& e = g.edges()[i];
      const int a = comp_of[e.u];
      const int b = comp_of[e.v];
      if (a == b) continue;
      const int rate = active[a] + active[b];
      if (rate == 0) continue;
      Rational delta = (e.cost - load[e.u] - load[e.v]) / rate;
      bool better = tight < 0 || delta < tight_delta;
      if (!better && delta == tight_delta) {
        const Edge& cur = g.edges()[tight];
        better = e.cost < cur.cost || (e.cost == cur.cost && e.pair() < cur.pair());
      }
      if (better) {
        tight = i;
        tight_delta = std::move(delta);
      }
    }
    if (deact < 0 && tight < 0) break;

    const bool take_deact =
        deact >= 0 && (tight < 0 || deact_delta <= tight_delta);
    const Rational delta = take_deact ? deact_delta : tight_delta;
    if (sgn(delta) > 0) {
      now += delta;
      for (int c : live) {
        if (!active[c]) continue;
        sets[c].y += delta;
        sets[c].inner_dual += delta;
        for (Vertex v : sets[c].members) load[v] += delta;
      }
    }

    TraceEvent event;
    event.time = now;
    if (take_deact) {
      active[deact] = 0;
      sets[deact].deactivated = true;
      event.kind = EventKind::kDeactivation;
      event.component = deact;
    } else {
      const Edge& e = g.edges()[tight];
      const int a = comp_of[e.u];
      const int b = comp_of[e.v];
      Moat merged;
      std::merge(sets[a].members.begin(), sets[a].members.end(),
                 sets[b].members.begin(), sets[b].members.end(),
                 std::back_inserter(merged.members));
      merged.y = 0;
      merged.contains_root = sets[a].contains_root || sets[b].contains_root;
      merged.penalty_sum = sets[a].penalty_sum + sets[b].penalty_sum;
      merged.inner_dual = sets[a].inner_dual + sets[b].inner_dual;
      merged.children = {a, b};
      const int id = static_cast<int>(sets.size());
      sets[a].parent = id;
      sets[b].parent = id;
      for (Vertex v : merged.members) comp_of[v] = id;
      active.push_back(merged.contains_root ? 0 : 1);
      sets.push_back(std::move(merged));
      std::erase_if(live, [&](int c) { return c == a || c == b; });
      live.push_back(id);
      out.forest.Insert(e.pair());
      event.kind = EventKind::kEdgeTight;
      event.edge = e.pair();
    }
    out.trace.events.push_back(std::move(event));
    if (observer) observer(out.dual, out.trace);
  }

  out.covered_by_deactivated.assign(n, 0);
  for (const Moat& s : sets) {
    if (!s.deactivated) continue;
    for (Vertex v : s.members) out.covered_by_deactivated[v] = 1;
  }
  return out;
}

namespace {

std::vector<std::vector<std::pair<Vertex, const Rational*>>> Adjacency(
    const Graph& g, const EdgeSet& edges) {
  std::vector<std::vector<std::pair<Vertex, const Rational*>>> adj(
      g.vertex_count());
  for (const VertexPair& p : edges) {
    const Rational* c = &g.CostOf(p.first, p.second);
    adj[p.first].emplace_back(p.second, c);
    adj[p.second].emplace_back(p.first, c);
  }
  return adj;
}

// Bottom-up net-worth pruning of a tree rooted at `root`.
std::vector<Vertex> StrongPrune(const Instance& instance,
                                const EdgeSet& edges) {
  const auto adj = Adjacency(instance.graph, edges);
  const int n = instance.vertex_count();
  std::vector<int> parent(n, -1);
  std::vector<const Rational*> up_cost(n, nullptr);
  std::vector<Vertex> order;
  std::vector<Vertex> stack = {instance.root};
  std::vector<char> seen(n, 0);
  seen[instance.root] = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (auto [w, c] : adj[v]) {
      if (seen[w]) continue;
      seen[w] = 1;
      parent[w] = v;
      up_cost[w] = c;
      stack.push_back(w);
    }
  }
  std::vector<Rational> net(n, Rational(0));
  std::vector<char> dropped(n, 0);
  for (Vertex v : order) {
    net[v] = v == instance.root ? Rational(0) : instance.penalties[v];
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    if (v == instance.root) continue;
    Rational gain = net[v] - *up_cost[v];
    if (sgn(gain) < 0) {
      dropped[v] = 1;
    } else {
      net[parent[v]] += gain;
    }
  }
  std::vector<Vertex> kept;
  for (Vertex v : order) {
    if (v == instance.root || (!dropped[v] && std::binary_search(
                                   kept.begin(), kept.end(), parent[v]))) {
      kept.insert(std::upper_bound(kept.begin(), kept.end(), v), v);
    }
  }
  return kept;
}

EdgeSet InducedTreeEdges(const EdgeSet& edges,
                         const std::vector<Vertex>& vertices) {
  std::vector<VertexPair> kept;
  for (const VertexPair& p : edges) {
    if (std::binary_search(vertices.begin(), vertices.end(), p.first) &&
        std::binary_search(vertices.begin(), vertices.end(), p.second)) {
      kept.push_back(p);
    }
  }
  return EdgeSet(std::move(kept));
}

}  // namespace

SolutionTree GwPrune(const GrowResult& grown, const Instance& instance,
                     bool strong_prune) {
  const Graph& g = instance.graph;
  const int n = instance.vertex_count();
  // Root's tree in the forest.
  const auto classes = ConnectedComponents(g, grown.forest);
  std::vector<Vertex> root_class;
  for (const auto& c : classes) {
    if (std::binary_search(c.begin(), c.end(), instance.root)) root_class = c;
  }
  std::vector<char> in(n, 0);
  for (Vertex v : root_class) in[v] = 1;
  EdgeSet tree_edges = InducedTreeEdges(grown.forest, root_class);

  // Strip covered leaves until every leaf is the root or never-deactivated.
  std::vector<int> degree(n, 0);
  const auto adj = Adjacency(g, tree_edges);
  for (Vertex v : root_class) degree[v] = static_cast<int>(adj[v].size());
  std::deque<Vertex> leaves;
  for (Vertex v : root_class) {
    if (v != instance.root && degree[v] <= 1 && grown.covered_by_deactivated[v]) {
      leaves.push_back(v);
    }
  }
  while (!leaves.empty()) {
    const Vertex v = leaves.front();
    leaves.pop_front();
    if (!in[v]) continue;
    in[v] = 0;
    for (auto [w, c] : adj[v]) {
      if (!in[w]) continue;
      if (--degree[w] <= 1 && w != instance.root &&
          grown.covered_by_deactivated[w]) {
        leaves.push_back(w);
      }
    }
  }
  std::vector<Vertex> kept;
  for (Vertex v : root_class) {
    if (in[v]) kept.push_back(v);
  }
  EdgeSet kept_edges = InducedTreeEdges(tree_edges, kept);
  if (strong_prune) {
    kept = StrongPrune(instance, kept_edges);
    kept_edges = InducedTreeEdges(kept_edges, kept);
  }
  return SolutionTree::Build(g, instance.penalties, std::move(kept),
                             std::move(kept_edges));
}

PcstResult GwPcst(const Instance& instance, const GwOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  GrowResult grown = GwGrow(instance);
  PcstResult out;
  out.tree = GwPrune(grown, instance, options.strong_prune);
  out.dual = std::move(grown.dual);
  out.trace = std::move(grown.trace);

  SolveReport& r = out.report;
  r.solver = "gw_pcst";
  r.problem = "pcst";
  r.solution = out.tree;
  r.objective = out.tree.total;
  const Rational dual_total = out.dual.Total();
  r.lower_bound = LowerBound{dual_total, BoundSource::kDual};
  r.Detail("dual_sum", ToString(dual_total));
  r.Detail("events", std::to_string(out.trace.events.size()));
  r.Detail("strong_prune", options.strong_prune ? "true" : "false");
  const int n = instance.vertex_count();
  if (n >= 2) {
    const GuaranteeCheck check = VerifyGwGuarantee(out.tree, out.dual, n);
    r.Detail("gw_guarantee", check.holds ? "holds" : "violated");
    r.Detail("gw_guarantee_slack", ToString(check.slack));
    // total <= f * dual follows whenever the weighted form holds.
    if (out.tree.total <= check.factor * dual_total) {
      r.certified_factor = check.factor;
    }
  } else {
    r.Detail("gw_guarantee", "undefined (n < 2)");
    r.certified_factor = Rational(1);
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  return out;
}

GuaranteeCheck VerifyGwGuarantee(const SolutionTree& tree,
                                 const DualState& dual, int n) {
  if (n < 2) {
    throw Error(ErrorCode::kUndefinedFactor,
                "factor 2 - 1/(n-1) needs n >= 2");
  }
  GuaranteeCheck c;
  c.factor = Rational(2) - Rational(1, n - 1);
  c.lhs = tree.edge_cost + c.factor * tree.penalty_cost;
  c.rhs = c.factor * dual.Total();
  c.slack = c.rhs - c.lhs;
  c.holds = sgn(c.slack) >= 0;
  return c;
}

std::vector<std::string> DualDefects(const Instance& instance,
                                     const DualState& dual) {
  std::vector<std::string> defects;
  const int n = instance.vertex_count();
  const auto& sets = dual.sets;
  std::vector<std::vector<char>> member(sets.size(), std::vector<char>(n, 0));
  for (size_t i = 0; i < sets.size(); ++i) {
    for (Vertex v : sets[i].members) member[i][v] = 1;
    if (sgn(sets[i].y) < 0) {
      defects.push_back("negative y on set " + std::to_string(i));
    }
    if (sets[i].contains_root != static_cast<bool>(member[i][instance.root])) {
      defects.push_back("root flag wrong on set " + std::to_string(i));
    }
    if (sets[i].contains_root && sgn(sets[i].y) != 0) {
      defects.push_back("root set " + std::to_string(i) + " carries dual");
    }
  }
  auto subset = [&](size_t a, size_t b) {  // a within b
    for (Vertex v : sets[a].members) {
      if (!member[b][v]) return false;
    }
    return true;
  };
  for (size_t a = 0; a < sets.size(); ++a) {
    for (size_t b = a + 1; b < sets.size(); ++b) {
      bool overlap = false;
      for (Vertex v : sets[a].members) overlap |= member[b][v] != 0;
      if (overlap && !subset(a, b) && !subset(b, a)) {
        defects.push_back("sets " + std::to_string(a) + " and " +
                          std::to_string(b) + " are not laminar");
      }
    }
  }
  for (const Edge& e : instance.graph.edges()) {
    Rational load = 0;
    for (size_t i = 0; i < sets.size(); ++i) {
      if (member[i][e.u] != member[i][e.v]) load += sets[i].y;
    }
    if (load > e.cost) {
      defects.push_back("edge " + std::to_string(e.u) + "-" +
                        std::to_string(e.v) + " overpacked: " +
                        ToString(load) + " > " + ToString(e.cost));
    }
  }
  for (size_t s = 0; s < sets.size(); ++s) {
    if (sets[s].contains_root) continue;
    Rational inner = 0;
    for (size_t t = 0; t < sets.size(); ++t) {
      if (subset(t, s)) inner += sets[t].y;
    }
    Rational penalty = 0;
    for (Vertex v : sets[s].members) penalty += instance.penalties[v];
    if (inner > penalty) {
      defects.push_back("set " + std::to_string(s) + " exceeds its penalty: " +
                        ToString(inner) + " > " + ToString(penalty));
    }
  }
  return defects;
}

}  // namespace kpcst
