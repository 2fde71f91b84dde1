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

#include "maxplus/sequentiality.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "maxplus/covering.hpp"
#include "maxplus/errors.hpp"
#include "maxplus/unambiguizer.hpp"

namespace maxplus {

namespace {

// Pair graph of synchronized same-letter moves. Each edge carries the two
// transition weights; a cycle witnesses a twin violation iff the two sides
// accumulate different totals.
struct PairGraph {
  struct Edge {
    int from, to, label;
    Weight wx, wy;
  };
  std::vector<std::pair<int, int>> nodes;  // state pairs, discovery order
  std::vector<Edge> edges;
  std::vector<std::vector<int>> out;       // node -> edge indices
  std::vector<int> roots;                  // initial pairs
};

PairGraph build_pair_graph(const Automaton& a) {
  PairGraph g;
  auto adj = a.adjacency();
  std::map<std::pair<int, int>, int> index;
  std::deque<int> queue;
  auto intern = [&](int p, int q) {
    auto it = index.find({p, q});
    if (it != index.end()) return it->second;
    int id = static_cast<int>(g.nodes.size());
    g.nodes.emplace_back(p, q);
    g.out.emplace_back();
    index.emplace(std::make_pair(p, q), id);
    queue.push_back(id);
    return id;
  };
  for (int p : a.initial_states())
    for (int q : a.initial_states()) g.roots.push_back(intern(p, q));
  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    auto [p, q] = g.nodes[id];
    for (int label = 0; label < a.num_labels(); ++label)
      for (const auto& [p2, wx] : adj[p][label])
        for (const auto& [q2, wy] : adj[q][label]) {
          int to = intern(p2, q2);
          g.out[id].push_back(static_cast<int>(g.edges.size()));
          g.edges.push_back({id, to, label, wx, wy});
        }
  }
  return g;
}

// Tarjan over the pair graph (iterative, discovery order preserved).
std::vector<int> pair_sccs(const PairGraph& g) {
  const int n = static_cast<int>(g.nodes.size());
  std::vector<int> disc(n, -1), low(n, 0), scc(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  int time = 0, count = 0;
  struct Frame {
    int v;
    std::size_t next;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> frames{{root, 0}};
    disc[root] = low[root] = time++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next < g.out[f.v].size()) {
        int w = g.edges[g.out[f.v][f.next++]].to;
        if (disc[w] == -1) {
          disc[w] = low[w] = time++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        int v = f.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        if (low[v] == disc[v]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            scc[w] = count;
            if (w == v) break;
          }
          ++count;
        }
      }
    }
  }
  return scc;
}

// Shortest word from an initial pair to `target`.
Word access_word(const PairGraph& g, int target) {
  std::vector<int> parent_edge(g.nodes.size(), -2);
  std::deque<int> queue;
  for (int r : g.roots)
    if (parent_edge[r] == -2) {
      parent_edge[r] = -1;
      queue.push_back(r);
    }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == target) break;
    for (int e : g.out[v]) {
      int w = g.edges[e].to;
      if (parent_edge[w] == -2) {
        parent_edge[w] = e;
        queue.push_back(w);
      }
    }
  }
  Word word;
  for (int v = target; parent_edge[v] != -1; v = g.edges[parent_edge[v]].from)
    word.push_back(g.edges[parent_edge[v]].label);
  std::reverse(word.begin(), word.end());
  return word;
}

// Shortest edge path from `from` to `to` staying inside one SCC.
std::vector<int> scc_path(const PairGraph& g, const std::vector<int>& scc, int from,
                          int to) {
  if (from == to) return {};
  std::vector<int> parent_edge(g.nodes.size(), -2);
  std::deque<int> queue{from};
  parent_edge[from] = -1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int e : g.out[v]) {
      int w = g.edges[e].to;
      if (scc[w] != scc[from] || parent_edge[w] != -2) continue;
      parent_edge[w] = e;
      if (w == to) {
        std::vector<int> path;
        for (int x = to; parent_edge[x] != -1; x = g.edges[parent_edge[x]].from)
          path.push_back(parent_edge[x]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(w);
    }
  }
  throw std::logic_error("scc_path: no path inside the SCC");
}

TwinReport violation_from_cycle(const Automaton& a, const PairGraph& g, int base,
                                const std::vector<int>& cycle_edges) {
  TwinReport report;
  report.twins = false;
  report.p_name = a.state_name(g.nodes[base].first);
  report.q_name = a.state_name(g.nodes[base].second);
  report.u1 = access_word(g, base);
  Weight x = Weight::one(), y = Weight::one();
  for (int e : cycle_edges) {
    report.u2.push_back(g.edges[e].label);
    x = w_times(x, g.edges[e].wx);
    y = w_times(y, g.edges[e].wy);
  }
  report.x2 = x;
  report.y2 = y;
  return report;
}

}  // namespace

TwinReport twin_property(const Automaton& a) {
  PairGraph g = build_pair_graph(a);
  std::vector<int> scc = pair_sccs(g);

  // Potentials along a spanning tree of each SCC; any edge off by a nonzero
  // amount closes an unbalanced cycle.
  std::vector<Weight> pot(g.nodes.size());
  std::vector<char> assigned(g.nodes.size(), 0);
  for (std::size_t root = 0; root < g.nodes.size(); ++root) {
    if (assigned[root]) continue;
    assigned[root] = 1;
    pot[root] = Weight::one();
    std::deque<int> queue{static_cast<int>(root)};
    std::vector<int> component{static_cast<int>(root)};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int e : g.out[v]) {
        int w = g.edges[e].to;
        if (scc[w] != scc[root] || assigned[w]) continue;
        assigned[w] = 1;
        pot[w] = Weight(pot[v].value() + g.edges[e].wx.value() -
                        g.edges[e].wy.value());
        component.push_back(w);
        queue.push_back(w);
      }
    }
    // Verify every intra-SCC edge against the potentials.
    for (int v : component) {
      for (int e : g.out[v]) {
        int w = g.edges[e].to;
        if (scc[w] != scc[root]) continue;
        Weight expect(pot[v].value() + g.edges[e].wx.value() - g.edges[e].wy.value());
        if (expect == pot[w]) continue;
        // Unbalanced: close a cycle through this edge, or fall back to the
        // tree cycle when the edge-closed one balances out.
        std::vector<int> back = scc_path(g, scc, w, static_cast<int>(root));
        std::vector<int> forth = scc_path(g, scc, static_cast<int>(root), v);
        std::vector<int> cycle = forth;
        cycle.push_back(e);
        cycle.insert(cycle.end(), back.begin(), back.end());
        TwinReport r = violation_from_cycle(a, g, static_cast<int>(root), cycle);
        if (r.x2 != r.y2) return r;
        std::vector<int> tree_cycle = scc_path(g, scc, static_cast<int>(root), w);
        tree_cycle.insert(tree_cycle.end(), back.begin(), back.end());
        r = violation_from_cycle(a, g, static_cast<int>(root), tree_cycle);
        if (r.x2 != r.y2) return r;
        throw std::logic_error("twin_property: inconsistent potentials");
      }
    }
  }
  return TwinReport{};
}

Automaton determinize_weighted(const Automaton& a, std::size_t state_cap) {
  // Subset states: (state, residual) pairs normalized so the maximum
  // residual is 0.
  using Subset = std::vector<std::pair<int, Weight>>;
  auto adj = a.adjacency();

  auto subset_name = [&](const Subset& s) {
    std::string name = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) name += ",";
      name += a.state_name(s[i].first) + ":" + to_string(s[i].second);
    }
    return name + "}";
  };

  Automaton out(a.alphabet());
  std::map<Subset, int> index;
  std::deque<int> queue;
  std::vector<Subset> subsets;
  auto intern = [&](Subset s) {
    auto it = index.find(s);
    if (it != index.end()) return it->second;
    if (subsets.size() >= state_cap)
      throw CapExceededError("determinization diverged (twin property violated?)");
    int id = out.add_state(subset_name(s));
    Weight fin;
    for (const auto& [state, residual] : s)
      fin = w_plus(fin, w_times(residual, a.beta(state)));
    if (fin.is_finite()) out.set_final(id, fin);
    subsets.push_back(s);
    index.emplace(std::move(s), id);
    queue.push_back(id);
    return id;
  };

  std::vector<int> initials = a.initial_states();
  if (initials.empty()) return out;
  Weight top;
  for (int s : initials) top = w_plus(top, a.alpha(s));
  Subset start;
  for (int s : initials) start.emplace_back(s, w_minus(a.alpha(s), top));
  out.set_initial(intern(std::move(start)), top);

  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    const Subset subset = subsets[id];
    for (int label = 0; label < a.num_labels(); ++label) {
      std::map<int, Weight> best;  // target state -> accumulated residual
      for (const auto& [state, residual] : subset) {
        for (const auto& [to, w] : adj[state][label]) {
          Weight cand = w_times(residual, w);
          auto [it, inserted] = best.emplace(to, cand);
          if (!inserted) it->second = w_plus(it->second, cand);
        }
      }
      if (best.empty()) continue;
      Weight emitted;
      for (const auto& [state, w] : best) emitted = w_plus(emitted, w);
      Subset next;
      next.reserve(best.size());
      for (const auto& [state, w] : best)
        next.emplace_back(state, w_minus(w, emitted));
      out.add_transition(id, label, emitted, intern(std::move(next)));
    }
  }
  return out;
}

namespace {

Automaton union_of(const std::vector<Automaton>& parts) {
  Automaton acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = aut_union(acc, parts[i]);
  return acc;
}

}  // namespace

PipelineReport decide(const Automaton& input, int bound) {
  PipelineReport report;
  report.verification_bound = bound;

  Automaton a = trim(input);
  auto inf = is_infinitely_ambiguous(a);
  if (inf.infinite) {
    // The series classification is out of reach at the automaton level;
    // report the structural verdict only.
    report.infinitely_ambiguous = true;
    report.ambiguity_witness = inf.witness;
    return report;
  }

  report.leaves = decompose_unambiguous(a);
  report.leaf_count = report.leaves.size();
  if (!report.leaves.empty() && report.leaves.front().num_states() > 0) {
    if (auto cex = equivalent_up_to(union_of(report.leaves), a, bound);
        !cex.equivalent)
      throw std::logic_error("decide: leaf union deviates from the input on '" +
                             format_word(a, *cex.counterexample) + "'");
  }
  if (a.num_states() == 0) {
    // Empty series: sequential by the one-state automaton with no arcs.
    report.dominance = true;
    report.unambiguous = true;
    report.sequential = true;
    report.unambiguous_automaton = a;
    report.sequential_automaton = a;
    return report;
  }

  ProductAutomaton p = product(report.leaves, bound);
  SccReport sccs = analyze_sccs(p);
  DominanceResult dom = satisfies_dominance(p, sccs);
  report.dominance = dom.satisfied;
  report.dominance_result = dom;

  if (!dom.satisfied) {
    report.unambiguous = false;
    report.sequential = false;
    return report;
  }

  report.unambiguous = true;
  Automaton ua = build_unambiguous(report.leaves, p, sccs);
  if (auto check = equivalent_up_to(ua, a, bound); !check.equivalent)
    throw std::logic_error(
        "decide: the unambiguous automaton deviates from the input on '" +
        format_word(a, *check.counterexample) + "'");
  report.unambiguous_automaton = ua;

  TwinReport twin = twin_property(ua);
  report.twin = twin;
  report.sequential = twin.twins;
  if (twin.twins) {
    Automaton seq = determinize_weighted(ua);
    if (!is_sequential(seq))
      throw std::logic_error("decide: determinization output is not sequential");
    if (auto check = equivalent_up_to(seq, a, bound); !check.equivalent)
      throw std::logic_error(
          "decide: the sequential automaton deviates from the input on '" +
          format_word(a, *check.counterexample) + "'");
    report.sequential_automaton = std::move(seq);
  }
  return report;
}

}  // namespace maxplus
