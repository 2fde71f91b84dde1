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

#include "maxplus/dominance.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "maxplus/errors.hpp"
#include "maxplus/sweep.hpp"

namespace maxplus {

ProductAutomaton product(std::span<const Automaton> family, int guard_bound) {
  if (family.empty()) throw PreconditionError("product of an empty family");
  if (family.size() > 64)
    throw PreconditionError("product families above 64 members are not supported");
  for (const Automaton& m : family) {
    if (m.alphabet() != family[0].alphabet())
      throw PreconditionError("product family members disagree on the alphabet");
    if (!is_trim(m))
      throw PreconditionError("product family members must be trim");
    if (degree_up_to(m, guard_bound) > 1)
      throw PreconditionError(
          "product family member is ambiguous at the guard bound");
  }
  for (std::size_t i = 1; i < family.size(); ++i) {
    if (auto cex = support_counterexample(family[0], family[i], guard_bound))
      throw PreconditionError("product family members differ in support on '" +
                              format_word(family[0], *cex) + "'");
  }

  ProductAutomaton p;
  p.alphabet = family[0].alphabet();
  p.family_size = family.size();
  const std::size_t n = family.size();

  std::vector<decltype(family[0].adjacency())> adj;
  adj.reserve(n);
  for (const Automaton& m : family) adj.push_back(m.adjacency());

  auto tuple_of = [&](const std::vector<int>& t) {
    std::string name = "(";
    for (std::size_t i = 0; i < n; ++i) {
      if (i) name += ",";
      name += family[i].state_name(t[i]);
    }
    return name + ")";
  };

  std::map<std::vector<int>, int> index;
  std::deque<int> queue;
  auto intern = [&](const std::vector<int>& t) {
    auto it = index.find(t);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(p.states.size());
    p.states.push_back(t);
    p.state_names.push_back(tuple_of(t));
    std::vector<Weight> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = family[i].alpha(t[i]);
      b[i] = family[i].beta(t[i]);
    }
    p.alpha.emplace_back(std::move(a));
    p.beta.emplace_back(std::move(b));
    index.emplace(t, id);
    queue.push_back(id);
    return id;
  };

  // Accessible tuples from the all-initial ones.
  {
    std::vector<std::vector<int>> initial_lists;
    for (const Automaton& m : family) initial_lists.push_back(m.initial_states());
    std::vector<std::size_t> pick(n, 0);
    bool any_empty = std::any_of(initial_lists.begin(), initial_lists.end(),
                                 [](const auto& v) { return v.empty(); });
    while (!any_empty) {
      std::vector<int> t(n);
      for (std::size_t i = 0; i < n; ++i) t[i] = initial_lists[i][pick[i]];
      intern(t);
      std::size_t i = n;
      bool done = false;
      while (true) {
        if (i == 0) {
          done = true;
          break;
        }
        --i;
        if (++pick[i] < initial_lists[i].size()) break;
        pick[i] = 0;
      }
      if (done) break;
    }
  }

  std::vector<ProductAutomaton::Arc> arcs;
  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    std::vector<int> t = p.states[id];
    for (int label = 0; label < static_cast<int>(p.alphabet.size()); ++label) {
      std::vector<const std::vector<std::pair<int, Weight>>*> moves(n);
      bool any_empty = false;
      for (std::size_t i = 0; i < n; ++i) {
        moves[i] = &adj[i][t[i]][label];
        if (moves[i]->empty()) any_empty = true;
      }
      if (any_empty) continue;  // some coordinate would be bottom
      std::vector<std::size_t> pick(n, 0);
      while (true) {
        std::vector<int> dest(n);
        std::vector<Weight> w(n);
        for (std::size_t i = 0; i < n; ++i) {
          dest[i] = (*moves[i])[pick[i]].first;
          w[i] = (*moves[i])[pick[i]].second;
        }
        arcs.push_back({id, label, TupleWeight(std::move(w)), intern(dest)});
        std::size_t i = n;
        bool done = false;
        while (true) {
          if (i == 0) {
            done = true;
            break;
          }
          --i;
          if (++pick[i] < moves[i]->size()) break;
          pick[i] = 0;
        }
        if (done) break;
      }
    }
  }

  // Keep the co-accessible part (trim with respect to all-final states).
  std::vector<std::vector<int>> rev(p.states.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) rev[arcs[i].to].push_back(arcs[i].from);
  std::vector<char> keep(p.states.size(), 0);
  std::deque<int> back;
  for (std::size_t s = 0; s < p.states.size(); ++s)
    if (p.is_final(static_cast<int>(s))) {
      keep[s] = 1;
      back.push_back(static_cast<int>(s));
    }
  while (!back.empty()) {
    int s = back.front();
    back.pop_front();
    for (int from : rev[s])
      if (!keep[from]) {
        keep[from] = 1;
        back.push_back(from);
      }
  }

  ProductAutomaton out;
  out.alphabet = p.alphabet;
  out.family_size = p.family_size;
  std::vector<int> remap(p.states.size(), -1);
  for (std::size_t s = 0; s < p.states.size(); ++s) {
    if (!keep[s]) continue;
    remap[s] = static_cast<int>(out.states.size());
    out.states.push_back(p.states[s]);
    out.state_names.push_back(p.state_names[s]);
    out.alpha.push_back(p.alpha[s]);
    out.beta.push_back(p.beta[s]);
  }
  std::sort(arcs.begin(), arcs.end(), [](const auto& x, const auto& y) {
    return std::tie(x.from, x.label, x.to) < std::tie(y.from, y.label, y.to);
  });
  for (const auto& arc : arcs)
    if (remap[arc.from] >= 0 && remap[arc.to] >= 0)
      out.arcs.push_back({remap[arc.from], arc.label, arc.weight, remap[arc.to]});
  return out;
}

std::uint64_t victorious(const TupleWeight& x) {
  if (!x.all_finite())
    throw PreconditionError("victorious requires an all-finite tuple");
  Weight best = x[0];
  for (std::size_t i = 1; i < x.size(); ++i) best = w_plus(best, x[i]);
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] == best) mask |= std::uint64_t(1) << i;
  return mask;
}

std::uint64_t full_coordinate_mask(std::size_t family_size) {
  return family_size >= 64 ? ~std::uint64_t(0)
                           : (std::uint64_t(1) << family_size) - 1;
}

std::vector<std::size_t> mask_to_indices(std::uint64_t mask, std::size_t family_size) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < family_size; ++i)
    if (mask & (std::uint64_t(1) << i)) out.push_back(i);
  return out;
}

namespace {

// Iterative Tarjan; SCC ids are assigned in reverse topological order and
// flipped afterwards.
std::pair<std::vector<int>, int> tarjan_sccs(int n,
                                             const std::vector<std::vector<int>>& succ) {
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
      if (f.next < succ[f.v].size()) {
        int w = succ[f.v][f.next++];
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
  for (int& id : scc) id = count - 1 - id;  // topological order
  return {scc, count};
}

// Johnson-style enumeration of the elementary circuits inside one SCC,
// working on arc indices so parallel arcs count as distinct circuits.
class CircuitEnumerator {
 public:
  CircuitEnumerator(const ProductAutomaton& p, const std::vector<int>& members,
                    std::size_t cap, std::size_t* count)
      : p_(p), cap_(cap), count_(count) {
    for (int s : members) local_.emplace(s, static_cast<int>(order_.size())), order_.push_back(s);
    arcs_.assign(order_.size(), {});
    for (std::size_t i = 0; i < p.arcs.size(); ++i) {
      auto from = local_.find(p.arcs[i].from);
      auto to = local_.find(p.arcs[i].to);
      if (from != local_.end() && to != local_.end())
        arcs_[from->second].push_back(static_cast<int>(i));
    }
  }

  std::vector<Circuit> run() {
    std::vector<Circuit> out;
    const int n = static_cast<int>(order_.size());
    for (start_ = 0; start_ < n; ++start_) {
      blocked_.assign(n, 0);
      blocked_by_.assign(n, {});
      dfs(start_, &out);
    }
    return out;
  }

 private:
  // Returns true when some circuit through v was closed.
  bool dfs(int v, std::vector<Circuit>* out) {
    bool found = false;
    blocked_[v] = 1;
    for (int arc_idx : arcs_[v]) {
      int w = local_.at(p_.arcs[arc_idx].to);
      if (w < start_) continue;  // circuits are rooted at their least vertex
      path_.push_back(arc_idx);
      if (w == start_) {
        emit(out);
        found = true;
      } else if (!blocked_[w]) {
        if (dfs(w, out)) found = true;
      }
      path_.pop_back();
    }
    if (found) {
      unblock(v);
    } else {
      for (int arc_idx : arcs_[v]) {
        int w = local_.at(p_.arcs[arc_idx].to);
        if (w >= start_) blocked_by_[w].insert(v);
      }
    }
    return found;
  }

  void unblock(int v) {
    blocked_[v] = 0;
    for (int w : std::vector<int>(blocked_by_[v].begin(), blocked_by_[v].end())) {
      blocked_by_[v].erase(w);
      if (blocked_[w]) unblock(w);
    }
  }

  void emit(std::vector<Circuit>* out) {
    if (++*count_ > cap_)
      throw CapExceededError("simple circuit enumeration exceeded the cap");
    Circuit c;
    c.arcs = path_;
    std::vector<Weight> total(p_.family_size, Weight::one());
    for (int arc_idx : path_)
      for (std::size_t i = 0; i < p_.family_size; ++i)
        total[i] = w_times(total[i], p_.arcs[arc_idx].weight[i]);
    c.total = TupleWeight(std::move(total));
    c.victorious = victorious(c.total);
    out->push_back(std::move(c));
  }

  const ProductAutomaton& p_;
  std::map<int, int> local_;
  std::vector<int> order_;
  std::vector<std::vector<int>> arcs_;  // local vertex -> arc indices
  std::vector<char> blocked_;
  std::vector<std::set<int>> blocked_by_;
  std::vector<int> path_;
  int start_ = 0;
  std::size_t cap_;
  std::size_t* count_;
};

}  // namespace

SccReport analyze_sccs(const ProductAutomaton& p, std::size_t circuit_cap) {
  const int n = static_cast<int>(p.states.size());
  std::vector<std::vector<int>> succ(n);
  for (const auto& arc : p.arcs) succ[arc.from].push_back(arc.to);
  auto [scc_of, count] = tarjan_sccs(n, succ);

  SccReport report;
  report.family_size = p.family_size;
  report.scc_of = scc_of;
  report.sccs.resize(count);
  for (int s = 0; s < n; ++s) report.sccs[scc_of[s]].states.push_back(s);

  std::set<std::pair<int, int>> edges;
  for (const auto& arc : p.arcs)
    if (scc_of[arc.from] != scc_of[arc.to])
      edges.emplace(scc_of[arc.from], scc_of[arc.to]);
  report.condensation_edges.assign(edges.begin(), edges.end());

  std::size_t circuit_count = 0;
  for (SccInfo& info : report.sccs) {
    CircuitEnumerator enumerator(p, info.states, circuit_cap, &circuit_count);
    info.circuits = enumerator.run();
    info.victorious = full_coordinate_mask(p.family_size);
    for (const Circuit& c : info.circuits) info.victorious &= c.victorious;
  }
  return report;
}

DominanceResult satisfies_dominance(const ProductAutomaton& p, const SccReport& report) {
  const int n = static_cast<int>(p.states.size());
  std::vector<std::vector<std::pair<int, int>>> succ(n);  // (arc idx, to)
  for (std::size_t i = 0; i < p.arcs.size(); ++i)
    succ[p.arcs[i].from].emplace_back(static_cast<int>(i), p.arcs[i].to);

  auto scc_mask = [&](int s) { return report.sccs[report.scc_of[s]].victorious; };

  // BFS over (state, achievable intersection mask); parents for the witness.
  std::map<std::pair<int, std::uint64_t>, std::pair<std::pair<int, std::uint64_t>, int>>
      parent;  // node -> (previous node, arc index); arc -1 at roots
  std::deque<std::pair<int, std::uint64_t>> queue;
  auto visit = [&](std::pair<int, std::uint64_t> node,
                   std::pair<int, std::uint64_t> from, int arc) {
    if (parent.count(node)) return;
    parent.emplace(node, std::make_pair(from, arc));
    queue.push_back(node);
  };

  for (int s = 0; s < n; ++s)
    if (p.is_initial(s)) visit({s, scc_mask(s)}, {-1, 0}, -1);

  std::pair<int, std::uint64_t> bad{-1, 0};
  while (!queue.empty()) {
    auto node = queue.front();
    queue.pop_front();
    if (node.second == 0) {
      bad = node;
      break;
    }
    for (const auto& [arc, to] : succ[node.first])
      visit({to, node.second & scc_mask(to)}, node, arc);
  }
  if (bad.first == -1) return {};

  DominanceResult result;
  result.satisfied = false;
  std::vector<int> arcs_back;
  auto cur = bad;
  while (true) {
    auto [prev, arc] = parent.at(cur);
    if (arc == -1) {
      result.witness_states.push_back(cur.first);
      break;
    }
    arcs_back.push_back(arc);
    cur = prev;
  }
  std::reverse(arcs_back.begin(), arcs_back.end());
  for (int arc : arcs_back) {
    result.witness_word.push_back(p.arcs[arc].label);
    result.witness_states.push_back(p.arcs[arc].to);
  }

  // Extend to a final state so the witness is a successful path; the
  // intersection stays empty along any extension.
  int tail = result.witness_states.back();
  if (!p.is_final(tail)) {
    std::map<int, std::pair<int, int>> bfs_parent;  // state -> (prev, arc)
    std::deque<int> q2{tail};
    bfs_parent.emplace(tail, std::make_pair(-1, -1));
    int final_state = -1;
    while (!q2.empty() && final_state == -1) {
      int s = q2.front();
      q2.pop_front();
      if (p.is_final(s)) {
        final_state = s;
        break;
      }
      for (const auto& [arc, to] : succ[s])
        if (!bfs_parent.count(to)) {
          bfs_parent.emplace(to, std::make_pair(s, arc));
          q2.push_back(to);
        }
    }
    // Trim product: a final state is always reachable.
    std::vector<int> ext_arcs;
    for (int s = final_state; bfs_parent.at(s).first != -1; s = bfs_parent.at(s).first)
      ext_arcs.push_back(bfs_parent.at(s).second);
    std::reverse(ext_arcs.begin(), ext_arcs.end());
    for (int arc : ext_arcs) {
      result.witness_word.push_back(p.arcs[arc].label);
      result.witness_states.push_back(p.arcs[arc].to);
    }
  }
  return result;
}

}  // namespace maxplus
