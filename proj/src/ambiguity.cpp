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

#include "maxplus/ambiguity.hpp"

#include <deque>

#include "maxplus/errors.hpp"

namespace maxplus {

namespace {

struct TripleSearch {
  const Automaton& a;
  int n;
  std::vector<std::vector<std::vector<int>>> succ;  // [state][label] -> states

  explicit TripleSearch(const Automaton& aut) : a(aut), n(aut.num_states()) {
    succ.assign(n, std::vector<std::vector<int>>(a.num_labels()));
    for (const Transition& t : a.transitions()) succ[t.from][t.label].push_back(t.to);
  }

  int encode(int r, int s, int t) const { return (r * n + s) * n + t; }

  // BFS from (p,p,q) to (p,q,q); returns the label sequence or nullopt.
  std::optional<Word> search(int p, int q) const {
    const int total = n * n * n;
    std::vector<int> parent(total, -2);  // -2 unseen, -1 root
    std::vector<int> via_label(total, -1);
    std::deque<int> queue;
    int start = encode(p, p, q), goal = encode(p, q, q);
    parent[start] = -1;
    queue.push_back(start);
    while (!queue.empty()) {
      int node = queue.front();
      queue.pop_front();
      if (node == goal) {
        Word w;
        for (int cur = node; parent[cur] != -1; cur = parent[cur])
          w.push_back(via_label[cur]);
        std::reverse(w.begin(), w.end());
        return w;
      }
      int t = node % n, s = (node / n) % n, r = node / (n * n);
      for (int label = 0; label < a.num_labels(); ++label) {
        for (int r2 : succ[r][label])
          for (int s2 : succ[s][label])
            for (int t2 : succ[t][label]) {
              int next = encode(r2, s2, t2);
              if (parent[next] == -2) {
                parent[next] = node;
                via_label[next] = label;
                queue.push_back(next);
              }
            }
      }
    }
    return std::nullopt;
  }
};

// Recovers one path labelled by `word` from `from` to `to`, as transitions.
std::optional<std::vector<Transition>> find_labelled_path(const Automaton& a,
                                                          int from, int to,
                                                          const Word& word) {
  std::vector<std::vector<std::vector<int>>> succ(
      a.num_states(), std::vector<std::vector<int>>(a.num_labels()));
  for (const Transition& t : a.transitions()) succ[t.from][t.label].push_back(t.to);

  // Backward reachability table: can position i at state s still reach `to`?
  std::vector<std::vector<char>> alive(word.size() + 1,
                                       std::vector<char>(a.num_states(), 0));
  alive[word.size()][to] = 1;
  for (std::size_t i = word.size(); i-- > 0;)
    for (int s = 0; s < a.num_states(); ++s)
      for (int s2 : succ[s][word[i]])
        if (alive[i + 1][s2]) alive[i][s] = 1;
  if (!alive[0][from]) return std::nullopt;

  std::vector<Transition> path;
  int cur = from;
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (int s2 : succ[cur][word[i]]) {
      if (alive[i + 1][s2]) {
        int idx = a.find_transition(cur, word[i], s2);
        path.push_back(a.transitions()[idx]);
        cur = s2;
        break;
      }
    }
  }
  return path;
}

}  // namespace

InfiniteAmbiguityResult is_infinitely_ambiguous(const Automaton& input) {
  Automaton a = trim(input);
  if (a.num_states() == 0 || a.transitions().empty()) return {};
  TripleSearch search(a);
  for (int p = 0; p < a.num_states(); ++p) {
    for (int q = 0; q < a.num_states(); ++q) {
      if (p == q) continue;
      auto word = search.search(p, q);
      if (!word) continue;
      AmbiguityWitness w;
      w.p = p;
      w.q = q;
      w.p_name = a.state_name(p);
      w.q_name = a.state_name(q);
      w.word = *word;
      w.loop_p = *find_labelled_path(a, p, p, *word);
      w.cross_pq = *find_labelled_path(a, p, q, *word);
      w.loop_q = *find_labelled_path(a, q, q, *word);
      return {true, std::move(w)};
    }
  }
  return {};
}

bool verify_ambiguity_witness(const Automaton& trimmed, const AmbiguityWitness& w) {
  if (w.p == w.q || w.word.empty()) return false;
  auto check = [&](const std::vector<Transition>& path, int from, int to) {
    if (path.size() != w.word.size()) return false;
    int cur = from;
    for (std::size_t i = 0; i < path.size(); ++i) {
      const Transition& t = path[i];
      if (t.from != cur || t.label != w.word[i]) return false;
      if (trimmed.find_transition(t.from, t.label, t.to) < 0) return false;
      cur = t.to;
    }
    return cur == to;
  };
  return check(w.loop_p, w.p, w.p) && check(w.cross_pq, w.p, w.q) &&
         check(w.loop_q, w.q, w.q);
}

}  // namespace maxplus
