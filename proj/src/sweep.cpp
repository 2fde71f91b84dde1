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

#include "maxplus/sweep.hpp"

#include <algorithm>
#include <cstdint>

#include "maxplus/errors.hpp"

namespace maxplus {

namespace {

using Adjacency = std::vector<std::vector<std::vector<std::pair<int, Weight>>>>;

std::vector<Weight> initial_vector(const Automaton& a) {
  std::vector<Weight> vec(a.num_states());
  for (int s = 0; s < a.num_states(); ++s) vec[s] = a.alpha(s);
  return vec;
}

std::vector<Weight> advance(const Adjacency& adj, const std::vector<Weight>& vec,
                            int label) {
  std::vector<Weight> next(vec.size());
  for (std::size_t s = 0; s < vec.size(); ++s) {
    if (vec[s].is_bottom()) continue;
    for (const auto& [to, w] : adj[s][label])
      next[to] = w_plus(next[to], w_times(vec[s], w));
  }
  return next;
}

Weight accept(const Automaton& a, const std::vector<Weight>& vec) {
  Weight out;
  for (int s = 0; s < a.num_states(); ++s)
    out = w_plus(out, w_times(vec[s], a.beta(s)));
  return out;
}

Word word_of_index(int length, std::uint64_t index, int nlabels) {
  Word w(length);
  for (int i = length; i-- > 0;) {
    w[i] = static_cast<int>(index % nlabels);
    index /= nlabels;
  }
  return w;
}

}  // namespace

namespace {

template <class Sink>
void sample_dfs(const Automaton& a, const Adjacency& adj, int bound,
                const std::vector<Weight>& vec, Word& word, Sink&& sink) {
  sink(word, accept(a, vec));
  if (static_cast<int>(word.size()) == bound) return;
  for (int l = 0; l < a.num_labels(); ++l) {
    word.push_back(l);
    sample_dfs(a, adj, bound, advance(adj, vec, l), word, sink);
    word.pop_back();
  }
}

}  // namespace

SeriesSample sample_series(const Automaton& a, int bound) {
  SeriesSample out;
  out.alphabet = a.alphabet();
  out.bound = bound;
  const int nl = a.num_labels();
  const Adjacency adj = a.adjacency();
  const std::vector<Weight> root = initial_vector(a);

  // Words up to the task depth are handled serially; below it, every
  // prefix-rooted subtree becomes one cache-local task.
  int task_depth = 0;
  std::int64_t prefixes = 1;
  while (nl > 1 && task_depth < bound && prefixes < 256) {
    ++task_depth;
    prefixes *= nl;
  }

  {
    Word word;
    sample_dfs(a, adj, std::min(task_depth, bound), root, word,
               [&](const Word& w, Weight v) { out.table.emplace(w, std::move(v)); });
  }
  if (task_depth >= bound || nl <= 1) {
    if (nl <= 1 && task_depth < bound) {
      // Degenerate alphabets have a single subtree; finish it serially.
      Word word;
      sample_dfs(a, adj, bound, root, word, [&](const Word& w, Weight v) {
        out.table.insert_or_assign(w, std::move(v));
      });
    }
    return out;
  }

  std::vector<std::vector<std::pair<Word, Weight>>> results(prefixes);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < prefixes; ++i) {
    Word prefix = word_of_index(task_depth, i, nl);
    std::vector<Weight> vec = root;
    for (int l : prefix) vec = advance(adj, vec, l);
    Word word = prefix;
    bool first = true;  // the prefix itself is already in the table
    sample_dfs(a, adj, bound, vec, word, [&](const Word& w, Weight v) {
      if (first) {
        first = false;
        return;
      }
      results[i].emplace_back(w, std::move(v));
    });
  }
  for (auto& chunk : results)
    for (auto& [w, v] : chunk) out.table.emplace(std::move(w), std::move(v));
  return out;
}

SeriesSample sample_series_serial(const Automaton& a, int bound) {
  SeriesSample out;
  out.alphabet = a.alphabet();
  out.bound = bound;
  const Adjacency adj = a.adjacency();
  Word word;
  sample_dfs(a, adj, bound, initial_vector(a), word,
             [&](const Word& w, Weight v) { out.table.emplace(w, std::move(v)); });
  return out;
}

namespace {

using CountVec = std::vector<BigInt>;

CountVec count_initial(const Automaton& a) {
  CountVec vec(a.num_states());
  for (int s = 0; s < a.num_states(); ++s) vec[s] = a.is_initial(s) ? 1 : 0;
  return vec;
}

CountVec count_advance(const Adjacency& adj, const CountVec& vec, int label) {
  CountVec next(vec.size());
  for (std::size_t s = 0; s < vec.size(); ++s) {
    if (vec[s] == 0) continue;
    for (const auto& [to, w] : adj[s][label]) next[to] += vec[s];
  }
  return next;
}

BigInt count_accept(const Automaton& a, const CountVec& vec) {
  BigInt out = 0;
  for (int s = 0; s < a.num_states(); ++s)
    if (a.is_final(s)) out += vec[s];
  return out;
}

}  // namespace

BigInt degree_up_to(const Automaton& a, int bound) {
  const int nl = a.num_labels();
  const Adjacency adj = a.adjacency();
  std::vector<CountVec> layer{count_initial(a)};
  BigInt best = 0;
  for (int d = 0;; ++d) {
    for (const CountVec& vec : layer) best = std::max(best, count_accept(a, vec));
    if (d == bound || nl == 0 || layer.empty()) break;
    std::vector<CountVec> next(layer.size() * nl);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(next.size()); ++i)
      next[i] = count_advance(adj, layer[i / nl], static_cast<int>(i % nl));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    layer.swap(next);
  }
  return best;
}

namespace {

void degree_dfs(const Automaton& a, const Adjacency& adj, int bound,
                const CountVec& vec, int depth, BigInt* best) {
  *best = std::max(*best, count_accept(a, vec));
  if (depth == bound) return;
  for (int l = 0; l < a.num_labels(); ++l)
    degree_dfs(a, adj, bound, count_advance(adj, vec, l), depth + 1, best);
}

}  // namespace

BigInt degree_up_to_serial(const Automaton& a, int bound) {
  const Adjacency adj = a.adjacency();
  BigInt best = 0;
  degree_dfs(a, adj, bound, count_initial(a), 0, &best);
  return best;
}

namespace {

// One layer entry of the synchronized two-automata sweep: the minimal word
// (within its length level) reaching this pair of evaluation vectors.
struct PairEntry {
  std::vector<Weight> va, vb;
  Word word;
};

bool values_differ(const Automaton& a, const Automaton& b, const PairEntry& e,
                   bool support_only) {
  Weight x = accept(a, e.va);
  Weight y = accept(b, e.vb);
  if (support_only) return x.is_bottom() != y.is_bottom();
  return x != y;
}

std::optional<Word> mismatch_up_to(const Automaton& a, const Automaton& b,
                                   int bound, bool support_only) {
  if (a.alphabet() != b.alphabet())
    throw PreconditionError("alphabet mismatch");
  const int nl = a.num_labels();
  const Adjacency adja = a.adjacency();
  const Adjacency adjb = b.adjacency();

  std::vector<PairEntry> layer{{initial_vector(a), initial_vector(b), {}}};
  for (int d = 0;; ++d) {
    std::vector<char> bad(layer.size(), 0);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(layer.size()); ++i)
      bad[i] = values_differ(a, b, layer[i], support_only) ? 1 : 0;
    for (std::size_t i = 0; i < layer.size(); ++i)
      if (bad[i]) return layer[i].word;
    if (d == bound || nl == 0 || layer.empty()) break;

    std::vector<PairEntry> next(layer.size() * nl);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(next.size()); ++i) {
      const PairEntry& parent = layer[i / nl];
      int label = static_cast<int>(i % nl);
      next[i].va = advance(adja, parent.va, label);
      next[i].vb = advance(adjb, parent.vb, label);
      next[i].word = parent.word;
      next[i].word.push_back(label);
    }
    // Entries are in length-lexicographic word order; keeping the first of
    // each (va, vb) class keeps the minimal witness word for that class.
    std::stable_sort(next.begin(), next.end(),
                     [](const PairEntry& x, const PairEntry& y) {
                       if (x.va != y.va) return x.va < y.va;
                       return x.vb < y.vb;
                     });
    next.erase(std::unique(next.begin(), next.end(),
                           [](const PairEntry& x, const PairEntry& y) {
                             return x.va == y.va && x.vb == y.vb;
                           }),
               next.end());
    std::sort(next.begin(), next.end(), [](const PairEntry& x, const PairEntry& y) {
      return x.word < y.word;
    });
    layer.swap(next);
  }
  return std::nullopt;
}

}  // namespace

EquivResult equivalent_up_to(const Automaton& a, const Automaton& b, int bound) {
  auto cex = mismatch_up_to(a, b, bound, false);
  return EquivResult{!cex.has_value(), cex};
}

namespace {

std::optional<Word> mismatch_dfs(const Automaton& a, const Automaton& b,
                                 const Adjacency& adja, const Adjacency& adjb,
                                 int bound, const std::vector<Weight>& va,
                                 const std::vector<Weight>& vb, Word& word) {
  // Depth-first is not shortest-first, so collect per length level instead.
  if (accept(a, va) != accept(b, vb)) return word;
  if (static_cast<int>(word.size()) == bound) return std::nullopt;
  for (int l = 0; l < a.num_labels(); ++l) {
    word.push_back(l);
    auto hit = mismatch_dfs(a, b, adja, adjb, bound, advance(adja, va, l),
                            advance(adjb, vb, l), word);
    if (hit) return hit;
    word.pop_back();
  }
  return std::nullopt;
}

}  // namespace

EquivResult equivalent_up_to_serial(const Automaton& a, const Automaton& b,
                                    int bound) {
  if (a.alphabet() != b.alphabet())
    throw PreconditionError("alphabet mismatch");
  const Adjacency adja = a.adjacency();
  const Adjacency adjb = b.adjacency();
  // Iterative deepening keeps the witness shortest-then-lexicographic, like
  // the layered sweep: lengths below d are already known clean when depth d
  // runs, and depth-first visits equal-length words in lexicographic order.
  for (int d = 0; d <= bound; ++d) {
    Word word;
    auto hit = mismatch_dfs(a, b, adja, adjb, d, initial_vector(a),
                            initial_vector(b), word);
    if (hit) return EquivResult{false, *hit};
  }
  return EquivResult{true, std::nullopt};
}

std::optional<Word> support_counterexample(const Automaton& a, const Automaton& b,
                                           int bound) {
  return mismatch_up_to(a, b, bound, true);
}

int prefix_distance(const Word& u, const Word& v) {
  std::size_t lcp = 0;
  while (lcp < u.size() && lcp < v.size() && u[lcp] == v[lcp]) ++lcp;
  return static_cast<int>(u.size() + v.size() - 2 * lcp);
}

namespace {

struct SupportEntry {
  Word word;
  Rational value;
};

std::vector<SupportEntry> support_entries(const Automaton& a, int bound) {
  SeriesSample sample = sample_series(a, bound);
  std::vector<SupportEntry> out;
  for (const auto& [word, weight] : sample.table)
    if (weight.is_finite()) out.push_back({word, weight.value()});
  return out;
}

Rational pair_ratio(const SupportEntry& x, const SupportEntry& y) {
  Rational diff = x.value - y.value;
  if (diff < 0) diff = -diff;
  return diff / prefix_distance(x.word, y.word);
}

}  // namespace

Rational lipschitz_scan(const Automaton& a, int bound) {
  std::vector<SupportEntry> entries = support_entries(a, bound);
  Rational best = 0;
#pragma omp parallel
  {
    Rational local = 0;
#pragma omp for schedule(dynamic, 16) nowait
    for (std::int64_t i = 1; i < static_cast<std::int64_t>(entries.size()); ++i)
      for (std::int64_t j = 0; j < i; ++j)
        local = std::max(local, pair_ratio(entries[i], entries[j]));
#pragma omp critical
    best = std::max(best, local);
  }
  return best;
}

Rational lipschitz_scan_serial(const Automaton& a, int bound) {
  SeriesSample sample = sample_series_serial(a, bound);
  std::vector<SupportEntry> entries;
  for (const auto& [word, weight] : sample.table)
    if (weight.is_finite()) entries.push_back({word, weight.value()});
  Rational best = 0;
  for (std::size_t i = 1; i < entries.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      best = std::max(best, pair_ratio(entries[i], entries[j]));
  return best;
}

}  // namespace maxplus
