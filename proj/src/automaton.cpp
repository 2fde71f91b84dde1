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

#include "maxplus/automaton.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "maxplus/errors.hpp"

namespace maxplus {

Automaton::Automaton(std::vector<std::string> alphabet)
    : alphabet_(std::move(alphabet)) {
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (alphabet_[i].empty())
      throw PreconditionError("empty label in alphabet");
    if (!label_index_.emplace(alphabet_[i], static_cast<int>(i)).second)
      throw PreconditionError("duplicate label '" + alphabet_[i] + "'");
  }
}

int Automaton::add_state(const std::string& name) {
  if (name.empty()) throw PreconditionError("empty state name");
  int id = num_states();
  if (!state_index_.emplace(name, id).second)
    throw PreconditionError("duplicate state name '" + name + "'");
  states_.push_back(name);
  alpha_.emplace_back();
  beta_.emplace_back();
  return id;
}

void Automaton::set_initial(int state, Weight w) { alpha_.at(state) = std::move(w); }
void Automaton::set_final(int state, Weight w) { beta_.at(state) = std::move(w); }

void Automaton::add_transition(int from, int label, Weight w, int to) {
  if (from < 0 || from >= num_states() || to < 0 || to >= num_states())
    throw PreconditionError("transition references unknown state");
  if (label < 0 || label >= num_labels())
    throw PreconditionError("transition references unknown label");
  if (w.is_bottom())
    throw PreconditionError("transition weight must not be -inf (omit the arc instead)");
  Transition t{from, label, std::move(w), to};
  auto pos = std::lower_bound(
      transitions_.begin(), transitions_.end(), t, [](const Transition& x, const Transition& y) {
        return std::tie(x.from, x.label, x.to) < std::tie(y.from, y.label, y.to);
      });
  if (pos != transitions_.end() && pos->from == t.from && pos->label == t.label &&
      pos->to == t.to)
    throw PreconditionError("duplicate transition (" + states_[from] + ", " +
                            alphabet_[label] + ", " + states_[to] + ")");
  transitions_.insert(pos, std::move(t));
}

void Automaton::add_transition(std::string_view from, std::string_view label,
                               Weight w, std::string_view to) {
  int f = state_index(from), a = label_index(label), t = state_index(to);
  if (f < 0) throw PreconditionError("unknown state '" + std::string(from) + "'");
  if (t < 0) throw PreconditionError("unknown state '" + std::string(to) + "'");
  if (a < 0) throw PreconditionError("unknown label '" + std::string(label) + "'");
  add_transition(f, a, std::move(w), t);
}

int Automaton::state_index(std::string_view name) const {
  auto it = state_index_.find(std::string(name));
  return it == state_index_.end() ? -1 : it->second;
}

int Automaton::label_index(std::string_view name) const {
  auto it = label_index_.find(std::string(name));
  return it == label_index_.end() ? -1 : it->second;
}

std::vector<int> Automaton::initial_states() const {
  std::vector<int> out;
  for (int s = 0; s < num_states(); ++s)
    if (is_initial(s)) out.push_back(s);
  return out;
}

std::vector<int> Automaton::final_states() const {
  std::vector<int> out;
  for (int s = 0; s < num_states(); ++s)
    if (is_final(s)) out.push_back(s);
  return out;
}

int Automaton::find_transition(int from, int label, int to) const {
  Transition key{from, label, Weight::one(), to};
  auto pos = std::lower_bound(
      transitions_.begin(), transitions_.end(), key,
      [](const Transition& x, const Transition& y) {
        return std::tie(x.from, x.label, x.to) < std::tie(y.from, y.label, y.to);
      });
  if (pos == transitions_.end() || pos->from != from || pos->label != label ||
      pos->to != to)
    return -1;
  return static_cast<int>(pos - transitions_.begin());
}

std::vector<std::vector<std::vector<std::pair<int, Weight>>>> Automaton::adjacency()
    const {
  std::vector<std::vector<std::vector<std::pair<int, Weight>>>> adj(
      num_states(),
      std::vector<std::vector<std::pair<int, Weight>>>(num_labels()));
  for (const Transition& t : transitions_)
    adj[t.from][t.label].emplace_back(t.to, t.weight);
  return adj;
}

WeightMatrix Automaton::label_matrix(int label) const {
  WeightMatrix m(num_states(), num_states());
  for (const Transition& t : transitions_)
    if (t.label == label) m.at(t.from, t.to) = t.weight;
  return m;
}

Weight evaluate(const Automaton& a, const Word& w) {
  for (int x : w)
    if (x < 0 || x >= a.num_labels())
      throw PreconditionError("word contains an unknown label");
  std::vector<Weight> vec(a.num_states());
  for (int s = 0; s < a.num_states(); ++s) vec[s] = a.alpha(s);
  auto adj = a.adjacency();
  std::vector<Weight> next(a.num_states());
  for (int x : w) {
    std::fill(next.begin(), next.end(), Weight::bottom());
    for (int s = 0; s < a.num_states(); ++s) {
      if (vec[s].is_bottom()) continue;
      for (const auto& [to, weight] : adj[s][x])
        next[to] = w_plus(next[to], w_times(vec[s], weight));
    }
    vec.swap(next);
  }
  Weight out;
  for (int s = 0; s < a.num_states(); ++s)
    out = w_plus(out, w_times(vec[s], a.beta(s)));
  return out;
}

BigInt count_successful_paths(const Automaton& a, const Word& w) {
  for (int x : w)
    if (x < 0 || x >= a.num_labels())
      throw PreconditionError("word contains an unknown label");
  std::vector<BigInt> vec(a.num_states());
  for (int s = 0; s < a.num_states(); ++s) vec[s] = a.is_initial(s) ? 1 : 0;
  auto adj = a.adjacency();
  std::vector<BigInt> next(a.num_states());
  for (int x : w) {
    std::fill(next.begin(), next.end(), BigInt(0));
    for (int s = 0; s < a.num_states(); ++s) {
      if (vec[s] == 0) continue;
      for (const auto& [to, weight] : adj[s][x]) next[to] += vec[s];
    }
    vec.swap(next);
  }
  BigInt out = 0;
  for (int s = 0; s < a.num_states(); ++s)
    if (a.is_final(s)) out += vec[s];
  return out;
}

namespace {

std::vector<char> reachable(const Automaton& a, const std::vector<int>& seeds,
                            bool forward) {
  std::vector<std::vector<int>> succ(a.num_states());
  for (const Transition& t : a.transitions())
    succ[forward ? t.from : t.to].push_back(forward ? t.to : t.from);
  std::vector<char> seen(a.num_states(), 0);
  std::deque<int> queue;
  for (int s : seeds) {
    if (!seen[s]) {
      seen[s] = 1;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (int t : succ[s])
      if (!seen[t]) {
        seen[t] = 1;
        queue.push_back(t);
      }
  }
  return seen;
}

}  // namespace

Automaton trim(const Automaton& a) {
  std::vector<char> acc = reachable(a, a.initial_states(), true);
  std::vector<char> coacc = reachable(a, a.final_states(), false);
  std::vector<int> remap(a.num_states(), -1);
  Automaton out(a.alphabet());
  for (int s = 0; s < a.num_states(); ++s) {
    if (acc[s] && coacc[s]) {
      int id = out.add_state(a.state_name(s));
      remap[s] = id;
      if (a.is_initial(s)) out.set_initial(id, a.alpha(s));
      if (a.is_final(s)) out.set_final(id, a.beta(s));
    }
  }
  for (const Transition& t : a.transitions())
    if (remap[t.from] >= 0 && remap[t.to] >= 0)
      out.add_transition(remap[t.from], t.label, t.weight, remap[t.to]);
  return out;
}

bool is_trim(const Automaton& a) {
  std::vector<char> acc = reachable(a, a.initial_states(), true);
  std::vector<char> coacc = reachable(a, a.final_states(), false);
  for (int s = 0; s < a.num_states(); ++s)
    if (!acc[s] || !coacc[s]) return false;
  return true;
}

namespace {

void require_same_alphabet(const Automaton& a, const Automaton& b) {
  if (a.alphabet() != b.alphabet())
    throw PreconditionError("alphabet mismatch");
}

std::string tuple_name(std::span<const Automaton> family,
                       const std::vector<int>& tuple) {
  std::string name = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) name += ",";
    name += family[i].state_name(tuple[i]);
  }
  name += ")";
  return name;
}

}  // namespace

Automaton tensor(std::span<const Automaton> family) {
  if (family.empty()) throw PreconditionError("tensor of an empty family");
  for (const Automaton& m : family) require_same_alphabet(family[0], m);

  std::size_t total = 1;
  for (const Automaton& m : family) total *= static_cast<std::size_t>(m.num_states());

  Automaton out(family[0].alphabet());
  // Mixed-radix enumeration of state tuples, last member fastest.
  std::vector<int> tuple(family.size(), 0);
  std::vector<std::vector<int>> tuples;
  tuples.reserve(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = family.size(); i-- > 0;) {
      tuple[i] = static_cast<int>(rest % family[i].num_states());
      rest /= family[i].num_states();
    }
    out.add_state(tuple_name(family, tuple));
    tuples.push_back(tuple);
    Weight init = Weight::one(), fin = Weight::one();
    for (std::size_t i = 0; i < family.size(); ++i) {
      init = w_times(init, family[i].alpha(tuple[i]));
      fin = w_times(fin, family[i].beta(tuple[i]));
    }
    if (init.is_finite()) out.set_initial(static_cast<int>(idx), init);
    if (fin.is_finite()) out.set_final(static_cast<int>(idx), fin);
  }

  std::vector<std::size_t> strides(family.size());
  std::size_t stride = 1;
  for (std::size_t i = family.size(); i-- > 0;) {
    strides[i] = stride;
    stride *= family[i].num_states();
  }

  std::vector<decltype(family[0].adjacency())> adj;
  adj.reserve(family.size());
  for (const Automaton& m : family) adj.push_back(m.adjacency());

  const std::size_t n = family.size();
  for (int label = 0; label < out.num_labels(); ++label) {
    for (std::size_t from = 0; from < total; ++from) {
      // Cartesian product of the member moves on this label.
      std::vector<const std::vector<std::pair<int, Weight>>*> moves(n);
      bool any_empty = false;
      for (std::size_t i = 0; i < n; ++i) {
        moves[i] = &adj[i][tuples[from][i]][label];
        if (moves[i]->empty()) any_empty = true;
      }
      if (any_empty) continue;
      std::vector<std::size_t> pick(n, 0);
      while (true) {
        std::size_t to = 0;
        Weight w = Weight::one();
        for (std::size_t i = 0; i < n; ++i) {
          to += strides[i] * static_cast<std::size_t>((*moves[i])[pick[i]].first);
          w = w_times(w, (*moves[i])[pick[i]].second);
        }
        out.add_transition(static_cast<int>(from), label, w, static_cast<int>(to));
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
  return out;
}

Automaton tensor(const Automaton& a, const Automaton& b) {
  const Automaton family[] = {a, b};
  return tensor(std::span<const Automaton>(family, 2));
}

Automaton aut_union(const Automaton& a, const Automaton& b) {
  require_same_alphabet(a, b);
  Automaton out(a.alphabet());
  std::vector<int> amap(a.num_states()), bmap(b.num_states());
  for (int s = 0; s < a.num_states(); ++s) {
    amap[s] = out.add_state(a.state_name(s));
    if (a.is_initial(s)) out.set_initial(amap[s], a.alpha(s));
    if (a.is_final(s)) out.set_final(amap[s], a.beta(s));
  }
  for (int s = 0; s < b.num_states(); ++s) {
    std::string name = b.state_name(s);
    int suffix = 2;
    while (out.state_index(name) >= 0)
      name = b.state_name(s) + "#" + std::to_string(suffix++);
    bmap[s] = out.add_state(name);
    if (b.is_initial(s)) out.set_initial(bmap[s], b.alpha(s));
    if (b.is_final(s)) out.set_final(bmap[s], b.beta(s));
  }
  for (const Transition& t : a.transitions())
    out.add_transition(amap[t.from], t.label, t.weight, amap[t.to]);
  for (const Transition& t : b.transitions())
    out.add_transition(bmap[t.from], t.label, t.weight, bmap[t.to]);
  return out;
}

Automaton heap_automaton(
    const std::vector<std::string>& slots,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& pieces,
    const std::vector<std::string>& finals) {
  std::vector<std::string> alphabet;
  alphabet.reserve(pieces.size());
  for (const auto& [label, occupied] : pieces) alphabet.push_back(label);
  Automaton out(alphabet);
  for (const std::string& slot : slots) {
    int id = out.add_state(slot);
    out.set_initial(id, Weight::one());
  }
  for (const std::string& slot : finals) {
    int id = out.state_index(slot);
    if (id < 0) throw PreconditionError("final slot '" + slot + "' not declared");
    out.set_final(id, Weight::one());
  }
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    const auto& occupied = pieces[p].second;
    if (occupied.empty())
      throw PreconditionError("piece '" + pieces[p].first + "' occupies no slot");
    std::vector<char> in(slots.size(), 0);
    for (const std::string& slot : occupied) {
      int id = out.state_index(slot);
      if (id < 0) throw PreconditionError("slot '" + slot + "' not declared");
      in[id] = 1;
    }
    for (int i = 0; i < out.num_states(); ++i) {
      if (in[i]) {
        for (int j = 0; j < out.num_states(); ++j)
          if (in[j]) out.add_transition(i, static_cast<int>(p), Weight(1), j);
      } else {
        out.add_transition(i, static_cast<int>(p), Weight::one(), i);
      }
    }
  }
  return out;
}

Word parse_word(const Automaton& a, std::string_view text) {
  bool single = true;
  for (const std::string& l : a.alphabet())
    if (l.size() != 1) single = false;
  Word out;
  if (single) {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      int id = a.label_index(std::string_view(&c, 1));
      if (id < 0)
        throw ParseError("unknown label '" + std::string(1, c) + "' in word");
      out.push_back(id);
    }
    return out;
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    if (end > pos) {
      int id = a.label_index(text.substr(pos, end - pos));
      if (id < 0)
        throw ParseError("unknown label '" + std::string(text.substr(pos, end - pos)) +
                         "' in word");
      out.push_back(id);
    }
    pos = end;
  }
  return out;
}

std::string format_word(const Automaton& a, const Word& w) {
  bool single = true;
  for (const std::string& l : a.alphabet())
    if (l.size() != 1) single = false;
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single && i) out += " ";
    out += a.label_name(w[i]);
  }
  return out;
}

Automaton shift_weights(const Automaton& a, const Weight& c) {
  Automaton out(a.alphabet());
  for (int s = 0; s < a.num_states(); ++s) {
    out.add_state(a.state_name(s));
    if (a.is_initial(s)) out.set_initial(s, a.alpha(s));
    if (a.is_final(s)) out.set_final(s, a.beta(s));
  }
  for (const Transition& t : a.transitions())
    out.add_transition(t.from, t.label, w_times(t.weight, c), t.to);
  return out;
}

bool is_sequential(const Automaton& a) {
  if (a.initial_states().size() != 1) return false;
  auto adj = a.adjacency();
  for (int s = 0; s < a.num_states(); ++s)
    for (int l = 0; l < a.num_labels(); ++l)
      if (adj[s][l].size() > 1) return false;
  return true;
}

}  // namespace maxplus
