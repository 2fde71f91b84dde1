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

#ifndef MAXPLUS_AUTOMATON_HPP
#define MAXPLUS_AUTOMATON_HPP

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "maxplus/matrix.hpp"
#include "maxplus/weight.hpp"

namespace maxplus {

// A word is a sequence of label indices into the automaton's alphabet.
using Word = std::vector<int>;

struct Transition {
  int from;
  int label;
  Weight weight;
  int to;

  friend bool operator==(const Transition& a, const Transition& b) {
    return a.from == b.from && a.label == b.label && a.to == b.to &&
           a.weight == b.weight;
  }
};

/// A max-plus automaton: named states, an ordered alphabet, initial and
/// final weight vectors, and weighted transitions. Absent weights encode
/// bottom; transition weights are never bottom and (from,label,to) triples
/// are unique. Instances are treated as immutable once built.
class Automaton {
 public:
  Automaton() = default;
  explicit Automaton(std::vector<std::string> alphabet);

  int add_state(const std::string& name);
  void set_initial(int state, Weight w);
  void set_final(int state, Weight w);
  void add_transition(int from, int label, Weight w, int to);
  void add_transition(std::string_view from, std::string_view label,
                      Weight w, std::string_view to);

  int num_states() const { return static_cast<int>(states_.size()); }
  int num_labels() const { return static_cast<int>(alphabet_.size()); }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::vector<std::string>& state_names() const { return states_; }
  const std::string& state_name(int s) const { return states_[s]; }
  const std::string& label_name(int a) const { return alphabet_[a]; }

  // -1 when absent.
  int state_index(std::string_view name) const;
  int label_index(std::string_view name) const;

  const Weight& alpha(int s) const { return alpha_[s]; }
  const Weight& beta(int s) const { return beta_[s]; }
  bool is_initial(int s) const { return alpha_[s].is_finite(); }
  bool is_final(int s) const { return beta_[s].is_finite(); }
  std::vector<int> initial_states() const;
  std::vector<int> final_states() const;

  // Sorted by (from, label, to).
  const std::vector<Transition>& transitions() const { return transitions_; }
  // -1 when absent; otherwise the index of the unique matching transition.
  int find_transition(int from, int label, int to) const;

  // Per-state, per-label outgoing (to, weight) lists.
  std::vector<std::vector<std::vector<std::pair<int, Weight>>>> adjacency() const;

  // The transition matrix of one letter.
  WeightMatrix label_matrix(int label) const;

 private:
  std::vector<std::string> alphabet_;
  std::vector<std::string> states_;
  std::vector<Weight> alpha_, beta_;
  std::vector<Transition> transitions_;
  std::unordered_map<std::string, int> state_index_;
  std::unordered_map<std::string, int> label_index_;
};

// alpha mu(w) beta; bottom iff w is not in the support. For the empty word
// this is max_i alpha_i + beta_i.
Weight evaluate(const Automaton& a, const Word& w);

// Number of successful paths labelled by w, counted in the counting
// semiring (every present arc counts 1).
BigInt count_successful_paths(const Automaton& a, const Word& w);

// Keeps exactly the states that lie on some successful path.
Automaton trim(const Automaton& a);
bool is_trim(const Automaton& a);

// Tensor product: tuple states, coordinate weights combined with w_times.
// All members must share the alphabet.
Automaton tensor(std::span<const Automaton> family);
Automaton tensor(const Automaton& a, const Automaton& b);

// Disjoint union; realizes the pointwise max of the two series. Clashing
// state names get a numeric suffix.
Automaton aut_union(const Automaton& a, const Automaton& b);

// Heap-model automaton: M(piece)_{ij} is 1 when both slots are occupied by
// the piece, 0 on the diagonal outside the piece, bottom elsewhere. Every
// slot is initial with weight 0; the given slots are final with weight 0.
Automaton heap_automaton(
    const std::vector<std::string>& slots,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& pieces,
    const std::vector<std::string>& finals);

// Splits a word string into labels: character by character when every label
// is a single character, otherwise on whitespace. Throws ParseError on
// unknown labels.
Word parse_word(const Automaton& a, std::string_view text);
std::string format_word(const Automaton& a, const Word& w);

// Returns a copy with every transition weight shifted by c.
Automaton shift_weights(const Automaton& a, const Weight& c);

// Structural sequentiality: a unique initial state and at most one
// outgoing transition per state and letter.
bool is_sequential(const Automaton& a);

}  // namespace maxplus

#endif  // MAXPLUS_AUTOMATON_HPP
