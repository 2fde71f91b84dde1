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

// Test-only oracle: explicit enumeration of every successful path of one
// word, independent of the vector-propagation code it is used to check.

#ifndef MAXPLUS_TESTS_ORACLE_HPP
#define MAXPLUS_TESTS_ORACLE_HPP

#include <vector>

#include "maxplus/automaton.hpp"

namespace maxplus::oracle {

struct Path {
  std::vector<Transition> arcs;
  Weight weight;  // ingoing + arcs + outgoing
};

inline void extend(const Automaton& a, const Word& w, std::size_t pos, int state,
                   std::vector<Transition>* prefix, std::vector<Path>* out) {
  if (pos == w.size()) {
    if (!a.is_final(state)) return;
    Weight total = a.alpha(prefix->empty() ? state : (*prefix)[0].from);
    for (const Transition& t : *prefix) total = w_times(total, t.weight);
    total = w_times(total, a.beta(state));
    out->push_back({*prefix, total});
    return;
  }
  for (const Transition& t : a.transitions()) {
    if (t.from != state || t.label != w[pos]) continue;
    prefix->push_back(t);
    extend(a, w, pos + 1, t.to, prefix, out);
    prefix->pop_back();
  }
}

inline std::vector<Path> successful_paths(const Automaton& a, const Word& w) {
  std::vector<Path> out;
  for (int s = 0; s < a.num_states(); ++s) {
    if (!a.is_initial(s)) continue;
    std::vector<Transition> prefix;
    extend(a, w, 0, s, &prefix, &out);
  }
  return out;
}

inline Weight brute_evaluate(const Automaton& a, const Word& w) {
  Weight best;
  for (const Path& p : successful_paths(a, w)) best = w_plus(best, p.weight);
  return best;
}

inline BigInt brute_count(const Automaton& a, const Word& w) {
  return BigInt(successful_paths(a, w).size());
}

// All words of length <= bound over the automaton's alphabet, in
// length-lexicographic order.
inline std::vector<Word> all_words(const Automaton& a, int bound) {
  std::vector<Word> out{{}};
  std::size_t begin = 0;
  for (int d = 0; d < bound; ++d) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (int l = 0; l < a.num_labels(); ++l) {
        Word w = out[i];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

}  // namespace maxplus::oracle

#endif  // MAXPLUS_TESTS_ORACLE_HPP
