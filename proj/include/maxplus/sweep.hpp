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

#ifndef MAXPLUS_SWEEP_HPP
#define MAXPLUS_SWEEP_HPP

#include <map>
#include <optional>
#include <vector>

#include "maxplus/automaton.hpp"

// Bounded-length sweeps over all words up to a length bound. The default
// entry points run their inner loops under OpenMP; the *_serial variants are
// straightforward reference implementations kept for testing and for the
// benchmark tool. Results are exact and identical across both.

namespace maxplus {

/// Coefficient table of a series restricted to words of length <= bound.
struct SeriesSample {
  std::vector<std::string> alphabet;
  int bound = 0;
  std::map<Word, Weight> table;  // one entry per word, possibly bottom
};

SeriesSample sample_series(const Automaton& a, int bound);
SeriesSample sample_series_serial(const Automaton& a, int bound);

// Maximum number of successful paths over words of length <= bound.
// The sweep deduplicates equal path-count vectors per length level, so the
// cost is governed by the number of distinct vectors, not by |alphabet|^bound.
BigInt degree_up_to(const Automaton& a, int bound);
BigInt degree_up_to_serial(const Automaton& a, int bound);

struct EquivResult {
  bool equivalent = true;
  std::optional<Word> counterexample;  // shortest, then lexicographically first
};

// Pointwise equality of the two series (bottom included) on |w| <= bound.
EquivResult equivalent_up_to(const Automaton& a, const Automaton& b, int bound);
EquivResult equivalent_up_to_serial(const Automaton& a, const Automaton& b, int bound);

// Shortest word on which exactly one of the two series is bottom.
std::optional<Word> support_counterexample(const Automaton& a, const Automaton& b,
                                           int bound);

// d(u,v) = |u| + |v| - 2 |u /\ v|.
int prefix_distance(const Word& u, const Word& v);

// max over distinct support pairs of |<S,u> - <S,v>| / d(u,v); 0 when the
// support has fewer than two words.
Rational lipschitz_scan(const Automaton& a, int bound);
Rational lipschitz_scan_serial(const Automaton& a, int bound);

}  // namespace maxplus

#endif  // MAXPLUS_SWEEP_HPP
