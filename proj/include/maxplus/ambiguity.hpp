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

#ifndef MAXPLUS_AMBIGUITY_HPP
#define MAXPLUS_AMBIGUITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "maxplus/automaton.hpp"
#include "maxplus/sweep.hpp"

namespace maxplus {

/// Certificate of infinite ambiguity: two distinct states p, q of the trim
/// automaton and a word v with paths p ->v p, p ->v q and q ->v q. The three
/// paths are transition sequences of trim(input).
struct AmbiguityWitness {
  int p = -1, q = -1;
  std::string p_name, q_name;
  Word word;
  std::vector<Transition> loop_p, cross_pq, loop_q;
};

struct InfiniteAmbiguityResult {
  bool infinite = false;
  std::optional<AmbiguityWitness> witness;
};

// Decides infinite ambiguity on trim(a) by synchronized triple reachability:
// for each ordered pair (p, q), p != q, search a path from (p, p, q) to
// (p, q, q). The witness word is the shortest one for the first pair found
// in state order.
InfiniteAmbiguityResult is_infinitely_ambiguous(const Automaton& a);

// Replays the three witness paths against the given (trim) automaton.
bool verify_ambiguity_witness(const Automaton& trimmed, const AmbiguityWitness& w);

}  // namespace maxplus

#endif  // MAXPLUS_AMBIGUITY_HPP
