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

#ifndef MAXPLUS_SEQUENTIALITY_HPP
#define MAXPLUS_SEQUENTIALITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "maxplus/ambiguity.hpp"
#include "maxplus/automaton.hpp"
#include "maxplus/dominance.hpp"
#include "maxplus/sweep.hpp"

namespace maxplus {

/// Outcome of the twin check. On failure: states p, q reachable by the
/// common word u1, and a common cycle word u2 whose two cycle weights x2, y2
/// differ.
struct TwinReport {
  bool twins = true;
  std::string p_name, q_name;
  Word u1, u2;
  Weight x2, y2;
};

// Pair-graph twin check over reachable state pairs: the verdict is true iff
// every cycle of the pair graph has equal accumulated weight on both sides,
// verified per SCC with potentials.
TwinReport twin_property(const Automaton& a);

// Weighted subset construction. The input should be unambiguous and satisfy
// the twin property; a violation surfaces as cap overflow
// (CapExceededError).
Automaton determinize_weighted(const Automaton& a, std::size_t state_cap = 100000);

/// Everything the top-level decision pipeline found out about one automaton.
/// The series verdicts are empty when the input automaton is infinitely
/// ambiguous (the series-level classification is then out of reach).
struct PipelineReport {
  bool infinitely_ambiguous = false;
  std::optional<AmbiguityWitness> ambiguity_witness;

  std::size_t leaf_count = 0;
  std::vector<Automaton> leaves;

  std::optional<bool> dominance;
  std::optional<DominanceResult> dominance_result;

  std::optional<bool> unambiguous;  // series verdict
  std::optional<TwinReport> twin;
  std::optional<bool> sequential;   // series verdict

  std::optional<Automaton> unambiguous_automaton;
  std::optional<Automaton> sequential_automaton;
  int verification_bound = 0;
};

// Runs: trim, infinite-ambiguity check, decomposition into unambiguous
// leaves, dominance on their product, unambiguous-automaton construction,
// twin check and weighted determinization. Constructed artifacts are
// cross-validated against the input on words up to `bound`.
PipelineReport decide(const Automaton& a, int bound = 6);

}  // namespace maxplus

#endif  // MAXPLUS_SEQUENTIALITY_HPP
