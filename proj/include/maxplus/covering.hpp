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

#ifndef MAXPLUS_COVERING_HPP
#define MAXPLUS_COVERING_HPP

#include <string>
#include <vector>

#include "maxplus/automaton.hpp"

namespace maxplus {

/// Accessible subset construction over the support of an automaton. The
/// stored automaton is deterministic with weight 0 everywhere; states are
/// named "{p,q,...}" and `members` lists the source states of each subset.
struct SubsetAutomaton {
  Automaton automaton;
  std::vector<std::vector<int>> members;
};

SubsetAutomaton determinize_boolean(const Automaton& a);

/// Trim product of a trim automaton with its Boolean determinization.
/// State i is the pair (source_state[i], subset_state[i]); a column is the
/// set of states sharing the subset component. `transition_source` maps each
/// covering transition to the source transition it projects onto.
struct Covering {
  Automaton automaton;  // weight 0 everywhere; names "(p,{p,q})"
  Automaton source;     // the (trim) automaton that was covered
  SubsetAutomaton subset;
  std::vector<int> source_state;
  std::vector<int> subset_state;
  std::vector<std::vector<int>> columns;  // by subset-state id
  std::vector<int> transition_source;
};

Covering schutzenberger_covering(const Automaton& a);

/// A maximal set of competing transitions (same label, same destination,
/// origins in one column) or competing final states (same column). Members
/// are indices into the covering automaton.
struct CompetingSet {
  bool final_kind = false;
  std::vector<int> transitions;  // when !final_kind
  std::vector<int> states;       // when final_kind
};

std::vector<CompetingSet> competing_sets(const Covering& c);

// True iff no competing transition lies on a circuit of the covering; false
// implies the source automaton is infinitely ambiguous.
bool check_decomposable(const Covering& c);

// Splits the covering along competing sets until none remain, decorates each
// leaf with the source multiplicities and trims it. Every leaf is
// unambiguous, has the support of the source series, and the pointwise max
// of the leaves equals the source series. Throws PreconditionError when the
// input is infinitely ambiguous.
std::vector<Automaton> decompose_unambiguous(const Automaton& a);

}  // namespace maxplus

#endif  // MAXPLUS_COVERING_HPP
