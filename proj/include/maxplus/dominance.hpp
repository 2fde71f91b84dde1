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

#ifndef MAXPLUS_DOMINANCE_HPP
#define MAXPLUS_DOMINANCE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "maxplus/automaton.hpp"

namespace maxplus {

/// Tuple-state automaton over the product semiring built from a same-support
/// family of trim unambiguous automata. A transition exists only when every
/// coordinate is finite; the automaton is trim with respect to
/// all-coordinates-initial / all-coordinates-final states.
struct ProductAutomaton {
  std::vector<std::string> alphabet;
  std::size_t family_size = 0;
  std::vector<std::vector<int>> states;  // member state tuples
  std::vector<std::string> state_names;
  std::vector<TupleWeight> alpha, beta;  // initial iff alpha all finite, etc.
  struct Arc {
    int from;
    int label;
    TupleWeight weight;  // all coordinates finite
    int to;
  };
  std::vector<Arc> arcs;

  bool is_initial(int s) const { return alpha[s].all_finite(); }
  bool is_final(int s) const { return beta[s].all_finite(); }
};

// Guard length used to sanity-check the family preconditions (unambiguous
// members, common support).
ProductAutomaton product(std::span<const Automaton> family, int guard_bound = 6);

// Coordinate set where the tuple attains its maximum, as a bitmask over the
// family index set. All coordinates must be finite.
std::uint64_t victorious(const TupleWeight& x);

std::uint64_t full_coordinate_mask(std::size_t family_size);
std::vector<std::size_t> mask_to_indices(std::uint64_t mask, std::size_t family_size);

struct Circuit {
  std::vector<int> arcs;  // arc indices; head of arcs[0] starts the circuit
  TupleWeight total;
  std::uint64_t victorious = 0;
};

struct SccInfo {
  std::vector<int> states;
  std::vector<Circuit> circuits;
  std::uint64_t victorious = 0;  // full mask when the SCC has no circuit
};

/// Condensation of the product automaton with the simple circuits and
/// victorious coordinates of every strongly connected component.
struct SccReport {
  std::size_t family_size = 0;
  std::vector<int> scc_of;           // state -> SCC id
  std::vector<SccInfo> sccs;         // in topological order
  std::vector<std::pair<int, int>> condensation_edges;
};

// Enumerates the simple circuits of every SCC (Johnson's algorithm on the
// SCC subgraph); throws CapExceededError past `circuit_cap` circuits.
SccReport analyze_sccs(const ProductAutomaton& p, std::size_t circuit_cap = 1000000);

struct DominanceResult {
  bool satisfied = true;
  // On failure: a successful path whose crossed SCCs have an empty
  // intersection of victorious sets.
  std::vector<int> witness_states;
  Word witness_word;
};

// The dominance property: every successful path crosses SCCs whose
// victorious sets have a non-empty intersection. Decided by propagating the
// achievable intersection masks from the initial states.
DominanceResult satisfies_dominance(const ProductAutomaton& p, const SccReport& report);

}  // namespace maxplus

#endif  // MAXPLUS_DOMINANCE_HPP
