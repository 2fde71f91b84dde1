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

#ifndef MAXPLUS_UNAMBIGUIZER_HPP
#define MAXPLUS_UNAMBIGUIZER_HPP

#include <cstddef>
#include <span>

#include "maxplus/automaton.hpp"
#include "maxplus/dominance.hpp"

namespace maxplus {

/// N is the product state count; M the spread (max minus min) of the
/// non-bottom transition and final weights across the family, initial
/// weights excluded. Residual coordinates more than N*M below the leading
/// victorious coordinate can never catch up and are cut to bottom.
struct PipelineConstants {
  std::size_t product_states = 0;  // N
  Rational weight_spread = 0;      // M
};

PipelineConstants constants_NM(std::span<const Automaton> family,
                               const ProductAutomaton& p);

struct UnambiguizerLog {
  std::size_t configurations = 0;
  Rational max_residual_spread = 0;
};

// Builds the unambiguous automaton realizing the pointwise max of the family
// series, by a breadth-first worklist over configurations (normalized
// residual vector, product state). Requires the dominance property; throws
// PreconditionError otherwise and CapExceededError past `state_cap`
// configurations.
Automaton build_unambiguous(std::span<const Automaton> family,
                            const ProductAutomaton& p, const SccReport& report,
                            std::size_t state_cap = 100000,
                            UnambiguizerLog* log = nullptr);

}  // namespace maxplus

#endif  // MAXPLUS_UNAMBIGUIZER_HPP
