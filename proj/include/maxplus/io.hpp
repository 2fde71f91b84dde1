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

#ifndef MAXPLUS_IO_HPP
#define MAXPLUS_IO_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "maxplus/automaton.hpp"
#include "maxplus/dominance.hpp"
#include "maxplus/sequentiality.hpp"

namespace maxplus {

using Json = nlohmann::ordered_json;

// Document schema:
//   { "alphabet": [...], "states": [...],
//     "initial": {state: weight}, "final": {state: weight},
//     "transitions": [{"from","label","weight","to"}, ...] }
// Weights are strings ("3", "-2.5", "p/q", "-inf") or JSON integers; "-inf"
// entries in initial/final equal omission, "-inf" transitions are rejected.
Automaton automaton_from_json(const Json& doc);
Json automaton_to_json(const Automaton& a);

Automaton load_automaton(const std::string& path);
void save_automaton(const Automaton& a, const std::string& path);

// Deterministic GraphViz rendering; initial and final arcs hang off
// invisible anchor nodes.
std::string export_dot(const Automaton& a);

// Condensation DAG of a product automaton as GraphViz text.
std::string condensation_dot(const ProductAutomaton& p, const SccReport& report);

Json scc_report_to_json(const ProductAutomaton& p, const SccReport& report);
Json dominance_to_json(const ProductAutomaton& p, const DominanceResult& result);
Json twin_report_to_json(const Automaton& a, const TwinReport& report);
Json ambiguity_witness_to_json(const Automaton& trimmed, const AmbiguityWitness& w);
Json pipeline_report_to_json(const Automaton& input, const PipelineReport& report);

}  // namespace maxplus

#endif  // MAXPLUS_IO_HPP
