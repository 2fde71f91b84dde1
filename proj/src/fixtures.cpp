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

#include "maxplus/fixtures.hpp"

#include "maxplus/errors.hpp"

namespace maxplus {

namespace {

// Heap of three slots; pieces a over {1,2} and b over {2,3}; height observed
// on slot 2.
Automaton fig1_heap() {
  return heap_automaton({"1", "2", "3"}, {{"a", {"1", "2"}}, {"b", {"2", "3"}}},
                        {"2"});
}

// <S, a^n> = n for even n, 0 for odd n. Unambiguous, a sum of two sequential
// parts, not sequential.
Automaton fig2_parity() {
  Automaton a({"a"});
  for (const char* name : {"A", "B", "C", "D"}) a.add_state(name);
  a.set_initial(0, Weight::one());
  a.set_initial(2, Weight::one());
  a.set_final(1, Weight::one());
  a.set_final(2, Weight::one());
  a.add_transition("A", "a", Weight(0), "B");
  a.add_transition("B", "a", Weight(0), "A");
  a.add_transition("C", "a", Weight(1), "D");
  a.add_transition("D", "a", Weight(1), "C");
  return a;
}

// <S, u> = max(|u|_a, |u|_b); two-ambiguous heap automaton, the series is
// not unambiguous.
Automaton fig3_maxcount() {
  return heap_automaton({"A", "B"}, {{"a", {"A"}}, {"b", {"B"}}}, {"A", "B"});
}

// Heap over two slots, a on both, b on the second, observed on the first:
// <S, w> = height of slot A.
Automaton fig4a_heap() {
  return heap_automaton({"A", "B"}, {{"a", {"A", "B"}}, {"b", {"B"}}}, {"A"});
}

// Unambiguous, not a finite sum of sequential series. <S, u a b^k> = -k.
// This is the weight-normalized form of the fig4a language automaton (each
// output weight lowered by 1), which is where the twin failure with b-cycle
// weights 0 and -1 lives.
Automaton fig4b() {
  Automaton a({"a", "b"});
  a.add_state("A");
  a.add_state("B");
  a.set_initial(1, Weight::one());
  a.set_final(0, Weight::one());
  a.add_transition("B", "a", Weight(0), "B");
  a.add_transition("B", "b", Weight(0), "B");
  a.add_transition("B", "a", Weight(0), "A");
  a.add_transition("A", "b", Weight(-1), "A");
  return a;
}

// Same series as fig4b up to state naming.
Automaton fig_na_nfus2() {
  Automaton a({"a", "b"});
  a.add_state("A");
  a.add_state("B");
  a.set_initial(0, Weight::one());
  a.set_final(1, Weight::one());
  a.add_transition("A", "a", Weight(0), "A");
  a.add_transition("A", "b", Weight(0), "A");
  a.add_transition("A", "a", Weight(0), "B");
  a.add_transition("B", "b", Weight(-1), "B");
  return a;
}

// <S, a^{m_1} b^{n_1} ... a^{m_p} b^{n_p}> = sum of the even m_i.
// Unambiguous, not a finite sum of sequential series.
Automaton fig5_evenblocks() {
  Automaton a({"a", "b"});
  for (const char* name : {"A", "B", "C", "D"}) a.add_state(name);
  a.set_initial(0, Weight::one());
  a.set_initial(2, Weight::one());
  a.set_final(1, Weight::one());
  a.set_final(2, Weight::one());
  a.add_transition("A", "a", Weight(0), "B");
  a.add_transition("B", "a", Weight(0), "A");
  a.add_transition("C", "a", Weight(1), "D");
  a.add_transition("D", "a", Weight(1), "C");
  a.add_transition("B", "b", Weight(0), "A");
  a.add_transition("B", "b", Weight(0), "C");
  a.add_transition("C", "b", Weight(0), "A");
  a.add_transition("C", "b", Weight(0), "C");
  return a;
}

// Heap over slots {A,B,C}: a on C, b on {A,B}, c on B; observed on A and C.
// Two-ambiguous as a series, infinitely ambiguous as an automaton.
Automaton fig6a_heap() {
  return heap_automaton(
      {"A", "B", "C"}, {{"a", {"C"}}, {"b", {"A", "B"}}, {"c", {"B"}}},
      {"A", "C"});
}

// Two-ambiguous automaton for the fig6a series.
Automaton fig6b() {
  Automaton a({"a", "b", "c"});
  for (const char* name : {"A", "B", "C"}) a.add_state(name);
  for (int s = 0; s < 3; ++s) a.set_initial(s, Weight::one());
  a.set_final(0, Weight::one());
  a.set_final(2, Weight::one());
  a.add_transition("A", "a", Weight(0), "A");
  a.add_transition("A", "c", Weight(0), "A");
  a.add_transition("B", "a", Weight(0), "B");
  a.add_transition("B", "b", Weight(1), "B");
  a.add_transition("B", "c", Weight(1), "B");
  a.add_transition("B", "b", Weight(1), "A");
  a.add_transition("C", "a", Weight(1), "C");
  a.add_transition("C", "b", Weight(0), "C");
  a.add_transition("C", "c", Weight(0), "C");
  return a;
}

// Union of fig5_evenblocks with its a/b mirror: two-ambiguous, neither an
// unambiguous series nor a finite sum of sequential ones.
Automaton fig7_double() {
  Automaton a({"a", "b"});
  for (const char* name : {"A", "B", "C", "D", "A2", "B2", "C2", "D2"})
    a.add_state(name);
  a.set_initial(0, Weight::one());
  a.set_initial(2, Weight::one());
  a.set_final(1, Weight::one());
  a.set_final(2, Weight::one());
  a.add_transition("A", "a", Weight(0), "B");
  a.add_transition("B", "a", Weight(0), "A");
  a.add_transition("C", "a", Weight(1), "D");
  a.add_transition("D", "a", Weight(1), "C");
  a.add_transition("B", "b", Weight(0), "A");
  a.add_transition("B", "b", Weight(0), "C");
  a.add_transition("C", "b", Weight(0), "A");
  a.add_transition("C", "b", Weight(0), "C");
  a.set_initial(4, Weight::one());
  a.set_initial(6, Weight::one());
  a.set_final(5, Weight::one());
  a.set_final(6, Weight::one());
  a.add_transition("A2", "b", Weight(0), "B2");
  a.add_transition("B2", "b", Weight(0), "A2");
  a.add_transition("C2", "b", Weight(1), "D2");
  a.add_transition("D2", "b", Weight(1), "C2");
  a.add_transition("B2", "a", Weight(0), "A2");
  a.add_transition("B2", "a", Weight(0), "C2");
  a.add_transition("C2", "a", Weight(0), "A2");
  a.add_transition("C2", "a", Weight(0), "C2");
  return a;
}

// Infinitely ambiguous; the series is rational but not finitely ambiguous.
Automaton fig8_infamb() {
  Automaton a({"a", "b", "c"});
  a.add_state("A");
  a.add_state("B");
  a.set_initial(0, Weight::one());
  a.set_initial(1, Weight::one());
  a.set_final(0, Weight::one());
  a.set_final(1, Weight::one());
  a.add_transition("A", "a", Weight(1), "A");
  a.add_transition("A", "b", Weight(0), "A");
  a.add_transition("A", "c", Weight(1), "A");
  a.add_transition("B", "a", Weight(0), "B");
  a.add_transition("B", "b", Weight(1), "B");
  a.add_transition("B", "c", Weight(1), "B");
  a.add_transition("A", "c", Weight(1), "B");
  a.add_transition("B", "c", Weight(1), "A");
  return a;
}

// Three-state zero-weighted automaton whose covering carries two competing
// sets and splits into four unambiguous automata.
Automaton schutz_example() {
  Automaton a({"a", "b"});
  for (const char* name : {"p", "q", "r"}) a.add_state(name);
  a.set_initial(0, Weight::one());
  a.set_initial(1, Weight::one());
  a.set_final(0, Weight::one());
  a.set_final(2, Weight::one());
  a.add_transition("p", "a", Weight(0), "q");
  a.add_transition("p", "b", Weight(0), "r");
  a.add_transition("q", "a", Weight(0), "r");
  a.add_transition("q", "b", Weight(0), "p");
  a.add_transition("r", "b", Weight(0), "r");
  return a;
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"fig1_heap",       "fig2_parity", "fig3_maxcount", "fig4a_heap",
          "fig4b",           "fig_na_nfus2", "fig5_evenblocks", "fig6a_heap",
          "fig6b",           "fig7_double", "fig8_infamb",   "schutz_example"};
}

Automaton fixture(const std::string& name) {
  if (name == "fig1_heap") return fig1_heap();
  if (name == "fig2_parity") return fig2_parity();
  if (name == "fig3_maxcount") return fig3_maxcount();
  if (name == "fig4a_heap") return fig4a_heap();
  if (name == "fig4b") return fig4b();
  if (name == "fig_na_nfus2") return fig_na_nfus2();
  if (name == "fig5_evenblocks") return fig5_evenblocks();
  if (name == "fig6a_heap") return fig6a_heap();
  if (name == "fig6b") return fig6b();
  if (name == "fig7_double") return fig7_double();
  if (name == "fig8_infamb") return fig8_infamb();
  if (name == "schutz_example") return schutz_example();
  throw PreconditionError("unknown fixture '" + name + "'");
}

}  // namespace maxplus
