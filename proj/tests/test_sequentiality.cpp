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

#include <doctest.h>

#include <set>

#include "maxplus/errors.hpp"
#include "maxplus/fixtures.hpp"
#include "maxplus/sequentiality.hpp"

using namespace maxplus;

namespace {

// s -a|0-> p, s -a|1-> q, a|1 loops on both, p ends in a b-loop, q in a
// c-loop: nondeterministic at s but twin, hence determinizable.
Automaton two_branch() {
  Automaton a({"a", "b", "c"});
  for (const char* n : {"s", "p", "q"}) a.add_state(n);
  a.set_initial(0, Weight::one());
  a.set_final(1, Weight::one());
  a.set_final(2, Weight::one());
  a.add_transition("s", "a", Weight(0), "p");
  a.add_transition("s", "a", Weight(1), "q");
  a.add_transition("p", "a", Weight(1), "p");
  a.add_transition("q", "a", Weight(1), "q");
  a.add_transition("p", "b", Weight(0), "p");
  a.add_transition("q", "c", Weight(0), "q");
  return a;
}

std::set<Weight> cycle_weights(const TwinReport& r) { return {r.x2, r.y2}; }

}  // namespace

TEST_CASE("twin failure on the max-count fixture") {
  Automaton a = trim(fixture("fig3_maxcount"));
  TwinReport r = twin_property(a);
  REQUIRE_FALSE(r.twins);
  CHECK(std::set<std::string>{r.p_name, r.q_name} == std::set<std::string>{"A", "B"});
  CHECK(r.u1.empty());
  CHECK(format_word(a, r.u2) == "a");
  CHECK(cycle_weights(r) == std::set<Weight>{Weight(0), Weight(1)});
}

TEST_CASE("sequential automata are twin") {
  Automaton a({"a", "b"});
  a.add_state("s");
  a.add_state("t");
  a.set_initial(0, Weight::one());
  a.set_final(1, Weight::one());
  a.add_transition(0, 0, Weight(2), 1);
  a.add_transition(1, 1, Weight(-1), 1);
  CHECK(twin_property(a).twins);
  CHECK(twin_property(two_branch()).twins);
}

TEST_CASE("twin failure on the even-blocks fixture") {
  Automaton a = trim(fixture("fig5_evenblocks"));
  TwinReport r = twin_property(a);
  REQUIRE_FALSE(r.twins);
  CHECK(format_word(a, r.u2) == "aa");
  CHECK(cycle_weights(r) == std::set<Weight>{Weight(0), Weight(2)});
}

TEST_CASE("twin failure on fig4b and the NA/nFUS2 automaton") {
  for (const char* name : {"fig4b", "fig_na_nfus2"}) {
    TwinReport r = twin_property(trim(fixture(name)));
    CAPTURE(name);
    REQUIRE_FALSE(r.twins);
    CHECK(format_word(fixture(name), r.u2) == "b");
    CHECK(cycle_weights(r) == std::set<Weight>{Weight(0), Weight(-1)});
  }
}

TEST_CASE("twin verdict is invariant under uniform weight shifts") {
  for (const std::string& name : fixture_names()) {
    Automaton a = trim(fixture(name));
    bool base = twin_property(a).twins;
    CAPTURE(name);
    CHECK(twin_property(shift_weights(a, Weight(3))).twins == base);
    CHECK(twin_property(shift_weights(a, Weight::ratio(-1, 2))).twins == base);
  }
}

TEST_CASE("weighted determinization of a sequential input") {
  Automaton a({"a"});
  a.add_state("s");
  a.set_initial(0, Weight(2));
  a.set_final(0, Weight(1));
  a.add_transition(0, 0, Weight(3), 0);
  Automaton d = determinize_weighted(a);
  CHECK(is_sequential(d));
  CHECK(equivalent_up_to(a, d, 6).equivalent);
}

TEST_CASE("weighted determinization of the two-branch automaton") {
  Automaton a = two_branch();
  CHECK_FALSE(is_sequential(a));
  Automaton d = determinize_weighted(a);
  CHECK(is_sequential(d));
  CHECK(equivalent_up_to(a, d, 6).equivalent);
}

TEST_CASE("determinization diverges without the twin property") {
  Automaton a = trim(fixture("fig3_maxcount"));
  CHECK_THROWS_AS(determinize_weighted(a, 64), CapExceededError);
}

TEST_CASE("decide on the max-count fixture") {
  PipelineReport r = decide(fixture("fig3_maxcount"), 6);
  CHECK_FALSE(r.infinitely_ambiguous);
  CHECK(r.leaf_count == 2);
  CHECK(r.dominance == false);
  CHECK(r.unambiguous == false);
  CHECK(r.sequential == false);
  CHECK_FALSE(r.unambiguous_automaton.has_value());
}

TEST_CASE("decide on the parity fixture") {
  PipelineReport r = decide(fixture("fig2_parity"), 6);
  CHECK(r.unambiguous == true);
  CHECK(r.sequential == false);
  REQUIRE(r.twin.has_value());
  CHECK_FALSE(r.twin->twins);
  REQUIRE(r.unambiguous_automaton.has_value());
  CHECK(degree_up_to(*r.unambiguous_automaton, 6) <= 1);
}

TEST_CASE("decide on fig4b") {
  PipelineReport r = decide(fixture("fig4b"), 6);
  CHECK(r.leaf_count == 1);
  CHECK(r.dominance == true);
  CHECK(r.unambiguous == true);
  CHECK(r.sequential == false);
  REQUIRE(r.twin.has_value());
  CHECK(cycle_weights(*r.twin) == std::set<Weight>{Weight(0), Weight(-1)});
}

TEST_CASE("decide on the two-branch automaton builds a sequential artifact") {
  Automaton a = two_branch();
  PipelineReport r = decide(a, 6);
  CHECK(r.unambiguous == true);
  CHECK(r.sequential == true);
  REQUIRE(r.sequential_automaton.has_value());
  CHECK(is_sequential(*r.sequential_automaton));
  CHECK(equivalent_up_to(*r.sequential_automaton, a, 6).equivalent);
}

TEST_CASE("decide refuses to classify infinitely ambiguous series") {
  PipelineReport r = decide(fixture("fig8_infamb"), 5);
  CHECK(r.infinitely_ambiguous);
  CHECK_FALSE(r.unambiguous.has_value());
  CHECK_FALSE(r.sequential.has_value());
  REQUIRE(r.ambiguity_witness.has_value());
}

TEST_CASE("decide verdicts respect the hierarchy on every fixture") {
  for (const std::string& name : fixture_names()) {
    CAPTURE(name);
    PipelineReport r = decide(fixture(name), 5);
    if (r.infinitely_ambiguous) {
      CHECK_FALSE(r.unambiguous.has_value());
      CHECK_FALSE(r.sequential.has_value());
      continue;
    }
    REQUIRE(r.unambiguous.has_value());
    REQUIRE(r.sequential.has_value());
    if (*r.sequential) CHECK(*r.unambiguous);
    if (r.sequential_automaton) {
      CHECK(is_sequential(*r.sequential_automaton));
      CHECK(equivalent_up_to(*r.sequential_automaton, fixture(name), 5).equivalent);
    }
  }
}

TEST_CASE("lipschitz ratios keep growing after a twin failure") {
  // Contrapositive check on the unambiguous, twin-failing fixtures: bounded
  // ratios would force the twin property.
  for (const char* name : {"fig2_parity", "fig4b", "fig_na_nfus2", "fig5_evenblocks"}) {
    CAPTURE(name);
    Automaton a = fixture(name);
    Rational r4 = lipschitz_scan(a, 4);
    Rational r6 = lipschitz_scan(a, 6);
    Rational r8 = lipschitz_scan(a, 8);
    CHECK(r4 < r6);
    CHECK(r6 < r8);
  }
}
