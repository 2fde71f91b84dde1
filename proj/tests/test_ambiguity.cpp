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

#include "maxplus/ambiguity.hpp"
#include "maxplus/fixtures.hpp"

using namespace maxplus;

TEST_CASE("fig8 is infinitely ambiguous with a replayable witness") {
  Automaton a = fixture("fig8_infamb");
  auto result = is_infinitely_ambiguous(a);
  REQUIRE(result.infinite);
  REQUIRE(result.witness.has_value());
  const AmbiguityWitness& w = *result.witness;
  CHECK(w.p_name == "A");
  CHECK(w.q_name == "B");
  CHECK(format_word(a, w.word) == "c");
  CHECK(verify_ambiguity_witness(trim(a), w));
}

TEST_CASE("fixtures without the criterion pattern are not flagged") {
  CHECK_FALSE(is_infinitely_ambiguous(fixture("fig3_maxcount")).infinite);
  CHECK_FALSE(is_infinitely_ambiguous(fixture("fig2_parity")).infinite);
  CHECK_FALSE(is_infinitely_ambiguous(fixture("fig5_evenblocks")).infinite);
  CHECK_FALSE(is_infinitely_ambiguous(fixture("fig7_double")).infinite);

  // A sequential automaton never is.
  Automaton seq({"a"});
  seq.add_state("s");
  seq.set_initial(0, Weight::one());
  seq.set_final(0, Weight::one());
  seq.add_transition(0, 0, Weight(1), 0);
  CHECK_FALSE(is_infinitely_ambiguous(seq).infinite);
}

TEST_CASE("fig6a is infinitely ambiguous as an automaton") {
  // Its series is two-ambiguous, but the heap automaton itself carries the
  // p -> p, p -> q, q -> q pattern on b.
  auto result = is_infinitely_ambiguous(fixture("fig6a_heap"));
  CHECK(result.infinite);
  CHECK(verify_ambiguity_witness(trim(fixture("fig6a_heap")), *result.witness));
}

TEST_CASE("witness replay rejects corrupted witnesses") {
  Automaton a = fixture("fig8_infamb");
  auto result = is_infinitely_ambiguous(a);
  REQUIRE(result.infinite);
  AmbiguityWitness w = *result.witness;
  w.word.push_back(0);  // desync the word from the paths
  CHECK_FALSE(verify_ambiguity_witness(trim(a), w));
}

TEST_CASE("degree stabilizes on finitely ambiguous fixtures") {
  // Sanity heuristic: past 2|Q|^2 the bounded degree stops growing.
  for (const std::string& name : fixture_names()) {
    Automaton a = trim(fixture(name));
    if (is_infinitely_ambiguous(a).infinite) continue;
    int stable = 2 * a.num_states() * a.num_states();
    CAPTURE(name);
    CHECK(degree_up_to(a, stable) == degree_up_to(a, stable + 2));
  }
}
