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

#include <algorithm>
#include <set>

#include "maxplus/covering.hpp"
#include "maxplus/errors.hpp"
#include "maxplus/fixtures.hpp"
#include "maxplus/sweep.hpp"
#include "oracle.hpp"

using namespace maxplus;

namespace {

std::set<std::string> state_set(const Automaton& a) {
  return {a.state_names().begin(), a.state_names().end()};
}

}  // namespace

TEST_CASE("boolean determinization of the worked three-state example") {
  SubsetAutomaton d = determinize_boolean(fixture("schutz_example"));
  CHECK(d.automaton.num_states() == 6);
  CHECK(state_set(d.automaton) ==
        std::set<std::string>{"{p,q}", "{q,r}", "{p,r}", "{r}", "{q}", "{p}"});
  CHECK(d.automaton.initial_states().size() == 1);
  CHECK(d.automaton.state_name(d.automaton.initial_states()[0]) == "{p,q}");
  // Final iff the subset meets {p, r}.
  std::set<std::string> finals;
  for (int s : d.automaton.final_states()) finals.insert(d.automaton.state_name(s));
  CHECK(finals == std::set<std::string>{"{p,q}", "{q,r}", "{p,r}", "{r}", "{p}"});
}

TEST_CASE("determinization of a deterministic input is isomorphic") {
  Automaton a({"a", "b"});
  a.add_state("x");
  a.add_state("y");
  a.set_initial(0, Weight::one());
  a.set_final(1, Weight::one());
  a.add_transition(0, 0, Weight(1), 1);
  a.add_transition(1, 1, Weight(2), 1);
  SubsetAutomaton d = determinize_boolean(a);
  CHECK(d.automaton.num_states() == a.num_states());
  CHECK(d.automaton.transitions().size() == a.transitions().size());
}

TEST_CASE("determinization of the max-count fixture collapses to one subset") {
  SubsetAutomaton d = determinize_boolean(fixture("fig3_maxcount"));
  CHECK(d.automaton.num_states() == 1);
  CHECK(d.automaton.transitions().size() == 2);  // self-loops on both letters
}

TEST_CASE("covering of the worked example has the nine pair states") {
  Covering cov = schutzenberger_covering(fixture("schutz_example"));
  CHECK(cov.automaton.num_states() == 9);
  CHECK(state_set(cov.automaton) ==
        std::set<std::string>{"(p,{p,q})", "(q,{p,q})", "(q,{q,r})", "(r,{q,r})",
                              "(p,{p,r})", "(r,{p,r})", "(r,{r})", "(q,{q})",
                              "(p,{p})"});
  // Every state (p,P) satisfies p in P.
  for (int s = 0; s < cov.automaton.num_states(); ++s) {
    const auto& members = cov.subset.members[cov.subset_state[s]];
    CHECK(std::count(members.begin(), members.end(), cov.source_state[s]) == 1);
  }
  // Columns partition the states.
  std::size_t total = 0;
  for (const auto& column : cov.columns) total += column.size();
  CHECK(total == 9);
}

TEST_CASE("covering of a deterministic input is isomorphic to it") {
  Automaton a({"a"});
  a.add_state("x");
  a.add_state("y");
  a.set_initial(0, Weight::one());
  a.set_final(1, Weight::one());
  a.add_transition(0, 0, Weight(1), 1);
  Covering cov = schutzenberger_covering(a);
  CHECK(cov.automaton.num_states() == 2);
  CHECK(cov.automaton.transitions().size() == 1);
}

TEST_CASE("covering of the max-count fixture is one column of two states") {
  Covering cov = schutzenberger_covering(fixture("fig3_maxcount"));
  CHECK(cov.automaton.num_states() == 2);
  int nonempty = 0;
  for (const auto& column : cov.columns)
    if (!column.empty()) {
      ++nonempty;
      CHECK(column.size() == 2);
    }
  CHECK(nonempty == 1);
}

TEST_CASE("covering keeps path counts word by word") {
  for (const std::string& name : fixture_names()) {
    Automaton a = trim(fixture(name));
    if (a.num_states() == 0) continue;
    Covering cov = schutzenberger_covering(a);
    CAPTURE(name);
    for (const Word& w : oracle::all_words(a, 5))
      CHECK(count_successful_paths(cov.automaton, w) ==
            count_successful_paths(a, w));
  }
}

TEST_CASE("competing sets of the worked example") {
  Covering cov = schutzenberger_covering(fixture("schutz_example"));
  auto sets = competing_sets(cov);
  REQUIRE(sets.size() == 2);

  const CompetingSet* trans_set = nullptr;
  const CompetingSet* final_set = nullptr;
  for (const CompetingSet& s : sets)
    (s.final_kind ? final_set : trans_set) = &s;
  REQUIRE(trans_set != nullptr);
  REQUIRE(final_set != nullptr);

  // Two b-transitions into (r,{r}) from the column {p,r}.
  REQUIRE(trans_set->transitions.size() == 2);
  for (int idx : trans_set->transitions) {
    const Transition& t = cov.automaton.transitions()[idx];
    CHECK(cov.automaton.label_name(t.label) == "b");
    CHECK(cov.automaton.state_name(t.to) == "(r,{r})");
  }

  // The two final states of the column {p,r}.
  std::set<std::string> finals;
  for (int s : final_set->states) finals.insert(cov.automaton.state_name(s));
  CHECK(finals == std::set<std::string>{"(p,{p,r})", "(r,{p,r})"});
}

TEST_CASE("competing sets are empty on deterministic input") {
  Automaton a({"a"});
  a.add_state("x");
  a.set_initial(0, Weight::one());
  a.set_final(0, Weight::one());
  a.add_transition(0, 0, Weight(1), 0);
  CHECK(competing_sets(schutzenberger_covering(a)).empty());
  CHECK(check_decomposable(schutzenberger_covering(a)));
}

TEST_CASE("competing sets of the max-count covering") {
  auto sets = competing_sets(schutzenberger_covering(fixture("fig3_maxcount")));
  REQUIRE(sets.size() == 1);
  CHECK(sets[0].final_kind);
  CHECK(sets[0].states.size() == 2);
}

TEST_CASE("check_decomposable") {
  CHECK(check_decomposable(schutzenberger_covering(fixture("schutz_example"))));
  CHECK_FALSE(check_decomposable(schutzenberger_covering(trim(fixture("fig8_infamb")))));
}

TEST_CASE("decomposition of the worked example yields four leaves") {
  Automaton a = fixture("schutz_example");
  std::vector<Automaton> leaves = decompose_unambiguous(a);
  CHECK(leaves.size() == 4);
  for (const Automaton& leaf : leaves) {
    CHECK(degree_up_to(leaf, 6) <= 1);
    CHECK_FALSE(support_counterexample(leaf, a, 6).has_value());
  }
}

TEST_CASE("decomposition of the max-count fixture yields the two counters") {
  Automaton a = fixture("fig3_maxcount");
  std::vector<Automaton> leaves = decompose_unambiguous(a);
  REQUIRE(leaves.size() == 2);

  Automaton count_a({"a", "b"}), count_b({"a", "b"});
  count_a.add_state("A");
  count_a.set_initial(0, Weight::one());
  count_a.set_final(0, Weight::one());
  count_a.add_transition(0, 0, Weight(1), 0);
  count_a.add_transition(0, 1, Weight(0), 0);
  count_b.add_state("B");
  count_b.set_initial(0, Weight::one());
  count_b.set_final(0, Weight::one());
  count_b.add_transition(0, 0, Weight(0), 0);
  count_b.add_transition(0, 1, Weight(1), 0);

  bool first_is_a = equivalent_up_to(leaves[0], count_a, 6).equivalent;
  const Automaton& la = first_is_a ? leaves[0] : leaves[1];
  const Automaton& lb = first_is_a ? leaves[1] : leaves[0];
  CHECK(equivalent_up_to(la, count_a, 6).equivalent);
  CHECK(equivalent_up_to(lb, count_b, 6).equivalent);
}

TEST_CASE("decomposition of an unambiguous input is a singleton") {
  Automaton a = fixture("fig5_evenblocks");
  std::vector<Automaton> leaves = decompose_unambiguous(a);
  REQUIRE(leaves.size() == 1);
  CHECK(equivalent_up_to(leaves[0], a, 6).equivalent);
}

TEST_CASE("decomposition rejects infinitely ambiguous input") {
  CHECK_THROWS_WITH_AS(decompose_unambiguous(fixture("fig8_infamb")),
                       doctest::Contains("infinitely ambiguous"),
                       PreconditionError);
}

TEST_CASE("leaves are unambiguous and their max is the source") {
  for (const std::string& name :
       {"fig2_parity", "fig3_maxcount", "fig4b", "fig5_evenblocks", "fig7_double",
        "schutz_example"}) {
    Automaton a = trim(fixture(name));
    std::vector<Automaton> leaves = decompose_unambiguous(a);
    CAPTURE(name);
    for (const Automaton& leaf : leaves) {
      CHECK(degree_up_to(leaf, 6) <= 1);
      CHECK_FALSE(support_counterexample(leaf, a, 6).has_value());
    }
    for (const Word& w : oracle::all_words(a, 6)) {
      Weight best;
      for (const Automaton& leaf : leaves) best = w_plus(best, evaluate(leaf, w));
      CHECK(best == evaluate(a, w));
    }
  }
}
