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

#include <random>

#include "maxplus/errors.hpp"
#include "maxplus/weight.hpp"

using namespace maxplus;

namespace {

Weight random_weight(std::mt19937& rng) {
  std::uniform_int_distribution<int> kind(0, 4);
  if (kind(rng) == 0) return Weight::bottom();
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 6);
  return Weight(Rational(num(rng), den(rng)));
}

}  // namespace

TEST_CASE("w_plus is max with bottom neutral") {
  CHECK(w_plus(Weight(3), Weight(5)) == Weight(5));
  CHECK(w_plus(Weight::bottom(), Weight(7)) == Weight(7));
  CHECK(w_plus(Weight(7), Weight::bottom()) == Weight(7));
  CHECK(w_plus(Weight::ratio(1, 2), Weight::ratio(1, 3)) == Weight::ratio(1, 2));
}

TEST_CASE("w_times is plus with bottom absorbing") {
  CHECK(w_times(Weight(3), Weight(5)) == Weight(8));
  CHECK(w_times(Weight::bottom(), Weight(7)).is_bottom());
  CHECK(w_times(Weight(0), Weight::ratio(5, 3)) == Weight::ratio(5, 3));
}

TEST_CASE("semiring laws on random weights") {
  std::mt19937 rng(20240704);
  for (int i = 0; i < 1000; ++i) {
    Weight a = random_weight(rng), b = random_weight(rng), c = random_weight(rng);
    CHECK(w_plus(a, b) == w_plus(b, a));
    CHECK(w_plus(w_plus(a, b), c) == w_plus(a, w_plus(b, c)));
    CHECK(w_plus(a, a) == a);
    CHECK(w_times(a, b) == w_times(b, a));
    CHECK(w_times(w_times(a, b), c) == w_times(a, w_times(b, c)));
    CHECK(w_times(a, w_plus(b, c)) == w_plus(w_times(a, b), w_times(a, c)));
    CHECK(w_plus(Weight::bottom(), a) == a);
    CHECK(w_times(Weight::one(), a) == a);
  }
}

TEST_CASE("weight parsing") {
  CHECK(parse_weight("-inf").is_bottom());
  CHECK(parse_weight("3") == Weight(3));
  CHECK(parse_weight("-4") == Weight(-4));
  CHECK(parse_weight("2.5") == Weight::ratio(5, 2));
  CHECK(parse_weight("-0.125") == Weight::ratio(-1, 8));
  CHECK(parse_weight("7/2") == Weight::ratio(7, 2));
  CHECK(parse_weight("-7/2") == Weight::ratio(-7, 2));
  CHECK(parse_weight("6/4") == Weight::ratio(3, 2));
  CHECK(parse_weight(" 12 ") == Weight(12));
  CHECK_THROWS_AS(parse_weight(""), ParseError);
  CHECK_THROWS_AS(parse_weight("abc"), ParseError);
  CHECK_THROWS_AS(parse_weight("1/0"), ParseError);
  CHECK_THROWS_AS(parse_weight("1.2.3"), ParseError);
  CHECK_THROWS_AS(parse_weight("1/2/3"), ParseError);
}

TEST_CASE("weight formatting round-trips") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Weight w = random_weight(rng);
    CHECK(parse_weight(to_string(w)) == w);
  }
  CHECK(to_string(Weight::bottom()) == "-inf");
  CHECK(to_string(Weight(5)) == "5");
  CHECK(to_string(Weight::ratio(6, 4)) == "3/2");
}

TEST_CASE("vmin and vnorm") {
  TupleWeight x({Weight(2), Weight(5)});
  CHECK(vmin(x) == Weight(2));
  CHECK(vnorm(x) == TupleWeight({Weight(0), Weight(3)}));

  TupleWeight y({Weight::bottom(), Weight(4)});
  CHECK(vmin(y) == Weight(4));
  CHECK(vnorm(y) == TupleWeight({Weight::bottom(), Weight(0)}));

  TupleWeight z({Weight(0), Weight(0), Weight(0)});
  CHECK(vmin(z) == Weight(0));
  CHECK(vnorm(z) == z);

  CHECK_THROWS_AS(vmin(TupleWeight::bottoms(2)), PreconditionError);
}

TEST_CASE("vnorm is idempotent and zeroes vmin") {
  std::mt19937 rng(99);
  for (int i = 0; i < 300; ++i) {
    std::vector<Weight> coords(3);
    bool any = false;
    for (Weight& w : coords) {
      w = random_weight(rng);
      any = any || w.is_finite();
    }
    if (!any) continue;
    TupleWeight x(coords);
    CHECK(vnorm(vnorm(x)) == vnorm(x));
    CHECK(vmin(vnorm(x)) == Weight(0));
  }
}
