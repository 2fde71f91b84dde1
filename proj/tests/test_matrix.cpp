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
#include "maxplus/fixtures.hpp"
#include "maxplus/matrix.hpp"

using namespace maxplus;

namespace {

WeightMatrix random_matrix(std::mt19937& rng, std::size_t n) {
  WeightMatrix m(n, n);
  std::uniform_int_distribution<int> val(-3, 2);  // -3 plays bottom
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int v = val(rng);
      if (v != -3) m.at(i, j) = Weight(v);
    }
  return m;
}

}  // namespace

TEST_CASE("identity is neutral") {
  std::mt19937 rng(11);
  WeightMatrix m = random_matrix(rng, 4);
  CHECK(mat_mul(WeightMatrix::identity(4), m) == m);
  CHECK(mat_mul(m, WeightMatrix::identity(4)) == m);
}

TEST_CASE("1x1 product") {
  WeightMatrix a(1, 1), b(1, 1);
  a.at(0, 0) = Weight(3);
  b.at(0, 0) = Weight(4);
  CHECK(mat_mul(a, b).at(0, 0) == Weight(7));
}

TEST_CASE("heap matrices of the three-slot model") {
  Automaton heap = fixture("fig1_heap");
  WeightMatrix ma = heap.label_matrix(heap.label_index("a"));
  WeightMatrix mb = heap.label_matrix(heap.label_index("b"));

  // Row of slot 3 in M(a): only the idle diagonal entry.
  CHECK(ma.at(2, 0).is_bottom());
  CHECK(ma.at(2, 1).is_bottom());
  CHECK(ma.at(2, 2) == Weight(0));

  // Entry (1,2) of M(a)M(b), expanded by hand as the oracle:
  // max(M(a)_{1,1}+M(b)_{1,2}, M(a)_{1,2}+M(b)_{2,2}, M(a)_{1,3}+M(b)_{3,2}).
  Weight expect;
  for (std::size_t k = 0; k < 3; ++k)
    expect = w_plus(expect, w_times(ma.at(0, k), mb.at(k, 1)));
  CHECK(expect == Weight(2));
  CHECK(mat_mul(ma, mb).at(0, 1) == expect);
}

TEST_CASE("dimension mismatch is rejected") {
  CHECK_THROWS_AS(mat_mul(WeightMatrix(2, 3), WeightMatrix(2, 3)), PreconditionError);
}

TEST_CASE("matrix product is associative") {
  std::mt19937 rng(20240704);
  for (int i = 0; i < 200; ++i) {
    WeightMatrix a = random_matrix(rng, 3), b = random_matrix(rng, 3),
                 c = random_matrix(rng, 3);
    CHECK(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));
  }
}
