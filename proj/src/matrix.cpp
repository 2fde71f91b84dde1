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

#include "maxplus/matrix.hpp"

#include "maxplus/errors.hpp"

namespace maxplus {

WeightMatrix WeightMatrix::identity(std::size_t n) {
  WeightMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Weight::one();
  return m;
}

WeightMatrix mat_mul(const WeightMatrix& a, const WeightMatrix& b) {
  if (a.cols() != b.rows())
    throw PreconditionError("mat_mul dimension mismatch");
  WeightMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Weight& aik = a.at(i, k);
      if (aik.is_bottom()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Weight& bkj = b.at(k, j);
        if (bkj.is_bottom()) continue;
        out.at(i, j) = w_plus(out.at(i, j), w_times(aik, bkj));
      }
    }
  }
  return out;
}

}  // namespace maxplus
