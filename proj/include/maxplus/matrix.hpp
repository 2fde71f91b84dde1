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

#ifndef MAXPLUS_MATRIX_HPP
#define MAXPLUS_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "maxplus/weight.hpp"

namespace maxplus {

/// Dense matrix over the max-plus semiring. Entries default to bottom.
class WeightMatrix {
 public:
  WeightMatrix() : rows_(0), cols_(0) {}
  WeightMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static WeightMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Weight& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Weight& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  friend bool operator==(const WeightMatrix& a, const WeightMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Weight> data_;
};

// (A (x) B)_ij = max_k (A_ik + B_kj). Throws PreconditionError on a
// dimension mismatch.
WeightMatrix mat_mul(const WeightMatrix& a, const WeightMatrix& b);

}  // namespace maxplus

#endif  // MAXPLUS_MATRIX_HPP
