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

#ifndef MAXPLUS_WEIGHT_HPP
#define MAXPLUS_WEIGHT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace maxplus {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// An element of the max-plus semiring: either bottom (-inf, the semiring
/// zero) or a finite exact rational. Bottom is neutral for w_plus (max) and
/// absorbing for w_times (plus); the semiring unit is the rational 0.
class Weight {
 public:
  Weight() : finite_(false) {}
  Weight(long long v) : finite_(true), value_(v) {}  // NOLINT: implicit by design
  explicit Weight(Rational v) : finite_(true), value_(std::move(v)) {}

  static Weight bottom() { return Weight(); }
  static Weight one() { return Weight(0); }
  static Weight ratio(long long num, long long den) {
    return Weight(Rational(num, den));
  }

  bool is_bottom() const { return !finite_; }
  bool is_finite() const { return finite_; }

  // Only valid on finite weights.
  const Rational& value() const { return value_; }

  friend bool operator==(const Weight& a, const Weight& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }

  // Total order with bottom as least element.
  friend bool operator<(const Weight& a, const Weight& b) {
    if (!a.finite_) return b.finite_;
    if (!b.finite_) return false;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const Weight& a, const Weight& b) { return !(b < a); }
  friend bool operator>(const Weight& a, const Weight& b) { return b < a; }
  friend bool operator>=(const Weight& a, const Weight& b) { return !(a < b); }

 private:
  bool finite_;
  Rational value_;
};

// Semiring addition: max, with bottom neutral.
Weight w_plus(const Weight& a, const Weight& b);

// Semiring multiplication: plus, with bottom absorbing.
Weight w_times(const Weight& a, const Weight& b);

// Conventional difference, used for residuals and potentials; both arguments
// must be finite.
Weight w_minus(const Weight& a, const Weight& b);

// Parses "-inf", integers, exact decimals ("2.5") and fractions ("p/q").
// Throws ParseError on anything else.
Weight parse_weight(std::string_view text);

// Canonical form: "-inf", an integer, or "p/q" in lowest terms.
std::string to_string(const Weight& w);

/// An element of the product semiring: one max-plus weight per member of a
/// fixed family. The length is fixed at construction.
class TupleWeight {
 public:
  TupleWeight() = default;
  explicit TupleWeight(std::vector<Weight> coords) : coords_(std::move(coords)) {}
  static TupleWeight bottoms(std::size_t n) {
    return TupleWeight(std::vector<Weight>(n));
  }

  std::size_t size() const { return coords_.size(); }
  const Weight& operator[](std::size_t i) const { return coords_[i]; }
  Weight& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Weight>& coords() const { return coords_; }

  bool all_finite() const;
  bool all_bottom() const;

  friend bool operator==(const TupleWeight& a, const TupleWeight& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator!=(const TupleWeight& a, const TupleWeight& b) {
    return !(a == b);
  }
  // Lexicographic; used as a map key, not as a semiring order.
  friend bool operator<(const TupleWeight& a, const TupleWeight& b);

 private:
  std::vector<Weight> coords_;
};

// Coordinate-wise semiring multiplication (i.e. +, bottoms absorbing).
TupleWeight tw_times(const TupleWeight& a, const TupleWeight& b);

// Minimum over the finite coordinates. Throws PreconditionError if every
// coordinate is bottom.
Weight vmin(const TupleWeight& x);

// Subtracts vmin(x) from every finite coordinate; bottoms stay bottom. The
// result has at least one zero coordinate.
TupleWeight vnorm(const TupleWeight& x);

std::string to_string(const TupleWeight& x);

}  // namespace maxplus

#endif  // MAXPLUS_WEIGHT_HPP
