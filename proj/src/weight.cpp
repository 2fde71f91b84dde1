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

#include "maxplus/weight.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "maxplus/errors.hpp"

namespace maxplus {

Weight w_plus(const Weight& a, const Weight& b) {
  if (a.is_bottom()) return b;
  if (b.is_bottom()) return a;
  return a.value() < b.value() ? b : a;
}

Weight w_times(const Weight& a, const Weight& b) {
  if (a.is_bottom() || b.is_bottom()) return Weight::bottom();
  return Weight(a.value() + b.value());
}

Weight w_minus(const Weight& a, const Weight& b) {
  if (a.is_bottom() || b.is_bottom())
    throw PreconditionError("w_minus requires finite weights");
  return Weight(a.value() - b.value());
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

// [+-]?digits or [+-]?digits.digits, converted exactly.
bool parse_decimal(std::string_view s, Rational* out) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto dot = s.find('.');
  std::string_view int_part = dot == std::string_view::npos ? s : s.substr(0, dot);
  std::string_view frac_part =
      dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (!all_digits(int_part)) return false;
  if (dot != std::string_view::npos && !all_digits(frac_part)) return false;

  BigInt num{std::string(int_part)};
  BigInt den = 1;
  for (char c : frac_part) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  Rational r(num, den);
  if (negative) r = -r;
  *out = r;
  return true;
}

}  // namespace

Weight parse_weight(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s == "-inf") return Weight::bottom();
  if (s.empty()) throw ParseError("empty weight literal");

  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    std::string_view num_digits = num;
    if (!num_digits.empty() && (num_digits.front() == '+' || num_digits.front() == '-'))
      num_digits.remove_prefix(1);
    if (!all_digits(num_digits) || !all_digits(den))
      throw ParseError("bad rational literal: '" + std::string(text) + "'");
    BigInt d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    BigInt n{std::string(num)};
    return Weight(Rational(n, d));
  }

  Rational r;
  if (!parse_decimal(s, &r))
    throw ParseError("bad weight literal: '" + std::string(text) + "'");
  return Weight(r);
}

std::string to_string(const Weight& w) {
  if (w.is_bottom()) return "-inf";
  std::ostringstream out;
  out << w.value();
  return out.str();
}

bool TupleWeight::all_finite() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Weight& w) { return w.is_finite(); });
}

bool TupleWeight::all_bottom() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Weight& w) { return w.is_bottom(); });
}

bool operator<(const TupleWeight& a, const TupleWeight& b) {
  return std::lexicographical_compare(a.coords().begin(), a.coords().end(),
                                      b.coords().begin(), b.coords().end());
}

TupleWeight tw_times(const TupleWeight& a, const TupleWeight& b) {
  if (a.size() != b.size())
    throw PreconditionError("tuple length mismatch");
  std::vector<Weight> coords(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) coords[i] = w_times(a[i], b[i]);
  return TupleWeight(std::move(coords));
}

Weight vmin(const TupleWeight& x) {
  Weight best;
  bool seen = false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_bottom()) continue;
    if (!seen || x[i] < best) best = x[i];
    seen = true;
  }
  if (!seen) throw PreconditionError("vmin of all-bottom tuple");
  return best;
}

TupleWeight vnorm(const TupleWeight& x) {
  Weight m = vmin(x);
  std::vector<Weight> coords(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    coords[i] = x[i].is_bottom() ? Weight::bottom() : w_minus(x[i], m);
  return TupleWeight(std::move(coords));
}

std::string to_string(const TupleWeight& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ",";
    out += to_string(x[i]);
  }
  out += ")";
  return out;
}

}  // namespace maxplus
