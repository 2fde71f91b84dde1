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

#ifndef MAXPLUS_ERRORS_HPP
#define MAXPLUS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace maxplus {

// Malformed input document or weight literal. CLI exit code 2.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A documented precondition of an operation does not hold. CLI exit code 2.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// A configurable resource cap was exceeded. CLI exit code 3.
class CapExceededError : public std::runtime_error {
 public:
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace maxplus

#endif  // MAXPLUS_ERRORS_HPP
