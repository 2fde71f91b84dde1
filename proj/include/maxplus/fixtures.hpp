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

#ifndef MAXPLUS_FIXTURES_HPP
#define MAXPLUS_FIXTURES_HPP

#include <string>
#include <vector>

#include "maxplus/automaton.hpp"

namespace maxplus {

// The worked examples shipped with the toolkit, each named for the behavior
// it demonstrates. Throws PreconditionError on an unknown name.
std::vector<std::string> fixture_names();
Automaton fixture(const std::string& name);

}  // namespace maxplus

#endif  // MAXPLUS_FIXTURES_HPP
