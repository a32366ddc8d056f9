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
//
// Versioned text format:
//
//   FSTv1 <states> <arcs>
//   arc <src> <upper> <lower> <dst>
//   ...
//   final <state>
//   ...
//
// Symbols are written by name, epsilon as "<eps>". The start state is
// always state 0; writers renumber breadth-first from the start.

#ifndef OTFST_SERIALIZE_H_
#define OTFST_SERIALIZE_H_

#include <iosfwd>
#include <string>

#include "otfst/network.h"

namespace otfst {

inline constexpr const char* kEpsilonToken = "<eps>";

void WriteText(const Network& net, std::ostream& out);
std::string ToText(const Network& net);

// Symbol names must already be registered in `symbols`.
Network ReadText(std::istream& in, SymbolTablePtr symbols);
Network FromText(const std::string& text, SymbolTablePtr symbols);

}  // namespace otfst

#endif  // OTFST_SERIALIZE_H_
