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

#ifndef OTFST_SRC_FST_INTERNAL_H_
#define OTFST_SRC_FST_INTERNAL_H_

#include "otfst/network.h"

namespace otfst::internal {

// Appends all states and arcs of `src` to `dst`; returns the id offset.
// Start state and flags of `dst` are left alone.
StateId CopyInto(Network& dst, const Network& src);

void RequireSameSymbols(const Network& a, const Network& b, const char* what);
void RequireLanguage(const Network& a, const char* what);

// Renumbers states breadth-first from the start, visiting arcs in sorted
// order, and drops unreachable states.
Network Canonicalize(const Network& a);

}  // namespace otfst::internal

#endif  // OTFST_SRC_FST_INTERNAL_H_
