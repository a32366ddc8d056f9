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
// Derived operators of the calculus, built from the fst primitives. Every
// function returns a minimized network.

#ifndef OTFST_REGEX_CALCULUS_H_
#define OTFST_REGEX_CALCULUS_H_

#include "otfst/operations.h"

namespace otfst::regex {

// (A): A | 0.
Network Optional(const Network& a);

// $A: ?* A ?*.
Network Contains(const Network& a);

// A^>n: n+1 or more concatenated copies of A.
Network MoreThan(const Network& a, int n);

// body => left _ right: every occurrence of `body` is immediately preceded
// by a string of `left` and followed by a string of `right`, compiled as
//   ~[ [~[?* left] body ?*] | [?* body ~[right ?*]] ].
// Pass UniversalLanguage for an unconstrained side.
Network Restriction(const Network& body, const Network& left,
                    const Network& right);

// target -> prefixes ... suffix for a target made of single symbols: every
// target symbol s is obligatorily rewritten as p s x for each p in
// `prefixes` and x in `suffix`; all other symbols map to themselves.
// Throws Error if `target` holds a string that is not a single symbol, or
// if `prefixes` or `suffix` is infinite.
Network MarkupReplace(const Network& target, const Network& prefixes,
                      const Network& suffix);

// [. .] (->) inserts: optionally inserts one string of `inserts` at each
// position between symbols and at both edges; identity otherwise. Throws
// Error if `inserts` contains the empty string or is infinite.
Network OptionalInsert(const Network& inserts);

// A / B: strings of A with strings of B freely interleaved.
Network Ignore(const Network& a, const Network& b);

// Q .P. R = Q | [~[Q.u] .o. R].
Network PriorityUnion(const Network& q, const Network& r);

// R .O. C = [R .o. C] .P. R.
Network LenientCompose(const Network& r, const Network& c);

}  // namespace otfst::regex

#endif  // OTFST_REGEX_CALCULUS_H_
