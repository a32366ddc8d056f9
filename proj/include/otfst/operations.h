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
// Construction and algorithms over Network. All functions are pure: they
// never modify their arguments and always return a fresh network, so
// networks may be shared freely across threads once built.
//
// Relations are treated as acceptors over the pair alphabet wherever a
// canonical form is needed (determinization, minimization, equivalence).
// Languages are networks whose arcs are all identity pairs and are read as
// identity relations by Compose.

#ifndef OTFST_OPERATIONS_H_
#define OTFST_OPERATIONS_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "otfst/network.h"

namespace otfst {

using PathCount = boost::multiprecision::cpp_int;

enum class CombineOp { kUnion, kConcat, kIntersect, kSubtract };
enum class ClosureOp { kStar, kPlus, kAtLeast };
enum class Side { kUpper, kLower };
enum class Direction { kDown, kUp };

inline constexpr std::size_t kDefaultApplyLimit = 100000;

// Finite set of rendered strings, sorted and deduplicated.
struct PathSet {
  std::vector<std::string> outputs;
  bool truncated = false;

  bool empty() const { return outputs.empty(); }
  std::size_t size() const { return outputs.size(); }
  friend bool operator==(const PathSet&, const PathSet&) = default;
};

// Leaves.
Network EmptyLanguage(SymbolTablePtr symbols);
Network EpsilonLanguage(SymbolTablePtr symbols);
Network Atom(SymbolTablePtr symbols, Label label);
Network Atom(SymbolTablePtr symbols, std::string_view name);
// `?`: any single symbol of the closed alphabet.
Network AnySymbol(SymbolTablePtr symbols);
// `?*`.
Network UniversalLanguage(SymbolTablePtr symbols);
Network StringLanguage(SymbolTablePtr symbols, std::span<const Label> labels);
// Tokenizes `text` by longest match first.
Network StringLanguage(SymbolTablePtr symbols, std::string_view text);

// Set operations. Intersect and Subtract are defined for languages only
// and throw Error on a relation operand.
Network Combine(CombineOp op, const Network& a, const Network& b);
Network Union(const Network& a, const Network& b);
Network Concat(const Network& a, const Network& b);
Network Intersect(const Network& a, const Network& b);
Network Subtract(const Network& a, const Network& b);

// `n` is only read for kAtLeast (n-or-more repetitions).
Network Closure(ClosureOp op, const Network& a, int n = 0);
Network Star(const Network& a);
Network Plus(const Network& a);
Network AtLeast(const Network& a, int n);

// Closed-alphabet complement of a language.
Network Complement(const Network& a);

// Pairs every string of `a` with every string of `b`, aligned from the
// left and padded with epsilon on the shorter side.
Network CrossProduct(const Network& a, const Network& b);

// Relational composition with an epsilon-matching filter, so that every
// pair of aligned paths yields exactly one composed path.
Network Compose(const Network& r, const Network& s);

Network Project(const Network& r, Side side);

// Removes states that are not both accessible and coaccessible.
Network Connect(const Network& a);
// Result arcs are sorted by (upper, lower, target).
Network RemoveEpsilons(const Network& a);
Network Determinize(const Network& a);
// Minimal deterministic network over the pair alphabet, with states
// numbered canonically (breadth-first from the start in arc order).
Network Minimize(const Network& a);

bool IsEmpty(const Network& a);
bool IsAcyclic(const Network& a);
// Membership test for a language network.
bool Accepts(const Network& language, std::span<const Label> labels);
bool Accepts(const Network& language, std::string_view text);

// True iff both networks denote the same aligned-pair language.
bool Equivalent(const Network& a, const Network& b);

// Number of accepting paths of an acyclic network. Throws Error if a
// useful cycle exists.
PathCount CountPaths(const Network& a);

// Rendered strings of a language network, at most `limit` of them.
PathSet Enumerate(const Network& language,
                  std::size_t limit = kDefaultApplyLimit);

// Strings related to `input` on the opposite side: lower strings for
// kDown, upper strings for kUp.
PathSet Apply(const Network& r, std::span<const Label> input, Direction dir,
              std::size_t limit = kDefaultApplyLimit);
PathSet Apply(const Network& r, std::string_view input, Direction dir,
              std::size_t limit = kDefaultApplyLimit);

}  // namespace otfst

#endif  // OTFST_OPERATIONS_H_
