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

#ifndef OTFST_REGEX_AST_H_
#define OTFST_REGEX_AST_H_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "otfst/operations.h"

namespace otfst::regex {

enum class NodeKind {
  kSymbol,          // text = symbol name
  kAny,             // ?
  kEpsilon,         // 0 or []
  kRef,             // text = definition name
  kUnion,           // A | B
  kIntersect,       // A & B
  kSubtract,        // A - B
  kConcat,          // A B
  kOption,          // (A)
  kStar,            // A*
  kPlus,            // A+
  kMoreThan,        // A^>n, count = n
  kComplement,      // ~A
  kContains,        // $A
  kIgnore,          // A / B
  kRestriction,     // body => left _ right
  kMarkupReplace,   // target -> prefixes ... suffix
  kOptionalInsert,  // [. .] (->) inserts
  kCompose,         // A .o. B
  kCross,           // A .x. B
  kPriorityUnion,   // A .P. B
  kLenientCompose,  // A .O. B
  kProject,         // A.u / A.l
};

const char* KindName(NodeKind kind);

struct SourceLocation {
  int line = 1;
  int column = 1;
  friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

struct RegexAst {
  NodeKind kind = NodeKind::kEpsilon;
  std::string text;
  int count = 0;
  Side side = Side::kUpper;
  std::vector<RegexAst> children;
  SourceLocation location;

  static RegexAst Leaf(NodeKind kind, std::string text = {});
  static RegexAst Node(NodeKind kind, std::vector<RegexAst> children);

  // Structural equality ignoring source locations.
  bool SameShape(const RegexAst& other) const;
  // Compact prefix rendering for diagnostics, e.g. (complement (contains "X[")).
  std::string DebugString() const;
};

struct Definition {
  std::string name;
  RegexAst expr;
  SourceLocation location;
};

struct ConstraintDecl {
  std::string name;
  RegexAst expr;
  std::optional<int> budget;
  SourceLocation location;
};

struct RankDecl {
  std::vector<std::string> names;
  SourceLocation location;
};

using Statement = std::variant<Definition, ConstraintDecl, RankDecl>;

struct Script {
  // Symbols named by `alphabet` statements, in order of appearance.
  std::vector<std::string> alphabet;
  std::vector<Statement> statements;
};

}  // namespace otfst::regex

#endif  // OTFST_REGEX_AST_H_
