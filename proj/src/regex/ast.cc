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

#include "otfst/regex/ast.h"

namespace otfst::regex {

const char* KindName(NodeKind kind) {
  switch (kind) {
    case NodeKind::kSymbol: return "symbol";
    case NodeKind::kAny: return "any";
    case NodeKind::kEpsilon: return "epsilon";
    case NodeKind::kRef: return "ref";
    case NodeKind::kUnion: return "union";
    case NodeKind::kIntersect: return "intersect";
    case NodeKind::kSubtract: return "subtract";
    case NodeKind::kConcat: return "concat";
    case NodeKind::kOption: return "option";
    case NodeKind::kStar: return "star";
    case NodeKind::kPlus: return "plus";
    case NodeKind::kMoreThan: return "more_than";
    case NodeKind::kComplement: return "complement";
    case NodeKind::kContains: return "contains";
    case NodeKind::kIgnore: return "ignore";
    case NodeKind::kRestriction: return "restriction";
    case NodeKind::kMarkupReplace: return "markup_replace";
    case NodeKind::kOptionalInsert: return "optional_insert";
    case NodeKind::kCompose: return "compose";
    case NodeKind::kCross: return "cross";
    case NodeKind::kPriorityUnion: return "priority_union";
    case NodeKind::kLenientCompose: return "lenient_compose";
    case NodeKind::kProject: return "project";
  }
  return "?";
}

RegexAst RegexAst::Leaf(NodeKind kind, std::string text) {
  RegexAst n;
  n.kind = kind;
  n.text = std::move(text);
  return n;
}

RegexAst RegexAst::Node(NodeKind kind, std::vector<RegexAst> children) {
  RegexAst n;
  n.kind = kind;
  n.children = std::move(children);
  return n;
}

bool RegexAst::SameShape(const RegexAst& other) const {
  if (kind != other.kind || text != other.text || count != other.count ||
      children.size() != other.children.size()) {
    return false;
  }
  if (kind == NodeKind::kProject && side != other.side) return false;
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (!children[i].SameShape(other.children[i])) return false;
  }
  return true;
}

std::string RegexAst::DebugString() const {
  switch (kind) {
    case NodeKind::kSymbol:
      return '"' + text + '"';
    case NodeKind::kRef:
      return text;
    case NodeKind::kAny:
      return "?";
    case NodeKind::kEpsilon:
      return "0";
    default:
      break;
  }
  std::string out = "(";
  out += KindName(kind);
  if (kind == NodeKind::kMoreThan) out += " " + std::to_string(count);
  if (kind == NodeKind::kProject) out += side == Side::kUpper ? " u" : " l";
  for (const auto& c : children) out += " " + c.DebugString();
  return out + ")";
}

}  // namespace otfst::regex
