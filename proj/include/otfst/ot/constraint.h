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

#ifndef OTFST_OT_CONSTRAINT_H_
#define OTFST_OT_CONSTRAINT_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "otfst/operations.h"
#include "otfst/regex/compiler.h"

namespace otfst::ot {

enum class ConstraintKind {
  kForbiddenPattern,  // ~$P
  kRestriction,       // body => left _ right
  kOther,             // any other language; no family, no oracle counter
};

const char* KindName(ConstraintKind kind);

// A ranked constraint. The network is the budget-0 filter; a
// forbidden-pattern constraint with budget N stands for the family
//   ~$P, ~[[$P]^>1], ..., ~[[$P]^>N]
// applied strictest first.
class ConstraintSpec {
 public:
  static ConstraintSpec ForbiddenPattern(std::string name,
                                         const Network& pattern,
                                         int budget = 0);
  static ConstraintSpec Restriction(std::string name, const Network& body,
                                    const Network& left, const Network& right);
  static ConstraintSpec Other(std::string name, Network language);

  // Classifies a resolved constraint expression.
  static ConstraintSpec FromAst(std::string name, const regex::RegexAst& expr,
                                const regex::Environment& env, int budget = 0);

  const std::string& name() const { return name_; }
  ConstraintKind kind() const { return kind_; }
  int budget() const { return budget_; }
  const Network& network() const { return network_; }

  // Throws Error if `budget` > 0 and the constraint is not a forbidden
  // pattern.
  ConstraintSpec WithBudget(int budget) const;

  // budget() + 1 networks, strictest first. A budget-0 constraint gives
  // just network().
  const std::vector<Network>& Members() const { return members_; }

  // Whether CountViolations is available: the pattern, or the restriction
  // body and bounded contexts, are finite and literal.
  bool HasCounter() const { return counter_ok_; }

  // Violations in `candidate` found by a literal left-to-right scan.
  // Forbidden pattern: non-overlapping occurrences of P. Restriction:
  // occurrences of the body not preceded by a left-context string or not
  // followed by a right-context string. Throws Error if !HasCounter().
  int CountViolations(std::span<const Label> candidate) const;

 private:
  ConstraintSpec(std::string name, ConstraintKind kind, Network network);

  std::string name_;
  ConstraintKind kind_ = ConstraintKind::kOther;
  int budget_ = 0;
  Network network_;
  std::optional<Network> pattern_;
  std::vector<Network> members_;

  bool counter_ok_ = false;
  std::vector<std::vector<Label>> pattern_strings_;  // or restriction body
  // Empty optional means the context is unrestricted.
  std::optional<std::vector<std::vector<Label>>> left_;
  std::optional<std::vector<std::vector<Label>>> right_;
};

// The family of a forbidden-pattern constraint, strictest first. Throws
// Error for other kinds or for budget < 1.
std::vector<Network> ExpandFamily(const ConstraintSpec& c);

}  // namespace otfst::ot

#endif  // OTFST_OT_CONSTRAINT_H_
