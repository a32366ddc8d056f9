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

#ifndef OTFST_OT_GRAMMAR_H_
#define OTFST_OT_GRAMMAR_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "otfst/ot/constraint.h"
#include "otfst/ot/gen.h"
#include "otfst/regex/compiler.h"

namespace otfst::ot {

enum class Mode { kLenient, kMerciless };

// GEN plus constraints, highest ranked first. Immutable once built.
class Grammar {
 public:
  Grammar(Network gen, std::vector<ConstraintSpec> ranking);

  const Network& gen() const { return gen_; }
  const SymbolTablePtr& symbols() const { return gen_.symbols(); }
  const std::vector<ConstraintSpec>& ranking() const { return ranking_; }

  // Index of the constraint called `name`, or nullopt.
  std::optional<std::size_t> Find(std::string_view name) const;

  // Copy with the named constraint's budget replaced.
  Grammar WithBudget(std::string_view name, int budget) const;
  // Copy with every forbidden-pattern constraint at `budget`.
  Grammar WithUniformBudget(int budget) const;
  Grammar WithRanking(std::vector<ConstraintSpec> ranking) const;

 private:
  Network gen_;
  std::vector<ConstraintSpec> ranking_;
};

// Embedded text of the default syllabification script.
std::string_view DefaultScript();

// GEN over the default inventory, ranked HaveOns NoCoda FillNuc Parse
// FillOns, with Parse gradient at `parse_budget`.
Grammar DefaultGrammar(int parse_budget = 5);

// Grammar from a compiled script: GEN is the definition named `gen_name`,
// constraints follow the rank statement (declaration order if there is
// none). When `budget_override` is set it replaces the budget of every
// constraint that declares one.
Grammar GrammarFromScript(const regex::CompiledScript& script,
                          std::optional<int> budget_override = std::nullopt,
                          std::string_view gen_name = "GEN");

// input ∘ GEN, minimized. Throws Error for untokenizable input.
Network Candidates(const Grammar& g, std::string_view input);

// Folds lenient (or plain) composition of every family member over `r`.
Network Cascade(const Grammar& g, Network r, Mode mode);

// Surface forms for `input`.
PathSet Evaluate(const Grammar& g, std::string_view input,
                 Mode mode = Mode::kLenient,
                 std::size_t limit = kDefaultApplyLimit);

struct Stage {
  std::string label;  // "GEN", then constraint names, "Parse1" for members
  PathSet outputs;
};

// Outputs after GEN and after each family member.
std::vector<Stage> Trace(const Grammar& g, std::string_view input,
                         Mode mode = Mode::kLenient,
                         std::size_t limit = kDefaultApplyLimit);

// The whole cascade folded over GEN into one transducer.
Network Merge(const Grammar& g, Mode mode = Mode::kLenient);

// True iff Evaluate gives the same outputs under every order of the named
// constraint's family members. Throws Error if it is not a gradient
// forbidden-pattern constraint with budget >= 1.
bool OrderInsensitivityCheck(const Grammar& g, std::string_view input,
                             std::string_view constraint = "Parse");

// One Evaluate per input. The parallel version uses OpenMP across inputs.
std::vector<PathSet> EvaluateBatch(const Grammar& g,
                                   const std::vector<std::string>& inputs,
                                   Mode mode = Mode::kLenient);
std::vector<PathSet> EvaluateBatchSerial(const Grammar& g,
                                         const std::vector<std::string>& inputs,
                                         Mode mode = Mode::kLenient);

}  // namespace otfst::ot

#endif  // OTFST_OT_GRAMMAR_H_
