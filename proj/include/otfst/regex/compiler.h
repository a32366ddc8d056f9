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

#ifndef OTFST_REGEX_COMPILER_H_
#define OTFST_REGEX_COMPILER_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "otfst/regex/ast.h"

namespace otfst::regex {

class CompileError : public Error {
 public:
  CompileError(const std::string& message, SourceLocation location);
  const SourceLocation& location() const { return location_; }

 private:
  SourceLocation location_;
};

// Named networks in definition order over one closed alphabet.
class Environment {
 public:
  explicit Environment(SymbolTablePtr symbols);

  const SymbolTablePtr& symbols() const { return symbols_; }

  // Throws Error on redefinition.
  void Define(const std::string& name, Network net);
  bool Contains(std::string_view name) const;
  // Throws Error naming `name` if it is not defined.
  const Network& Get(std::string_view name) const;
  const std::vector<std::string>& names() const { return order_; }

 private:
  SymbolTablePtr symbols_;
  std::vector<std::string> order_;
  std::map<std::string, Network, std::less<>> networks_;
};

// Compiles `ast` against `env`. Bare names resolve to definitions in
// `env`; an undefined single-character name denotes that symbol.
Network Compile(const RegexAst& ast, const Environment& env);

// Rewrites bare names that are not definitions into symbols, throwing
// CompileError for undefined multi-character names.
RegexAst Resolve(const RegexAst& ast, const Environment& env);

struct ConstraintEntry {
  std::string name;
  RegexAst expr;  // resolved
  std::optional<int> budget;
};

struct CompiledScript {
  Environment env;
  std::vector<ConstraintEntry> constraints;
  // Empty when the script has no rank statement.
  std::vector<std::string> ranking;
};

// Builds the alphabet from `alphabet` statements plus every literal in the
// script, then compiles definitions and constraints in order. Constraint
// networks are also entered into the environment under their names.
CompiledScript CompileScript(const Script& script);
CompiledScript CompileScriptText(std::string_view text);

}  // namespace otfst::regex

#endif  // OTFST_REGEX_COMPILER_H_
