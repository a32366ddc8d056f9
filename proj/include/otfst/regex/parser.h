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
// Script grammar:
//
//   script     := { statement }
//   statement  := 'alphabet' { symbol } ';'
//               | 'define' NAME expr ';'
//               | 'constraint' NAME expr [ 'budget' NUMBER ] ';'
//               | 'rank' NAME { NAME } ';'
//
// Operators from loosest to tightest binding:
//
//   .o. .x. .P. .O.             left-associative
//   A -> B ... C   A => L _ R   [. .] (->) A
//   |  &  -                     left-associative
//   concatenation
//   /                           ignore
//   ~  $                        prefix
//   *  +  ^>n  .u  .l           postfix
//
// Atoms are single characters, double-quoted multi-character symbols,
// `?`, `0` (epsilon), `%c` (escaped character) and bare names of earlier
// definitions. `#` starts a comment that runs to the end of the line.

#ifndef OTFST_REGEX_PARSER_H_
#define OTFST_REGEX_PARSER_H_

#include <string>
#include <string_view>

#include "otfst/regex/ast.h"

namespace otfst::regex {

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, SourceLocation location);
  const SourceLocation& location() const { return location_; }

 private:
  SourceLocation location_;
};

Script ParseScript(std::string_view text);

// Parses a single expression (without a trailing ';').
RegexAst ParseExpression(std::string_view text);

}  // namespace otfst::regex

#endif  // OTFST_REGEX_PARSER_H_
