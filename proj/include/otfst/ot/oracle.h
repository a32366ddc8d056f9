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
// Tableau evaluation by exhaustive enumeration: every candidate is
// scanned for violations and the winners are the lexicographic minima
// under the ranking. Shares nothing with the cascade beyond GEN.

#ifndef OTFST_OT_ORACLE_H_
#define OTFST_OT_ORACLE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "otfst/ot/grammar.h"

namespace otfst::ot {

inline constexpr std::size_t kDefaultOracleCap = 1000000;

struct TableauRow {
  std::string candidate;
  std::vector<int> violations;  // one per ranked constraint
  bool winner = false;
  // Column where the row loses to the winners; unset for winners.
  std::optional<std::size_t> fatal;
};

struct Tableau {
  std::string input;
  std::vector<std::string> constraints;
  // Winners first, then by violation vector, then by candidate.
  std::vector<TableauRow> rows;

  std::vector<std::string> Winners() const;  // sorted
};

// Throws Error if the candidate count exceeds `cap` or a constraint has
// no violation counter.
Tableau OracleEvaluate(const Grammar& g, std::string_view input,
                       std::size_t cap = kDefaultOracleCap);

std::vector<Tableau> OracleBatch(const Grammar& g,
                                 const std::vector<std::string>& inputs,
                                 std::size_t cap = kDefaultOracleCap);
std::vector<Tableau> OracleBatchSerial(const Grammar& g,
                                       const std::vector<std::string>& inputs,
                                       std::size_t cap = kDefaultOracleCap);

// Aligned text table. Winners are marked "->", violations are '*' per
// count and '!' follows the fatal mark.
std::string FormatTableau(const Tableau& t);

}  // namespace otfst::ot

#endif  // OTFST_OT_ORACLE_H_
