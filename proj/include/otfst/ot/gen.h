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
// Candidate generator for syllabification.

#ifndef OTFST_OT_GEN_H_
#define OTFST_OT_GEN_H_

#include <string>
#include <string_view>
#include <vector>

#include "otfst/operations.h"

namespace otfst::ot {

inline constexpr std::string_view kOnsetOpen = "O[";
inline constexpr std::string_view kNucleusOpen = "N[";
inline constexpr std::string_view kCodaOpen = "D[";
inline constexpr std::string_view kUnparsedOpen = "X[";
inline constexpr std::string_view kClose = "]";

struct Inventory {
  std::vector<std::string> consonants;
  std::vector<std::string> vowels;
};

// Vowels a e i o u; every other lowercase letter is a consonant.
Inventory DefaultInventory();

// Segments of `inv` followed by the five bracket symbols. Throws Error if
// the classes overlap, are empty, or collide with a bracket.
SymbolTablePtr MakeSymbols(const Inventory& inv);

struct GenParts {
  Network input;               // [C | V]*
  Network over_parse;          // [. .] (->) ["O[" | "N[" | "D["] "]"
  Network parse_segments;      // C -> ... "]" .o. V -> ... "]"
  Network syllable_structure;  // [[(Onset) Nucleus (Coda)] / Unparsed]*
  Network gen;                 // the four composed, minimized
};

// Builds over `symbols`, which must contain the inventory and brackets.
GenParts BuildGenParts(const SymbolTablePtr& symbols, const Inventory& inv);
Network BuildGen(const SymbolTablePtr& symbols, const Inventory& inv);
// Uses MakeSymbols(inv).
Network BuildGen(const Inventory& inv);

}  // namespace otfst::ot

#endif  // OTFST_OT_GEN_H_
