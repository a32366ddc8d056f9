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

#include "otfst/ot/gen.h"

#include <memory>
#include <set>

#include "otfst/regex/calculus.h"

namespace otfst::ot {

namespace {

constexpr std::string_view kBrackets[] = {kOnsetOpen, kNucleusOpen, kCodaOpen,
                                          kUnparsedOpen, kClose};

Network AnyOf(const SymbolTablePtr& symbols,
              const std::vector<std::string>& names) {
  Network n = EmptyLanguage(symbols);
  for (const auto& s : names) n = Union(n, Atom(symbols, s));
  return Minimize(n);
}

Network Bracketed(const SymbolTablePtr& symbols, std::string_view open,
                  const Network& body) {
  return Minimize(
      Concat(Concat(Atom(symbols, open), body), Atom(symbols, kClose)));
}

}  // namespace

Inventory DefaultInventory() {
  Inventory inv;
  for (char c = 'a'; c <= 'z'; ++c) {
    const std::string s(1, c);
    if (std::string_view("aeiou").find(c) != std::string_view::npos) {
      inv.vowels.push_back(s);
    } else {
      inv.consonants.push_back(s);
    }
  }
  return inv;
}

SymbolTablePtr MakeSymbols(const Inventory& inv) {
  if (inv.consonants.empty() || inv.vowels.empty()) {
    throw Error("consonant and vowel classes must be non-empty");
  }
  std::set<std::string> seen;
  auto table = std::make_shared<SymbolTable>();
  for (const auto* cls : {&inv.consonants, &inv.vowels}) {
    for (const auto& s : *cls) {
      if (!seen.insert(s).second) {
        throw Error("segment '" + s + "' appears in both classes or twice");
      }
      table->AddSymbol(s);
    }
  }
  for (auto b : kBrackets) {
    if (seen.count(std::string(b))) {
      throw Error("segment '" + std::string(b) + "' collides with a bracket");
    }
    table->AddSymbol(b);
  }
  return table;
}

GenParts BuildGenParts(const SymbolTablePtr& symbols, const Inventory& inv) {
  std::set<std::string> cs(inv.consonants.begin(), inv.consonants.end());
  for (const auto& v : inv.vowels) {
    if (cs.count(v)) throw Error("segment '" + v + "' is both C and V");
  }
  if (cs.empty() || inv.vowels.empty()) {
    throw Error("consonant and vowel classes must be non-empty");
  }
  const Network c = AnyOf(symbols, inv.consonants);
  const Network v = AnyOf(symbols, inv.vowels);
  const Network close = Atom(symbols, kClose);
  auto opens = [&](std::initializer_list<std::string_view> names) {
    Network n = EmptyLanguage(symbols);
    for (auto b : names) n = Union(n, Atom(symbols, b));
    return Minimize(n);
  };

  Network input = Minimize(Star(Union(c, v)));
  Network over_parse = regex::OptionalInsert(Minimize(
      Concat(opens({kOnsetOpen, kNucleusOpen, kCodaOpen}), close)));
  Network parse_segments = Minimize(Compose(
      regex::MarkupReplace(c, opens({kOnsetOpen, kCodaOpen, kUnparsedOpen}),
                           close),
      regex::MarkupReplace(v, opens({kNucleusOpen, kUnparsedOpen}), close)));

  const Network onset = Bracketed(symbols, kOnsetOpen, regex::Optional(c));
  const Network nucleus = Bracketed(symbols, kNucleusOpen, regex::Optional(v));
  const Network coda = Bracketed(symbols, kCodaOpen, regex::Optional(c));
  const Network unparsed =
      Bracketed(symbols, kUnparsedOpen, Minimize(Union(c, v)));
  const Network syllable =
      Concat(Concat(regex::Optional(onset), nucleus), regex::Optional(coda));
  Network syllable_structure =
      Minimize(Star(regex::Ignore(Minimize(syllable), unparsed)));

  Network gen = Compose(input, over_parse);
  gen = Minimize(Compose(gen, parse_segments));
  gen = Minimize(Compose(gen, syllable_structure));
  return GenParts{std::move(input), std::move(over_parse),
                  std::move(parse_segments), std::move(syllable_structure),
                  std::move(gen)};
}

Network BuildGen(const SymbolTablePtr& symbols, const Inventory& inv) {
  return BuildGenParts(symbols, inv).gen;
}

Network BuildGen(const Inventory& inv) {
  return BuildGen(MakeSymbols(inv), inv);
}

}  // namespace otfst::ot
