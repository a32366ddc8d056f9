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

#include "otfst/serialize.h"

#include <istream>
#include <ostream>
#include <sstream>

#include "internal.h"
#include "otfst/operations.h"

namespace otfst {

namespace {

std::string SymbolToken(const SymbolTable& symbols, Label l) {
  return l == kEpsilon ? kEpsilonToken : symbols.Name(l);
}

Label ParseSymbol(const SymbolTable& symbols, const std::string& token) {
  if (token == kEpsilonToken) return kEpsilon;
  return symbols.Id(token);
}

}  // namespace

void WriteText(const Network& net, std::ostream& out) {
  const Network c = internal::Canonicalize(Connect(net));
  const SymbolTable& symbols = *c.symbols();
  out << "FSTv1 " << c.NumStates() << ' ' << c.NumArcs() << '\n';
  for (StateId s = 0; s < c.NumStates(); ++s) {
    for (const Arc& a : c.Arcs(s)) {
      out << "arc " << s << ' ' << SymbolToken(symbols, a.upper) << ' '
          << SymbolToken(symbols, a.lower) << ' ' << a.target << '\n';
    }
  }
  for (StateId s = 0; s < c.NumStates(); ++s) {
    if (c.IsFinal(s)) out << "final " << s << '\n';
  }
}

std::string ToText(const Network& net) {
  std::ostringstream out;
  WriteText(net, out);
  return out.str();
}

Network ReadText(std::istream& in, SymbolTablePtr symbols) {
  std::string magic;
  long states = 0;
  long arcs = 0;
  if (!(in >> magic >> states >> arcs) || magic != "FSTv1" || states < 0 ||
      arcs < 0) {
    throw Error("malformed network header (expected 'FSTv1 <states> <arcs>')");
  }
  Network n(symbols);
  for (long i = 0; i < states; ++i) n.AddState();
  if (states > 0) n.SetStart(0);
  long seen_arcs = 0;
  std::string kind;
  while (in >> kind) {
    if (kind == "arc") {
      long src = 0, dst = 0;
      std::string upper, lower;
      if (!(in >> src >> upper >> lower >> dst)) {
        throw Error("malformed arc line");
      }
      if (src < 0 || src >= states || dst < 0 || dst >= states) {
        throw Error("arc state out of range");
      }
      n.AddArc(static_cast<StateId>(src), ParseSymbol(*symbols, upper),
               ParseSymbol(*symbols, lower), static_cast<StateId>(dst));
      ++seen_arcs;
    } else if (kind == "final") {
      long s = 0;
      if (!(in >> s) || s < 0 || s >= states) {
        throw Error("malformed final line");
      }
      n.SetFinal(static_cast<StateId>(s));
    } else {
      throw Error("unknown record '" + kind + "'");
    }
  }
  if (seen_arcs != arcs) {
    throw Error("arc count mismatch: header says " + std::to_string(arcs) +
                ", found " + std::to_string(seen_arcs));
  }
  if (states == 0) return EmptyLanguage(std::move(symbols));
  n.SortArcs();
  return n;
}

Network FromText(const std::string& text, SymbolTablePtr symbols) {
  std::istringstream in(text);
  return ReadText(in, std::move(symbols));
}

}  // namespace otfst
