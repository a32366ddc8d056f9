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

#include "otfst/regex/calculus.h"

#include <set>

namespace otfst::regex {

namespace {

void RequireLanguage(const Network& a, const char* what) {
  if (!a.IsLanguage()) {
    throw Error(std::string(what) + " requires a language operand");
  }
}

void RequireFinite(const Network& a, const char* what) {
  if (!IsAcyclic(Minimize(a))) {
    throw Error(std::string(what) + " requires a finite language");
  }
}

Network Insertion(const Network& strings) {
  return CrossProduct(EpsilonLanguage(strings.symbols()), strings);
}

}  // namespace

Network Optional(const Network& a) {
  return Minimize(Union(a, EpsilonLanguage(a.symbols())));
}

Network Contains(const Network& a) {
  RequireLanguage(a, "contains ($)");
  const Network sigma = UniversalLanguage(a.symbols());
  return Minimize(Concat(Concat(sigma, a), sigma));
}

Network MoreThan(const Network& a, int n) {
  if (n < 0) throw Error("^>n requires n >= 0");
  return Minimize(AtLeast(a, n + 1));
}

Network Restriction(const Network& body, const Network& left,
                    const Network& right) {
  RequireLanguage(body, "restriction body");
  RequireLanguage(left, "restriction left context");
  RequireLanguage(right, "restriction right context");
  const Network sigma = UniversalLanguage(body.symbols());
  const Network bad_left =
      Concat(Concat(Complement(Minimize(Concat(sigma, left))), body), sigma);
  const Network bad_right =
      Concat(Concat(sigma, body), Complement(Minimize(Concat(right, sigma))));
  return Minimize(Complement(Minimize(Union(bad_left, bad_right))));
}

Network MarkupReplace(const Network& target, const Network& prefixes,
                      const Network& suffix) {
  RequireLanguage(target, "markup replace target");
  RequireLanguage(prefixes, "markup replace prefixes");
  RequireLanguage(suffix, "markup replace suffix");
  const auto& symbols = target.symbols();
  if (!IsEmpty(Subtract(target, AnySymbol(symbols)))) {
    throw Error(
        "markup replace supports only targets made of single symbols");
  }
  RequireFinite(prefixes, "markup replace prefixes");
  RequireFinite(suffix, "markup replace suffix");

  std::set<Label> targets;
  const Network t = Minimize(target);
  for (StateId s = 0; s < t.NumStates(); ++s) {
    for (const Arc& a : t.Arcs(s)) targets.insert(a.upper);
  }
  Network others = EmptyLanguage(symbols);
  for (Label l : symbols->Alphabet()) {
    if (!targets.count(l)) others = Union(others, Atom(symbols, l));
  }
  const Network wrap =
      Concat(Concat(Insertion(prefixes), t), Insertion(suffix));
  return Minimize(Star(Union(Minimize(others), wrap)));
}

Network OptionalInsert(const Network& inserts) {
  RequireLanguage(inserts, "optional insertion");
  if (Accepts(inserts, std::span<const Label>{})) {
    throw Error("optional insertion strings must be non-empty");
  }
  RequireFinite(inserts, "optional insertion");
  const Network maybe = Optional(Insertion(inserts));
  return Minimize(
      Concat(maybe, Star(Concat(AnySymbol(inserts.symbols()), maybe))));
}

Network Ignore(const Network& a, const Network& b) {
  RequireLanguage(a, "ignore (/)");
  RequireLanguage(b, "ignore (/)");
  const Network base = RemoveEpsilons(a);
  const Network extra = Minimize(b);
  Network n(a.symbols());
  for (StateId s = 0; s < base.NumStates(); ++s) n.AddState();
  for (StateId s = 0; s < base.NumStates(); ++s) {
    n.SetFinal(s, base.IsFinal(s));
    for (const Arc& arc : base.Arcs(s)) n.AddArc(s, arc);
  }
  if (base.Start() != kNoState) n.SetStart(base.Start());
  if (!IsEmpty(extra)) {
    // A private copy of `extra` hangs off every state and returns to it.
    for (StateId s = 0; s < base.NumStates(); ++s) {
      const StateId offset = n.NumStates();
      for (StateId q = 0; q < extra.NumStates(); ++q) n.AddState();
      n.AddArc(s, kEpsilon, kEpsilon, offset + extra.Start());
      for (StateId q = 0; q < extra.NumStates(); ++q) {
        for (const Arc& arc : extra.Arcs(q)) {
          n.AddArc(offset + q, arc.upper, arc.lower, offset + arc.target);
        }
        if (extra.IsFinal(q)) n.AddArc(offset + q, kEpsilon, kEpsilon, s);
      }
    }
  }
  return Minimize(n);
}

Network PriorityUnion(const Network& q, const Network& r) {
  const Network unclaimed = Complement(Minimize(Project(q, Side::kUpper)));
  return Minimize(Union(q, Compose(unclaimed, r)));
}

Network LenientCompose(const Network& r, const Network& c) {
  return PriorityUnion(Minimize(Compose(r, c)), r);
}

}  // namespace otfst::regex
