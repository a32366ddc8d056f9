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
// Thompson-style leaf and combinator constructions. Results carry epsilon
// arcs; callers that want compact machines run Minimize afterwards.

#include <map>
#include <queue>
#include <tuple>

#include "internal.h"
#include "otfst/operations.h"

namespace otfst {

namespace internal {

StateId CopyInto(Network& dst, const Network& src) {
  const StateId offset = dst.NumStates();
  for (StateId s = 0; s < src.NumStates(); ++s) dst.AddState();
  for (StateId s = 0; s < src.NumStates(); ++s) {
    dst.SetFinal(offset + s, src.IsFinal(s));
    for (const Arc& a : src.Arcs(s)) {
      dst.AddArc(offset + s, a.upper, a.lower, offset + a.target);
    }
  }
  return offset;
}

void RequireSameSymbols(const Network& a, const Network& b,
                        const char* what) {
  if (a.symbols() != b.symbols()) {
    throw Error(std::string(what) + ": operands use different symbol tables");
  }
}

void RequireLanguage(const Network& a, const char* what) {
  if (!a.IsLanguage()) {
    throw Error(std::string(what) + " is undefined for a relation operand");
  }
}

}  // namespace internal

using internal::CopyInto;
using internal::RequireLanguage;
using internal::RequireSameSymbols;

Network EmptyLanguage(SymbolTablePtr symbols) {
  Network n(std::move(symbols));
  n.SetStart(n.AddState());
  n.SetProperties(kDeterministic | kMinimal, true);
  return n;
}

Network EpsilonLanguage(SymbolTablePtr symbols) {
  Network n(std::move(symbols));
  const StateId s = n.AddState();
  n.SetStart(s);
  n.SetFinal(s);
  n.SetProperties(kDeterministic | kMinimal, true);
  return n;
}

Network Atom(SymbolTablePtr symbols, Label label) {
  if (label == kEpsilon) return EpsilonLanguage(std::move(symbols));
  if (label < 0 || static_cast<std::size_t>(label) >= symbols->size()) {
    throw Error("atom label outside symbol table");
  }
  Network n(std::move(symbols));
  const StateId s = n.AddState();
  const StateId t = n.AddState();
  n.SetStart(s);
  n.SetFinal(t);
  n.AddArc(s, label, label, t);
  n.SetProperties(kDeterministic | kMinimal, true);
  return n;
}

Network Atom(SymbolTablePtr symbols, std::string_view name) {
  const Label id = symbols->Id(name);
  return Atom(std::move(symbols), id);
}

Network AnySymbol(SymbolTablePtr symbols) {
  const auto alphabet = symbols->Alphabet();
  if (alphabet.empty()) throw Error("'?' requires a non-empty alphabet");
  Network n(std::move(symbols));
  const StateId s = n.AddState();
  const StateId t = n.AddState();
  n.SetStart(s);
  n.SetFinal(t);
  for (Label l : alphabet) n.AddArc(s, l, l, t);
  n.SetProperties(kDeterministic | kMinimal, true);
  return n;
}

Network UniversalLanguage(SymbolTablePtr symbols) {
  const auto alphabet = symbols->Alphabet();
  Network n(std::move(symbols));
  const StateId s = n.AddState();
  n.SetStart(s);
  n.SetFinal(s);
  for (Label l : alphabet) n.AddArc(s, l, l, s);
  n.SetProperties(kDeterministic | kMinimal, true);
  return n;
}

Network StringLanguage(SymbolTablePtr symbols, std::span<const Label> labels) {
  Network n(std::move(symbols));
  StateId cur = n.AddState();
  n.SetStart(cur);
  for (Label l : labels) {
    if (l == kEpsilon) continue;
    const StateId next = n.AddState();
    n.AddArc(cur, l, l, next);
    cur = next;
  }
  n.SetFinal(cur);
  n.SetProperties(kDeterministic | kMinimal, true);
  return n;
}

Network StringLanguage(SymbolTablePtr symbols, std::string_view text) {
  const auto labels = symbols->Tokenize(text);
  return StringLanguage(std::move(symbols), labels);
}

Network Union(const Network& a, const Network& b) {
  RequireSameSymbols(a, b, "union");
  Network n(a.symbols());
  const StateId s = n.AddState();
  n.SetStart(s);
  const StateId oa = CopyInto(n, a);
  const StateId ob = CopyInto(n, b);
  if (a.Start() != kNoState) n.AddArc(s, kEpsilon, kEpsilon, oa + a.Start());
  if (b.Start() != kNoState) n.AddArc(s, kEpsilon, kEpsilon, ob + b.Start());
  return n;
}

Network Concat(const Network& a, const Network& b) {
  RequireSameSymbols(a, b, "concatenation");
  if (a.Start() == kNoState || b.Start() == kNoState) {
    return EmptyLanguage(a.symbols());
  }
  Network n(a.symbols());
  const StateId oa = CopyInto(n, a);
  const StateId ob = CopyInto(n, b);
  n.SetStart(oa + a.Start());
  for (StateId s = 0; s < a.NumStates(); ++s) {
    if (!a.IsFinal(s)) continue;
    n.SetFinal(oa + s, false);
    n.AddArc(oa + s, kEpsilon, kEpsilon, ob + b.Start());
  }
  return n;
}

Network Intersect(const Network& a, const Network& b) {
  RequireSameSymbols(a, b, "intersection");
  RequireLanguage(a, "intersection");
  RequireLanguage(b, "intersection");
  const Network x = RemoveEpsilons(a);
  const Network y = RemoveEpsilons(b);
  Network n(a.symbols());
  if (x.Start() == kNoState || y.Start() == kNoState) {
    return EmptyLanguage(a.symbols());
  }
  std::map<std::pair<StateId, StateId>, StateId> ids;
  std::queue<std::pair<StateId, StateId>> queue;
  auto get = [&](StateId p, StateId q) {
    auto [it, fresh] = ids.try_emplace({p, q}, 0);
    if (fresh) {
      it->second = n.AddState();
      n.SetFinal(it->second, x.IsFinal(p) && y.IsFinal(q));
      queue.emplace(p, q);
    }
    return it->second;
  };
  n.SetStart(get(x.Start(), y.Start()));
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop();
    const StateId from = ids.at({p, q});
    const auto& ya = y.Arcs(q);
    for (const Arc& ax : x.Arcs(p)) {
      auto lo = std::lower_bound(
          ya.begin(), ya.end(), ax.upper,
          [](const Arc& arc, Label l) { return arc.upper < l; });
      for (; lo != ya.end() && lo->upper == ax.upper; ++lo) {
        n.AddArc(from, ax.upper, ax.lower, get(ax.target, lo->target));
      }
    }
  }
  return Connect(n);
}

Network Subtract(const Network& a, const Network& b) {
  RequireLanguage(a, "subtraction");
  RequireLanguage(b, "subtraction");
  return Intersect(a, Complement(b));
}

Network Combine(CombineOp op, const Network& a, const Network& b) {
  switch (op) {
    case CombineOp::kUnion:
      return Union(a, b);
    case CombineOp::kConcat:
      return Concat(a, b);
    case CombineOp::kIntersect:
      return Intersect(a, b);
    case CombineOp::kSubtract:
      return Subtract(a, b);
  }
  throw Error("unknown combine operation");
}

Network Plus(const Network& a) {
  if (a.Start() == kNoState) return EmptyLanguage(a.symbols());
  Network n(a.symbols());
  CopyInto(n, a);
  n.SetStart(a.Start());
  for (StateId s = 0; s < a.NumStates(); ++s) {
    if (a.IsFinal(s)) n.AddArc(s, kEpsilon, kEpsilon, a.Start());
  }
  return n;
}

Network Star(const Network& a) {
  Network n(a.symbols());
  const StateId s = n.AddState();
  n.SetStart(s);
  n.SetFinal(s);
  if (a.Start() == kNoState) return n;
  const StateId offset = CopyInto(n, Plus(a));
  n.AddArc(s, kEpsilon, kEpsilon, offset + a.Start());
  return n;
}

Network AtLeast(const Network& a, int n) {
  if (n < 0) throw Error("repetition count must be non-negative");
  Network result = Star(a);
  for (int i = 0; i < n; ++i) result = Concat(a, result);
  return result;
}

Network Closure(ClosureOp op, const Network& a, int n) {
  switch (op) {
    case ClosureOp::kStar:
      return Star(a);
    case ClosureOp::kPlus:
      return Plus(a);
    case ClosureOp::kAtLeast:
      return AtLeast(a, n);
  }
  throw Error("unknown closure operation");
}

Network Complement(const Network& a) {
  RequireLanguage(a, "complement");
  const Network d = Determinize(a);
  const auto alphabet = a.symbols()->Alphabet();
  Network n(a.symbols());
  for (StateId s = 0; s < d.NumStates(); ++s) n.AddState();
  const StateId sink = n.AddState();
  n.SetFinal(sink, true);
  for (Label l : alphabet) n.AddArc(sink, l, l, sink);
  for (StateId s = 0; s < d.NumStates(); ++s) {
    n.SetFinal(s, !d.IsFinal(s));
    const auto& arcs = d.Arcs(s);
    auto it = arcs.begin();
    for (Label l : alphabet) {
      while (it != arcs.end() && it->upper < l) ++it;
      if (it != arcs.end() && it->upper == l) {
        n.AddArc(s, l, l, it->target);
      } else {
        n.AddArc(s, l, l, sink);
      }
    }
  }
  n.SetStart(d.Start() == kNoState ? sink : d.Start());
  n.SetProperties(kDeterministic, true);
  return Connect(n);
}

Network CrossProduct(const Network& a, const Network& b) {
  RequireSameSymbols(a, b, "cross product");
  RequireLanguage(a, "cross product");
  RequireLanguage(b, "cross product");
  const Network x = RemoveEpsilons(a);
  const Network y = RemoveEpsilons(b);
  if (x.Start() == kNoState || y.Start() == kNoState) {
    return EmptyLanguage(a.symbols());
  }
  // Mode 0 reads both sides, mode 1 only the upper side after the lower
  // string has ended, mode 2 only the lower side.
  using Key = std::tuple<StateId, StateId, int>;
  Network n(a.symbols());
  std::map<Key, StateId> ids;
  std::queue<Key> queue;
  auto get = [&](StateId p, StateId q, int mode) {
    auto [it, fresh] = ids.try_emplace({p, q, mode}, 0);
    if (fresh) {
      it->second = n.AddState();
      const bool final = mode == 0   ? x.IsFinal(p) && y.IsFinal(q)
                         : mode == 1 ? x.IsFinal(p)
                                     : y.IsFinal(q);
      n.SetFinal(it->second, final);
      queue.push({p, q, mode});
    }
    return it->second;
  };
  n.SetStart(get(x.Start(), y.Start(), 0));
  while (!queue.empty()) {
    const Key key = queue.front();
    queue.pop();
    const auto [p, q, mode] = key;
    const StateId from = ids.at(key);
    if (mode == 0) {
      for (const Arc& ax : x.Arcs(p)) {
        for (const Arc& ay : y.Arcs(q)) {
          n.AddArc(from, ax.upper, ay.upper, get(ax.target, ay.target, 0));
        }
      }
      if (y.IsFinal(q)) {
        for (const Arc& ax : x.Arcs(p)) {
          n.AddArc(from, ax.upper, kEpsilon, get(ax.target, kNoState, 1));
        }
      }
      if (x.IsFinal(p)) {
        for (const Arc& ay : y.Arcs(q)) {
          n.AddArc(from, kEpsilon, ay.upper, get(kNoState, ay.target, 2));
        }
      }
    } else if (mode == 1) {
      for (const Arc& ax : x.Arcs(p)) {
        n.AddArc(from, ax.upper, kEpsilon, get(ax.target, kNoState, 1));
      }
    } else {
      for (const Arc& ay : y.Arcs(q)) {
        n.AddArc(from, kEpsilon, ay.upper, get(kNoState, ay.target, 2));
      }
    }
  }
  return Connect(n);
}

Network Project(const Network& r, Side side) {
  Network n(r.symbols());
  for (StateId s = 0; s < r.NumStates(); ++s) n.AddState();
  for (StateId s = 0; s < r.NumStates(); ++s) {
    n.SetFinal(s, r.IsFinal(s));
    for (const Arc& a : r.Arcs(s)) {
      const Label l = side == Side::kUpper ? a.upper : a.lower;
      n.AddArc(s, l, l, a.target);
    }
  }
  if (r.Start() != kNoState) n.SetStart(r.Start());
  return n;
}

}  // namespace otfst
