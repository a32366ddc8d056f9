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
// Composition with the three-state epsilon-matching filter. Filter state 0
// allows every move; after the right operand advances alone on an upper
// epsilon (state 1) the left operand may not advance alone, and after the
// left operand advances alone on a lower epsilon (state 2) the right
// operand may not. Simultaneous epsilon moves are taken only from state 0.

#include <algorithm>
#include <queue>
#include <tuple>
#include <unordered_map>

#include "internal.h"
#include "otfst/operations.h"

namespace otfst {

namespace {

struct Triple {
  StateId left;
  StateId right;
  int filter;
  friend bool operator==(const Triple&, const Triple&) = default;
};

struct TripleHash {
  std::size_t operator()(const Triple& t) const {
    std::size_t h = static_cast<std::size_t>(t.left) * 0x9e3779b97f4a7c15ull;
    h ^= static_cast<std::size_t>(t.right) + 0x7f4a7c159e3779b9ull + (h << 6) +
         (h >> 2);
    return h * 3 + static_cast<std::size_t>(t.filter);
  }
};

}  // namespace

Network Compose(const Network& r, const Network& s) {
  internal::RequireSameSymbols(r, s, "composition");
  const Network x = RemoveEpsilons(r);
  const Network y = RemoveEpsilons(s);
  Network n(r.symbols());
  if (x.Start() == kNoState || y.Start() == kNoState) {
    return EmptyLanguage(r.symbols());
  }

  // Right-operand arcs are sorted by upper label, so matches are a range.
  std::unordered_map<Triple, StateId, TripleHash> ids;
  std::queue<Triple> queue;
  auto get = [&](StateId p, StateId q, int f) {
    auto [it, fresh] = ids.try_emplace(Triple{p, q, f}, 0);
    if (fresh) {
      it->second = n.AddState();
      n.SetFinal(it->second, x.IsFinal(p) && y.IsFinal(q));
      queue.push(Triple{p, q, f});
    }
    return it->second;
  };
  n.SetStart(get(x.Start(), y.Start(), 0));

  auto upper_range = [](const std::vector<Arc>& arcs, Label l) {
    auto lo = std::lower_bound(
        arcs.begin(), arcs.end(), l,
        [](const Arc& arc, Label v) { return arc.upper < v; });
    auto hi = std::upper_bound(
        lo, arcs.end(), l, [](Label v, const Arc& arc) { return v < arc.upper; });
    return std::make_pair(lo, hi);
  };

  while (!queue.empty()) {
    const Triple t = queue.front();
    queue.pop();
    const StateId from = ids.at(t);
    const auto& right_arcs = y.Arcs(t.right);
    for (const Arc& a : x.Arcs(t.left)) {
      if (a.lower != kEpsilon) {
        auto [lo, hi] = upper_range(right_arcs, a.lower);
        for (auto it = lo; it != hi; ++it) {
          n.AddArc(from, a.upper, it->lower, get(a.target, it->target, 0));
        }
        continue;
      }
      // Left advances alone.
      if (t.filter != 1) {
        n.AddArc(from, a.upper, kEpsilon, get(a.target, t.right, 2));
      }
      // Both advance on their epsilons.
      if (t.filter == 0) {
        auto [lo, hi] = upper_range(right_arcs, kEpsilon);
        for (auto it = lo; it != hi; ++it) {
          n.AddArc(from, a.upper, it->lower, get(a.target, it->target, 0));
        }
      }
    }
    // Right advances alone.
    if (t.filter != 2) {
      auto [lo, hi] = upper_range(right_arcs, kEpsilon);
      for (auto it = lo; it != hi; ++it) {
        n.AddArc(from, kEpsilon, it->lower, get(t.left, it->target, 1));
      }
    }
  }
  n.SortArcs();
  return Connect(n);
}

}  // namespace otfst
