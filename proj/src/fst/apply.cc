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

#include <algorithm>
#include <deque>
#include <set>

#include "internal.h"
#include "otfst/operations.h"

namespace otfst {

namespace {

// Kahn order over a network. An order shorter than the state count means
// the network has a cycle.
std::vector<StateId> TopologicalOrder(const Network& a) {
  std::vector<int> indegree(static_cast<std::size_t>(a.NumStates()), 0);
  for (StateId s = 0; s < a.NumStates(); ++s) {
    for (const Arc& arc : a.Arcs(s)) ++indegree[arc.target];
  }
  std::vector<StateId> order;
  for (StateId s = 0; s < a.NumStates(); ++s) {
    if (indegree[s] == 0) order.push_back(s);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const Arc& arc : a.Arcs(order[i])) {
      if (--indegree[arc.target] == 0) order.push_back(arc.target);
    }
  }
  return order;
}

}  // namespace

bool IsEmpty(const Network& a) {
  const Network c = Connect(a);
  for (StateId s = 0; s < c.NumStates(); ++s) {
    if (c.IsFinal(s)) return false;
  }
  return true;
}

bool IsAcyclic(const Network& a) {
  const Network c = Connect(a);
  return TopologicalOrder(c).size() == static_cast<std::size_t>(c.NumStates());
}

bool Accepts(const Network& language, std::span<const Label> labels) {
  internal::RequireLanguage(language, "membership test");
  if (language.Start() == kNoState) return false;
  std::set<StateId> current;
  auto close = [&](std::set<StateId> states) {
    std::vector<StateId> stack(states.begin(), states.end());
    while (!stack.empty()) {
      const StateId s = stack.back();
      stack.pop_back();
      for (const Arc& arc : language.Arcs(s)) {
        if (arc.IsEpsilon() && states.insert(arc.target).second) {
          stack.push_back(arc.target);
        }
      }
    }
    return states;
  };
  current = close({language.Start()});
  for (Label l : labels) {
    std::set<StateId> next;
    for (StateId s : current) {
      for (const Arc& arc : language.Arcs(s)) {
        if (arc.upper == l && l != kEpsilon) next.insert(arc.target);
      }
    }
    current = close(std::move(next));
    if (current.empty()) return false;
  }
  return std::any_of(current.begin(), current.end(),
                     [&](StateId s) { return language.IsFinal(s); });
}

bool Accepts(const Network& language, std::string_view text) {
  return Accepts(language, language.symbols()->Tokenize(text));
}

bool Equivalent(const Network& a, const Network& b) {
  internal::RequireSameSymbols(a, b, "equivalence");
  const Network x = Minimize(a);
  const Network y = Minimize(b);
  if (x.NumStates() != y.NumStates()) return false;
  for (StateId s = 0; s < x.NumStates(); ++s) {
    if (x.IsFinal(s) != y.IsFinal(s) || x.Arcs(s) != y.Arcs(s)) return false;
  }
  return x.Start() == y.Start();
}

PathCount CountPaths(const Network& a) {
  const Network c = Connect(a);
  const auto order = TopologicalOrder(c);
  if (order.size() != static_cast<std::size_t>(c.NumStates())) {
    throw Error("path count requested for a cyclic network");
  }
  std::vector<PathCount> paths(order.size());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    PathCount total = c.IsFinal(*it) ? 1 : 0;
    for (const Arc& arc : c.Arcs(*it)) total += paths[arc.target];
    paths[*it] = std::move(total);
  }
  return paths[c.Start()];
}

PathSet Enumerate(const Network& language, std::size_t limit) {
  internal::RequireLanguage(language, "enumeration");
  const Network m = Minimize(language);
  const SymbolTable& symbols = *m.symbols();
  std::set<std::string> found;
  PathSet result;
  auto add = [&](const std::vector<Label>& labels) {
    if (found.size() >= limit) {
      std::string s = symbols.Render(labels);
      if (!found.count(s)) result.truncated = true;
      return;
    }
    found.insert(symbols.Render(labels));
  };

  if (!IsEmpty(m)) {
    if (TopologicalOrder(m).size() == static_cast<std::size_t>(m.NumStates())) {
      // Acyclic: depth-first over all paths.
      std::vector<Label> labels;
      struct Frame {
        StateId state;
        std::size_t next;
      };
      std::vector<Frame> stack{{m.Start(), 0}};
      if (m.IsFinal(m.Start())) add(labels);
      while (!stack.empty() && !result.truncated) {
        Frame& top = stack.back();
        const auto& arcs = m.Arcs(top.state);
        if (top.next == arcs.size()) {
          stack.pop_back();
          if (!labels.empty()) labels.pop_back();
          continue;
        }
        const Arc& arc = arcs[top.next++];
        labels.push_back(arc.upper);
        stack.push_back({arc.target, 0});
        if (m.IsFinal(arc.target)) add(labels);
      }
    } else {
      // Cyclic: breadth-first by length until the limit is exceeded.
      std::deque<std::pair<StateId, std::vector<Label>>> queue;
      queue.emplace_back(m.Start(), std::vector<Label>{});
      std::size_t expansions = 0;
      const std::size_t budget = 64 * (limit + 1);
      while (!queue.empty() && !result.truncated) {
        auto [state, labels] = std::move(queue.front());
        queue.pop_front();
        if (m.IsFinal(state)) add(labels);
        if (++expansions > budget) {
          result.truncated = true;
          break;
        }
        for (const Arc& arc : m.Arcs(state)) {
          auto next = labels;
          next.push_back(arc.upper);
          queue.emplace_back(arc.target, std::move(next));
        }
      }
    }
  }
  result.outputs.assign(found.begin(), found.end());
  return result;
}

PathSet Apply(const Network& r, std::span<const Label> input, Direction dir,
              std::size_t limit) {
  const Network word = StringLanguage(r.symbols(), input);
  if (dir == Direction::kDown) {
    return Enumerate(Project(Compose(word, r), Side::kLower), limit);
  }
  return Enumerate(Project(Compose(r, word), Side::kUpper), limit);
}

PathSet Apply(const Network& r, std::string_view input, Direction dir,
              std::size_t limit) {
  return Apply(r, r.symbols()->Tokenize(input), dir, limit);
}

}  // namespace otfst
