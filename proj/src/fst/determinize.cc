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
// Trimming, epsilon removal, subset construction and Hopcroft minimization.
// Arc labels are (upper, lower) pairs treated as single symbols.

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <unordered_map>
#include <utility>

#include "internal.h"
#include "otfst/operations.h"

namespace otfst {

namespace {

using PairKey = std::uint64_t;

PairKey KeyOf(const Arc& a) {
  return (static_cast<PairKey>(static_cast<std::uint32_t>(a.upper)) << 32) |
         static_cast<std::uint32_t>(a.lower);
}

}  // namespace

namespace internal {

Network Canonicalize(const Network& a) {
  Network n(a.symbols());
  if (a.Start() == kNoState) {
    n.SetStart(n.AddState());
    return n;
  }
  std::vector<StateId> order;
  std::vector<StateId> remap(static_cast<std::size_t>(a.NumStates()), kNoState);
  remap[static_cast<std::size_t>(a.Start())] = 0;
  order.push_back(a.Start());
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::vector<Arc> arcs = a.Arcs(order[i]);
    std::sort(arcs.begin(), arcs.end());
    for (const Arc& arc : arcs) {
      auto& slot = remap[static_cast<std::size_t>(arc.target)];
      if (slot == kNoState) {
        slot = static_cast<StateId>(order.size());
        order.push_back(arc.target);
      }
    }
  }
  for (std::size_t i = 0; i < order.size(); ++i) n.AddState();
  n.SetStart(0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto s = static_cast<StateId>(i);
    n.SetFinal(s, a.IsFinal(order[i]));
    for (const Arc& arc : a.Arcs(order[i])) {
      n.AddArc(s, arc.upper, arc.lower,
               remap[static_cast<std::size_t>(arc.target)]);
    }
  }
  n.SortArcs();
  n.SetProperties(a.Properties() & (kDeterministic | kMinimal), true);
  return n;
}

}  // namespace internal

Network Connect(const Network& a) {
  Network n(a.symbols());
  if (a.Start() == kNoState) {
    n.SetStart(n.AddState());
    return n;
  }
  const auto size = static_cast<std::size_t>(a.NumStates());
  std::vector<bool> access(size, false);
  std::vector<bool> coaccess(size, false);
  std::vector<std::vector<StateId>> reverse(size);
  std::vector<StateId> stack{a.Start()};
  access[static_cast<std::size_t>(a.Start())] = true;
  while (!stack.empty()) {
    const StateId s = stack.back();
    stack.pop_back();
    for (const Arc& arc : a.Arcs(s)) {
      reverse[static_cast<std::size_t>(arc.target)].push_back(s);
      if (!access[static_cast<std::size_t>(arc.target)]) {
        access[static_cast<std::size_t>(arc.target)] = true;
        stack.push_back(arc.target);
      }
    }
  }
  for (StateId s = 0; s < a.NumStates(); ++s) {
    if (access[static_cast<std::size_t>(s)] && a.IsFinal(s)) {
      coaccess[static_cast<std::size_t>(s)] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    const StateId s = stack.back();
    stack.pop_back();
    for (StateId p : reverse[static_cast<std::size_t>(s)]) {
      if (!coaccess[static_cast<std::size_t>(p)]) {
        coaccess[static_cast<std::size_t>(p)] = true;
        stack.push_back(p);
      }
    }
  }
  if (!coaccess[static_cast<std::size_t>(a.Start())]) {
    n.SetStart(n.AddState());
    n.SetProperties(kDeterministic | kMinimal, true);
    return n;
  }
  std::vector<StateId> remap(size, kNoState);
  for (StateId s = 0; s < a.NumStates(); ++s) {
    if (coaccess[static_cast<std::size_t>(s)]) {
      remap[static_cast<std::size_t>(s)] = n.AddState();
    }
  }
  for (StateId s = 0; s < a.NumStates(); ++s) {
    const StateId t = remap[static_cast<std::size_t>(s)];
    if (t == kNoState) continue;
    n.SetFinal(t, a.IsFinal(s));
    for (const Arc& arc : a.Arcs(s)) {
      const StateId u = remap[static_cast<std::size_t>(arc.target)];
      if (u != kNoState) n.AddArc(t, arc.upper, arc.lower, u);
    }
  }
  n.SetStart(remap[static_cast<std::size_t>(a.Start())]);
  n.SetProperties(a.Properties() & kDeterministic, true);
  return n;
}

Network RemoveEpsilons(const Network& a) {
  if (a.IsEpsilonFree()) {
    Network c = Connect(a);
    c.SortArcs();
    return c;
  }
  Network n(a.symbols());
  for (StateId s = 0; s < a.NumStates(); ++s) n.AddState();
  std::vector<bool> seen(static_cast<std::size_t>(a.NumStates()));
  std::vector<StateId> closure;
  std::vector<StateId> stack;
  for (StateId s = 0; s < a.NumStates(); ++s) {
    std::fill(seen.begin(), seen.end(), false);
    closure.clear();
    stack.assign(1, s);
    seen[static_cast<std::size_t>(s)] = true;
    while (!stack.empty()) {
      const StateId q = stack.back();
      stack.pop_back();
      closure.push_back(q);
      for (const Arc& arc : a.Arcs(q)) {
        if (arc.IsEpsilon() && !seen[static_cast<std::size_t>(arc.target)]) {
          seen[static_cast<std::size_t>(arc.target)] = true;
          stack.push_back(arc.target);
        }
      }
    }
    bool final = false;
    for (StateId q : closure) {
      final = final || a.IsFinal(q);
      for (const Arc& arc : a.Arcs(q)) {
        if (!arc.IsEpsilon()) n.AddArc(s, arc);
      }
    }
    n.SetFinal(s, final);
  }
  if (a.Start() != kNoState) n.SetStart(a.Start());
  n.SortArcs();
  return Connect(n);
}

Network Determinize(const Network& a) {
  if (a.IsDeterministic()) {
    Network c = Connect(a);
    c.SortArcs();
    return c;
  }
  const Network e = RemoveEpsilons(a);
  Network n(a.symbols());
  std::map<std::vector<StateId>, StateId> ids;
  std::vector<const std::vector<StateId>*> subsets;
  auto get = [&](std::vector<StateId> subset) {
    auto [it, fresh] = ids.try_emplace(std::move(subset), 0);
    if (fresh) {
      it->second = n.AddState();
      subsets.push_back(&it->first);
      bool final = false;
      for (StateId s : it->first) final = final || e.IsFinal(s);
      n.SetFinal(it->second, final);
    }
    return it->second;
  };
  n.SetStart(get({e.Start()}));
  std::map<PairKey, std::vector<StateId>> moves;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    moves.clear();
    for (StateId s : *subsets[i]) {
      for (const Arc& arc : e.Arcs(s)) moves[KeyOf(arc)].push_back(arc.target);
    }
    for (auto& [key, targets] : moves) {
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
      const StateId to = get(std::move(targets));
      n.AddArc(static_cast<StateId>(i), static_cast<Label>(key >> 32),
               static_cast<Label>(key & 0xffffffffu), to);
    }
  }
  n.SetProperties(kDeterministic, true);
  return n;
}

Network Minimize(const Network& a) {
  if (a.IsMinimal()) return a;
  const Network d = Connect(Determinize(a));
  if (!d.IsFinal(d.Start()) && d.Arcs(d.Start()).empty()) {
    return EmptyLanguage(a.symbols());
  }

  // Dense label ids over the pairs actually used.
  std::vector<PairKey> labels;
  for (StateId s = 0; s < d.NumStates(); ++s) {
    for (const Arc& arc : d.Arcs(s)) labels.push_back(KeyOf(arc));
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::unordered_map<PairKey, int> label_index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    label_index[labels[i]] = static_cast<int>(i);
  }

  // Complete transition function with an explicit sink at index n.
  const int n = d.NumStates();
  const int sink = n;
  const int k = static_cast<int>(labels.size());
  std::vector<int> delta(static_cast<std::size_t>(n + 1) * k, sink);
  for (StateId s = 0; s < n; ++s) {
    for (const Arc& arc : d.Arcs(s)) {
      delta[static_cast<std::size_t>(s) * k + label_index[KeyOf(arc)]] =
          arc.target;
    }
  }
  // inverse[c][t] = sources reaching t on c.
  std::vector<std::vector<std::vector<int>>> inverse(
      static_cast<std::size_t>(k),
      std::vector<std::vector<int>>(static_cast<std::size_t>(n + 1)));
  for (int s = 0; s <= n; ++s) {
    for (int c = 0; c < k; ++c) {
      inverse[c][delta[static_cast<std::size_t>(s) * k + c]].push_back(s);
    }
  }

  std::vector<int> block_of(static_cast<std::size_t>(n + 1));
  std::vector<std::vector<int>> blocks;
  {
    std::vector<int> finals, others;
    for (int s = 0; s <= n; ++s) {
      (s < n && d.IsFinal(s) ? finals : others).push_back(s);
    }
    for (auto* part : {&finals, &others}) {
      if (part->empty()) continue;
      for (int s : *part) block_of[s] = static_cast<int>(blocks.size());
      blocks.push_back(std::move(*part));
    }
  }
  std::vector<bool> in_work(blocks.size(), true);
  std::vector<int> work;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    work.push_back(static_cast<int>(b));
  }

  std::vector<int> touched_count(static_cast<std::size_t>(n + 1), 0);
  std::vector<int> touched;
  std::vector<int> marked_states;
  std::vector<bool> marked(static_cast<std::size_t>(n + 1), false);
  while (!work.empty()) {
    const int splitter = work.back();
    work.pop_back();
    in_work[splitter] = false;
    const std::vector<int> members = blocks[splitter];
    for (int c = 0; c < k; ++c) {
      touched.clear();
      marked_states.clear();
      for (int t : members) {
        for (int s : inverse[c][t]) {
          if (marked[s]) continue;
          marked[s] = true;
          marked_states.push_back(s);
          if (touched_count[block_of[s]]++ == 0) touched.push_back(block_of[s]);
        }
      }
      for (int y : touched) {
        const int hits = std::exchange(touched_count[y], 0);
        if (hits == static_cast<int>(blocks[y].size())) continue;
        std::vector<int> in, out;
        for (int s : blocks[y]) (marked[s] ? in : out).push_back(s);
        const int fresh = static_cast<int>(blocks.size());
        blocks[y] = std::move(out);
        for (int s : in) block_of[s] = fresh;
        blocks.push_back(std::move(in));
        in_work.push_back(false);
        if (in_work[y]) {
          in_work[fresh] = true;
          work.push_back(fresh);
        } else {
          const int smaller =
              blocks[fresh].size() <= blocks[y].size() ? fresh : y;
          in_work[smaller] = true;
          work.push_back(smaller);
        }
      }
      for (int s : marked_states) marked[s] = false;
    }
  }

  const int sink_block = block_of[sink];
  Network m(a.symbols());
  std::vector<StateId> block_state(blocks.size(), kNoState);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (static_cast<int>(b) != sink_block) block_state[b] = m.AddState();
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (static_cast<int>(b) == sink_block) continue;
    const int rep = blocks[b].front();
    m.SetFinal(block_state[b], d.IsFinal(rep));
    for (const Arc& arc : d.Arcs(rep)) {
      const int tb = block_of[arc.target];
      if (tb == sink_block) continue;
      m.AddArc(block_state[b], arc.upper, arc.lower, block_state[tb]);
    }
  }
  m.SetStart(block_state[block_of[d.Start()]]);
  m.SetProperties(kDeterministic | kMinimal, true);
  return internal::Canonicalize(m);
}

}  // namespace otfst
