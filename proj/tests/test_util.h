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
// Brute-force helpers shared by the test suites. Nothing here goes through
// composition, determinization or minimization; the relation oracle walks
// raw arcs.

#ifndef OTFST_TESTS_TEST_UTIL_H_
#define OTFST_TESTS_TEST_UTIL_H_

#include <functional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "otfst/network.h"
#include "otfst/operations.h"

namespace otfst::testing {

using Word = std::vector<Label>;
using PairSet = std::set<std::pair<Word, Word>>;

// Every word over `alphabet` of length <= max_len, shortest first.
inline std::vector<Word> AllWords(const std::vector<Label>& alphabet,
                                  int max_len) {
  std::vector<Word> out{{}};
  std::size_t begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (Label l : alphabet) {
        Word w = out[i];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

// All (upper, lower) pairs along accepting paths of an acyclic network,
// read directly off the arcs.
inline PairSet PathPairs(const Network& n) {
  PairSet out;
  if (n.Start() == kNoState) return out;
  Word up, lo;
  std::function<void(StateId, int)> walk = [&](StateId s, int depth) {
    if (depth > 64) throw Error("PathPairs: network is not acyclic");
    if (n.IsFinal(s)) out.emplace(up, lo);
    for (const Arc& a : n.Arcs(s)) {
      if (a.upper != kEpsilon) up.push_back(a.upper);
      if (a.lower != kEpsilon) lo.push_back(a.lower);
      walk(a.target, depth + 1);
      if (a.upper != kEpsilon) up.pop_back();
      if (a.lower != kEpsilon) lo.pop_back();
    }
  };
  walk(n.Start(), 0);
  return out;
}

inline std::set<std::string> Rendered(const SymbolTable& st,
                                      const std::set<Word>& words) {
  std::set<std::string> out;
  for (const auto& w : words) out.insert(st.Render(w));
  return out;
}

inline std::set<std::string> AsSet(const PathSet& p) {
  return {p.outputs.begin(), p.outputs.end()};
}

// Random network with at most `max_states` states over `labels`. When
// `acyclic` is set every arc goes to a strictly higher state id.
inline Network RandomNetwork(std::mt19937& rng, SymbolTablePtr st,
                             const std::vector<Label>& labels, int max_states,
                             bool acyclic, bool language) {
  std::uniform_int_distribution<int> nstates(1, max_states);
  std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
  std::bernoulli_distribution coin(0.4);
  Network n(std::move(st));
  const int count = nstates(rng);
  for (int i = 0; i < count; ++i) n.AddState();
  n.SetStart(0);
  for (int s = 0; s < count; ++s) {
    n.SetFinal(s, coin(rng));
    std::uniform_int_distribution<int> degree(0, 3);
    const int d = degree(rng);
    for (int k = 0; k < d; ++k) {
      int lo = acyclic ? s + 1 : 0;
      if (lo >= count) break;
      std::uniform_int_distribution<int> target(lo, count - 1);
      const Label u = labels[pick(rng)];
      const Label l = language ? u : labels[pick(rng)];
      n.AddArc(s, u, l, target(rng));
    }
  }
  n.SetFinal(count - 1, true);
  return n;
}

}  // namespace otfst::testing

#endif  // OTFST_TESTS_TEST_UTIL_H_
