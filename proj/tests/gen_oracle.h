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
// Syllabification candidates computed straight from the definition of GEN,
// without any automaton code: at each gap between segments insert nothing
// or one empty O[], N[] or D[]; wrap each consonant as O[c], D[c] or X[c]
// and each vowel as N[v] or X[v]; keep the result if, with X[..] removed,
// it is a sequence of (onset) nucleus (coda) syllables, non-empty whenever
// something was left unparsed.

#ifndef OTFST_TESTS_GEN_ORACLE_H_
#define OTFST_TESTS_GEN_ORACLE_H_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

namespace otfst::testing {

namespace gen_oracle_internal {

// Position in [(O) N (D)]*: 0 start, 1 after onset, 2 after nucleus,
// 3 after coda. -1 is dead.
inline int Step(int state, char role) {
  switch (role) {
    case 'O': return state == 1 ? -1 : 1;
    case 'N': return 2;
    case 'D': return state == 2 ? 3 : -1;
  }
  return -1;
}

inline bool Accepting(int state, bool any_syllable, bool any_unparsed) {
  return (state == 0 || state == 2 || state == 3) &&
         (any_syllable || !any_unparsed);
}

inline bool IsVowel(char c) {
  return std::string_view("aeiou").find(c) != std::string_view::npos;
}

}  // namespace gen_oracle_internal

inline std::set<std::string> BruteForceGen(std::string_view word) {
  using namespace gen_oracle_internal;
  std::set<std::string> out;
  std::string text;
  // `i` counts gaps and segments alternately: even = gap, odd = segment.
  auto walk = [&](auto&& self, std::size_t i, int state, bool syl,
                  bool unparsed) -> void {
    if (state < 0) return;
    const std::size_t size = text.size();
    if (i % 2 == 0) {
      const bool last = i == 2 * word.size();
      auto next = [&](int st, bool s) {
        if (last) {
          if (Accepting(st, s, unparsed)) out.insert(text);
        } else {
          self(self, i + 1, st, s, unparsed);
        }
      };
      next(state, syl);
      for (char role : {'O', 'N', 'D'}) {
        text += std::string(1, role) + "[]";
        next(Step(state, role), true);
        text.resize(size);
      }
      return;
    }
    const char c = word[i / 2];
    const std::string roles = IsVowel(c) ? "NX" : "ODX";
    for (char role : roles) {
      text += std::string(1, role) + "[" + c + "]";
      if (role == 'X') {
        self(self, i + 1, state, syl, true);
      } else {
        self(self, i + 1, Step(state, role), true, unparsed);
      }
      text.resize(size);
    }
  };
  walk(walk, 0, 0, false, false);
  return out;
}

// Number of candidates, by dynamic programming over the same definition.
inline boost::multiprecision::cpp_int GenCandidateCount(std::string_view word) {
  using namespace gen_oracle_internal;
  using Count = boost::multiprecision::cpp_int;
  using Key = std::tuple<int, bool, bool>;  // state, syllable seen, unparsed
  std::map<Key, Count> cur{{{0, false, false}, 1}};
  auto gap = [](const std::map<Key, Count>& in) {
    std::map<Key, Count> out = in;
    for (const auto& [k, n] : in) {
      for (char role : {'O', 'N', 'D'}) {
        const int s = Step(std::get<0>(k), role);
        if (s >= 0) out[{s, true, std::get<2>(k)}] += n;
      }
    }
    return out;
  };
  cur = gap(cur);
  for (char c : word) {
    std::map<Key, Count> next;
    for (const auto& [k, n] : cur) {
      const auto [state, syl, unparsed] = k;
      next[{state, syl, true}] += n;  // X[c]
      for (char role : IsVowel(c) ? std::string("N") : std::string("OD")) {
        const int s = Step(state, role);
        if (s >= 0) next[{s, true, unparsed}] += n;
      }
    }
    cur = gap(next);
  }
  Count total = 0;
  for (const auto& [k, n] : cur) {
    if (Accepting(std::get<0>(k), std::get<1>(k), std::get<2>(k))) total += n;
  }
  return total;
}

}  // namespace otfst::testing

#endif  // OTFST_TESTS_GEN_ORACLE_H_
