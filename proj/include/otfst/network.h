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
// Finite-state network over symbol-pair arcs. A network whose arcs all
// carry identical upper and lower labels denotes a language; otherwise it
// denotes a regular relation between its upper and lower languages.

#ifndef OTFST_NETWORK_H_
#define OTFST_NETWORK_H_

#include <cstdint>
#include <string>
#include <vector>

#include "otfst/symbol_table.h"

namespace otfst {

using StateId = std::int32_t;
inline constexpr StateId kNoState = -1;

struct Arc {
  Label upper;
  Label lower;
  StateId target;

  bool IsEpsilon() const { return upper == kEpsilon && lower == kEpsilon; }
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Property bits. kLanguage and kEpsilonFree are maintained exactly as arcs
// are added; kDeterministic and kMinimal are only ever set by the
// algorithms that establish them and are cleared by any mutation.
enum Property : std::uint32_t {
  kLanguage = 1u << 0,
  kEpsilonFree = 1u << 1,
  kDeterministic = 1u << 2,
  kMinimal = 1u << 3,
};

class Network {
 public:
  explicit Network(SymbolTablePtr symbols);

  const SymbolTablePtr& symbols() const { return symbols_; }

  StateId AddState();
  void SetStart(StateId s);
  void SetFinal(StateId s, bool final = true);
  void AddArc(StateId from, Arc arc);
  void AddArc(StateId from, Label upper, Label lower, StateId target) {
    AddArc(from, Arc{upper, lower, target});
  }
  // Sorts each state's arcs by (upper, lower, target) and drops duplicates.
  void SortArcs();
  void SetProperties(std::uint32_t mask, bool value);

  StateId Start() const { return start_; }
  StateId NumStates() const { return static_cast<StateId>(arcs_.size()); }
  std::size_t NumArcs() const;
  bool IsFinal(StateId s) const { return final_[Index(s)]; }
  const std::vector<Arc>& Arcs(StateId s) const { return arcs_[Index(s)]; }

  std::uint32_t Properties() const { return props_; }
  bool IsLanguage() const { return props_ & kLanguage; }
  bool IsEpsilonFree() const { return props_ & kEpsilonFree; }
  bool IsDeterministic() const { return props_ & kDeterministic; }
  bool IsMinimal() const { return props_ & kMinimal; }

  // Structural audit: valid ids, start present when states exist, and
  // every set property bit holds on the actual arcs. Returns an empty
  // string when the network is sound, otherwise a description.
  std::string Audit() const;

 private:
  std::size_t Index(StateId s) const;

  SymbolTablePtr symbols_;
  std::vector<std::vector<Arc>> arcs_;
  std::vector<bool> final_;
  StateId start_ = kNoState;
  std::uint32_t props_ = kLanguage | kEpsilonFree;
};

}  // namespace otfst

#endif  // OTFST_NETWORK_H_
