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

#include "otfst/network.h"

#include <algorithm>
#include <set>
#include <utility>

namespace otfst {

Network::Network(SymbolTablePtr symbols) : symbols_(std::move(symbols)) {
  if (!symbols_) throw Error("network requires a symbol table");
}

std::size_t Network::Index(StateId s) const {
  if (s < 0 || s >= NumStates()) {
    throw Error("state id out of range: " + std::to_string(s));
  }
  return static_cast<std::size_t>(s);
}

StateId Network::AddState() {
  arcs_.emplace_back();
  final_.push_back(false);
  props_ &= ~(kDeterministic | kMinimal);
  return NumStates() - 1;
}

void Network::SetStart(StateId s) {
  Index(s);
  start_ = s;
  props_ &= ~(kDeterministic | kMinimal);
}

void Network::SetFinal(StateId s, bool final) {
  final_[Index(s)] = final;
  props_ &= ~kMinimal;
}

void Network::AddArc(StateId from, Arc arc) {
  Index(arc.target);
  if (arc.upper < 0 || static_cast<std::size_t>(arc.upper) >= symbols_->size() ||
      arc.lower < 0 || static_cast<std::size_t>(arc.lower) >= symbols_->size()) {
    throw Error("arc label outside symbol table");
  }
  arcs_[Index(from)].push_back(arc);
  if (arc.upper != arc.lower) props_ &= ~kLanguage;
  if (arc.IsEpsilon()) props_ &= ~kEpsilonFree;
  props_ &= ~(kDeterministic | kMinimal);
}

void Network::SortArcs() {
  for (auto& v : arcs_) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
}

void Network::SetProperties(std::uint32_t mask, bool value) {
  if (value) {
    props_ |= mask;
  } else {
    props_ &= ~mask;
  }
}

std::size_t Network::NumArcs() const {
  std::size_t n = 0;
  for (const auto& v : arcs_) n += v.size();
  return n;
}

std::string Network::Audit() const {
  if (NumStates() > 0 && start_ == kNoState) return "missing start state";
  if (start_ != kNoState && (start_ < 0 || start_ >= NumStates())) {
    return "start state out of range";
  }
  if (final_.size() != arcs_.size()) return "final table size mismatch";
  bool language = true;
  bool eps_free = true;
  bool deterministic = true;
  for (StateId s = 0; s < NumStates(); ++s) {
    std::set<std::pair<Label, Label>> seen;
    for (const Arc& a : arcs_[static_cast<std::size_t>(s)]) {
      if (a.target < 0 || a.target >= NumStates()) {
        return "arc target out of range at state " + std::to_string(s);
      }
      if (a.upper != a.lower) language = false;
      if (a.IsEpsilon()) {
        eps_free = false;
        deterministic = false;
      }
      if (!seen.emplace(a.upper, a.lower).second) deterministic = false;
    }
  }
  if (IsLanguage() && !language) return "language flag set on a relation";
  if (IsEpsilonFree() && !eps_free) return "epsilon-free flag set with eps arcs";
  if (IsDeterministic() && !deterministic) {
    return "deterministic flag set on a nondeterministic network";
  }
  if (IsMinimal() && !IsDeterministic()) {
    return "minimal flag set without deterministic flag";
  }
  return {};
}

}  // namespace otfst
