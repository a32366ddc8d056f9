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

#include "otfst/symbol_table.h"

#include <algorithm>
#include <cctype>

namespace otfst {

SymbolTable::SymbolTable() { names_.emplace_back(); }

SymbolTable::SymbolTable(std::initializer_list<std::string_view> names)
    : SymbolTable() {
  for (auto name : names) AddSymbol(name);
}

Label SymbolTable::AddSymbol(std::string_view name) {
  if (name.empty()) throw Error("symbol name must be non-empty");
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      throw Error("symbol name contains whitespace: '" + std::string(name) +
                  "'");
    }
  }
  if (auto it = ids_.find(std::string(name)); it != ids_.end()) {
    return it->second;
  }
  const auto id = static_cast<Label>(names_.size());
  names_.emplace_back(name);
  ids_.emplace(std::string(name), id);
  longest_ = std::max(longest_, name.size());
  return id;
}

std::optional<Label> SymbolTable::Find(std::string_view name) const {
  if (auto it = ids_.find(std::string(name)); it != ids_.end()) {
    return it->second;
  }
  return std::nullopt;
}

Label SymbolTable::Id(std::string_view name) const {
  if (auto id = Find(name)) return *id;
  throw Error("unregistered symbol: '" + std::string(name) + "'");
}

const std::string& SymbolTable::Name(Label label) const {
  if (label < 0 || static_cast<std::size_t>(label) >= names_.size()) {
    throw Error("symbol id out of range: " + std::to_string(label));
  }
  return names_[static_cast<std::size_t>(label)];
}

std::vector<Label> SymbolTable::Alphabet() const {
  std::vector<Label> out;
  out.reserve(names_.size() - 1);
  for (std::size_t i = 1; i < names_.size(); ++i) {
    out.push_back(static_cast<Label>(i));
  }
  return out;
}

std::vector<Label> SymbolTable::Tokenize(std::string_view text) const {
  std::vector<Label> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t len = std::min(longest_, text.size() - pos);
    std::optional<Label> match;
    for (; len > 0; --len) {
      if ((match = Find(text.substr(pos, len)))) break;
    }
    if (!match) {
      throw Error("cannot tokenize '" + std::string(text) + "' at offset " +
                  std::to_string(pos));
    }
    out.push_back(*match);
    pos += len;
  }
  return out;
}

std::string SymbolTable::Render(std::span<const Label> labels) const {
  std::string out;
  for (Label l : labels) out += Name(l);
  return out;
}

}  // namespace otfst
