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
// Symbol registry shared by all networks of one compilation.

#ifndef OTFST_SYMBOL_TABLE_H_
#define OTFST_SYMBOL_TABLE_H_

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace otfst {

using Label = std::int32_t;
inline constexpr Label kEpsilon = 0;

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Maps symbol names to dense ids. Id 0 is epsilon and renders as "".
// Every non-epsilon symbol is a member of the closed alphabet that `?`
// and complement range over.
class SymbolTable {
 public:
  SymbolTable();
  SymbolTable(std::initializer_list<std::string_view> names);

  // Returns the id of `name`, registering it if new. Names must be
  // non-empty and free of whitespace.
  Label AddSymbol(std::string_view name);

  std::optional<Label> Find(std::string_view name) const;

  // Throws Error if `name` is not registered.
  Label Id(std::string_view name) const;

  const std::string& Name(Label label) const;

  // Number of ids including epsilon.
  std::size_t size() const { return names_.size(); }

  // All non-epsilon ids in ascending order.
  std::vector<Label> Alphabet() const;

  // Longest-match tokenization over the registered names. Throws Error
  // when some position matches no symbol.
  std::vector<Label> Tokenize(std::string_view text) const;

  std::string Render(std::span<const Label> labels) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Label> ids_;
  std::size_t longest_ = 0;
};

using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

}  // namespace otfst

#endif  // OTFST_SYMBOL_TABLE_H_
