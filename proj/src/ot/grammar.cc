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

#include "otfst/ot/grammar.h"

#include <exception>
#include <map>

#include "otfst/regex/calculus.h"

namespace otfst::ot {

namespace {

Network Apply1(const Network& r, const Network& member, Mode mode) {
  return mode == Mode::kLenient ? regex::LenientCompose(r, member)
                                : Minimize(Compose(r, member));
}

PathSet Outputs(const Network& r, std::size_t limit) {
  return Enumerate(Project(r, Side::kLower), limit);
}

std::string MemberLabel(const ConstraintSpec& c, std::size_t k) {
  return k == 0 ? c.name() : c.name() + std::to_string(k);
}

}  // namespace

Grammar::Grammar(Network gen, std::vector<ConstraintSpec> ranking)
    : gen_(std::move(gen)), ranking_(std::move(ranking)) {
  for (const auto& c : ranking_) {
    if (c.network().symbols() != gen_.symbols()) {
      throw Error("constraint '" + c.name() +
                  "' is not over GEN's symbol table");
    }
  }
}

std::optional<std::size_t> Grammar::Find(std::string_view name) const {
  for (std::size_t i = 0; i < ranking_.size(); ++i) {
    if (ranking_[i].name() == name) return i;
  }
  return std::nullopt;
}

Grammar Grammar::WithBudget(std::string_view name, int budget) const {
  const auto i = Find(name);
  if (!i) throw Error("no constraint named '" + std::string(name) + "'");
  auto ranking = ranking_;
  ranking[*i] = ranking[*i].WithBudget(budget);
  return Grammar(gen_, std::move(ranking));
}

Grammar Grammar::WithUniformBudget(int budget) const {
  auto ranking = ranking_;
  for (auto& c : ranking) {
    if (c.kind() == ConstraintKind::kForbiddenPattern) c = c.WithBudget(budget);
  }
  return Grammar(gen_, std::move(ranking));
}

Grammar Grammar::WithRanking(std::vector<ConstraintSpec> ranking) const {
  return Grammar(gen_, std::move(ranking));
}

Grammar DefaultGrammar(int parse_budget) {
  const Inventory inv = DefaultInventory();
  const SymbolTablePtr symbols = MakeSymbols(inv);
  Network gen = BuildGen(symbols, inv);
  auto atom = [&](std::string_view s) { return Atom(symbols, s); };
  auto seq = [&](std::string_view a, std::string_view b) {
    return Minimize(Concat(atom(a), atom(b)));
  };

  Network consonant = EmptyLanguage(symbols);
  for (const auto& c : inv.consonants) consonant = Union(consonant, atom(c));
  const Network onset = Minimize(
      Concat(Concat(atom(kOnsetOpen), regex::Optional(Minimize(consonant))),
             atom(kClose)));

  std::vector<ConstraintSpec> ranking;
  ranking.push_back(ConstraintSpec::Restriction(
      "HaveOns", atom(kNucleusOpen), onset, UniversalLanguage(symbols)));
  ranking.push_back(ConstraintSpec::ForbiddenPattern("NoCoda", atom(kCodaOpen)));
  ranking.push_back(
      ConstraintSpec::ForbiddenPattern("FillNuc", seq(kNucleusOpen, kClose)));
  ranking.push_back(ConstraintSpec::ForbiddenPattern(
      "Parse", atom(kUnparsedOpen), parse_budget));
  ranking.push_back(
      ConstraintSpec::ForbiddenPattern("FillOns", seq(kOnsetOpen, kClose)));
  return Grammar(std::move(gen), std::move(ranking));
}

Grammar GrammarFromScript(const regex::CompiledScript& script,
                          std::optional<int> budget_override,
                          std::string_view gen_name) {
  const auto& env = script.env;
  if (!env.Contains(gen_name)) {
    throw Error("script does not define '" + std::string(gen_name) + "'");
  }
  std::map<std::string, const regex::ConstraintEntry*> by_name;
  for (const auto& e : script.constraints) by_name[e.name] = &e;
  std::vector<std::string> order = script.ranking;
  if (order.empty()) {
    for (const auto& e : script.constraints) order.push_back(e.name);
  }
  std::vector<ConstraintSpec> ranking;
  for (const auto& name : order) {
    const auto& e = *by_name.at(name);
    int budget = e.budget.value_or(0);
    if (e.budget && budget_override) budget = *budget_override;
    ranking.push_back(ConstraintSpec::FromAst(e.name, e.expr, env, budget));
  }
  return Grammar(env.Get(gen_name), std::move(ranking));
}

Network Candidates(const Grammar& g, std::string_view input) {
  return Minimize(Compose(StringLanguage(g.symbols(), input), g.gen()));
}

Network Cascade(const Grammar& g, Network r, Mode mode) {
  for (const auto& c : g.ranking()) {
    for (const auto& m : c.Members()) r = Apply1(r, m, mode);
  }
  return r;
}

PathSet Evaluate(const Grammar& g, std::string_view input, Mode mode,
                 std::size_t limit) {
  return Outputs(Cascade(g, Candidates(g, input), mode), limit);
}

std::vector<Stage> Trace(const Grammar& g, std::string_view input, Mode mode,
                         std::size_t limit) {
  Network r = Candidates(g, input);
  std::vector<Stage> stages{{"GEN", Outputs(r, limit)}};
  for (const auto& c : g.ranking()) {
    const auto& members = c.Members();
    for (std::size_t k = 0; k < members.size(); ++k) {
      r = Apply1(r, members[k], mode);
      stages.push_back({MemberLabel(c, k), Outputs(r, limit)});
    }
  }
  return stages;
}

Network Merge(const Grammar& g, Mode mode) {
  return Cascade(g, g.gen(), mode);
}

bool OrderInsensitivityCheck(const Grammar& g, std::string_view input,
                             std::string_view constraint) {
  const auto index = g.Find(constraint);
  if (!index) {
    throw Error("no constraint named '" + std::string(constraint) + "'");
  }
  const ConstraintSpec& target = g.ranking()[*index];
  const std::vector<Network> family = ExpandFamily(target);

  Network prefix = Candidates(g, input);
  for (std::size_t i = 0; i < *index; ++i) {
    for (const auto& m : g.ranking()[i].Members()) {
      prefix = Apply1(prefix, m, Mode::kLenient);
    }
  }
  auto finish = [&](Network r) {
    for (std::size_t i = *index + 1; i < g.ranking().size(); ++i) {
      for (const auto& m : g.ranking()[i].Members()) {
        r = Apply1(r, m, Mode::kLenient);
      }
    }
    return Outputs(r, kDefaultApplyLimit);
  };

  // Walks the tree of member orders so that shared prefixes are composed
  // once.
  std::optional<PathSet> first;
  std::vector<bool> used(family.size(), false);
  bool same = true;
  auto walk = [&](auto&& self, const Network& r, std::size_t depth) -> void {
    if (!same) return;
    if (depth == family.size()) {
      PathSet out = finish(r);
      if (!first) {
        first = std::move(out);
      } else if (out != *first) {
        same = false;
      }
      return;
    }
    for (std::size_t k = 0; k < family.size(); ++k) {
      if (used[k]) continue;
      used[k] = true;
      self(self, Apply1(r, family[k], Mode::kLenient), depth + 1);
      used[k] = false;
    }
  };
  walk(walk, prefix, 0);
  return same;
}

std::vector<PathSet> EvaluateBatchSerial(const Grammar& g,
                                         const std::vector<std::string>& inputs,
                                         Mode mode) {
  std::vector<PathSet> out;
  out.reserve(inputs.size());
  for (const auto& w : inputs) out.push_back(Evaluate(g, w, mode));
  return out;
}

std::vector<PathSet> EvaluateBatch(const Grammar& g,
                                   const std::vector<std::string>& inputs,
                                   Mode mode) {
  std::vector<PathSet> out(inputs.size());
  const auto n = static_cast<std::ptrdiff_t>(inputs.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = Evaluate(g, inputs[i], mode);
    } catch (...) {
#pragma omp critical(otfst_batch_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace otfst::ot
