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

#include "otfst/ot/constraint.h"

#include <algorithm>

#include "otfst/regex/calculus.h"

namespace otfst::ot {

namespace {

using Strings = std::vector<std::vector<Label>>;

constexpr std::size_t kMaxContextStrings = 4096;

// All strings of a finite language, or nullopt if it is infinite or large.
std::optional<Strings> FiniteStrings(const Network& language) {
  const Network m = Minimize(language);
  if (IsEmpty(m)) return Strings{};
  if (!IsAcyclic(m)) return std::nullopt;
  Strings out;
  std::vector<Label> path;
  bool overflow = false;
  auto walk = [&](auto&& self, StateId s) -> void {
    if (overflow) return;
    if (m.IsFinal(s)) {
      if (out.size() == kMaxContextStrings) {
        overflow = true;
        return;
      }
      out.push_back(path);
    }
    for (const Arc& a : m.Arcs(s)) {
      path.push_back(a.upper);
      self(self, a.target);
      path.pop_back();
    }
  };
  walk(walk, m.Start());
  if (overflow) return std::nullopt;
  return out;
}

std::optional<std::vector<Label>> SingleString(const Network& language) {
  auto strings = FiniteStrings(language);
  if (!strings || strings->size() != 1 || strings->front().empty()) {
    return std::nullopt;
  }
  return strings->front();
}

bool MatchesAt(std::span<const Label> text, std::size_t pos,
               const std::vector<Label>& s) {
  return pos + s.size() <= text.size() &&
         std::equal(s.begin(), s.end(), text.begin() + pos);
}

bool EndsAt(std::span<const Label> text, std::size_t pos,
            const std::vector<Label>& s) {
  return s.size() <= pos && MatchesAt(text, pos - s.size(), s);
}

// nullopt: unrestricted (?*). Sets `ok` false if the context is neither
// unrestricted nor finite.
std::optional<Strings> ContextStrings(const Network& ctx, bool& ok) {
  if (Equivalent(ctx, UniversalLanguage(ctx.symbols()))) return std::nullopt;
  auto strings = FiniteStrings(ctx);
  if (!strings) {
    ok = false;
    return Strings{};
  }
  return strings;
}

}  // namespace

const char* KindName(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::kForbiddenPattern: return "forbidden-pattern";
    case ConstraintKind::kRestriction: return "restriction";
    case ConstraintKind::kOther: return "other";
  }
  return "?";
}

ConstraintSpec::ConstraintSpec(std::string name, ConstraintKind kind,
                               Network network)
    : name_(std::move(name)),
      kind_(kind),
      network_(std::move(network)),
      members_{network_} {}

ConstraintSpec ConstraintSpec::ForbiddenPattern(std::string name,
                                                const Network& pattern,
                                                int budget) {
  if (!pattern.IsLanguage()) throw Error("constraint pattern must be a language");
  ConstraintSpec c(std::move(name), ConstraintKind::kForbiddenPattern,
                   Minimize(Complement(regex::Contains(pattern))));
  c.pattern_ = Minimize(pattern);
  if (auto s = SingleString(pattern)) {
    c.pattern_strings_ = {*s};
    c.counter_ok_ = true;
  }
  return c.WithBudget(budget);
}

ConstraintSpec ConstraintSpec::Restriction(std::string name,
                                           const Network& body,
                                           const Network& left,
                                           const Network& right) {
  ConstraintSpec c(std::move(name), ConstraintKind::kRestriction,
                   regex::Restriction(body, left, right));
  if (auto s = SingleString(body)) {
    bool ok = true;
    c.pattern_strings_ = {*s};
    c.left_ = ContextStrings(left, ok);
    c.right_ = ContextStrings(right, ok);
    c.counter_ok_ = ok;
  }
  return c;
}

ConstraintSpec ConstraintSpec::Other(std::string name, Network language) {
  if (!language.IsLanguage()) throw Error("constraint must be a language");
  return ConstraintSpec(std::move(name), ConstraintKind::kOther,
                        Minimize(language));
}

ConstraintSpec ConstraintSpec::FromAst(std::string name,
                                       const regex::RegexAst& expr,
                                       const regex::Environment& env,
                                       int budget) {
  using regex::NodeKind;
  if (expr.kind == NodeKind::kComplement &&
      expr.children[0].kind == NodeKind::kContains) {
    return ForbiddenPattern(
        std::move(name), regex::Compile(expr.children[0].children[0], env),
        budget);
  }
  ConstraintSpec c = [&] {
    if (expr.kind == NodeKind::kRestriction) {
      return Restriction(std::move(name), regex::Compile(expr.children[0], env),
                         regex::Compile(expr.children[1], env),
                         regex::Compile(expr.children[2], env));
    }
    return Other(std::move(name), regex::Compile(expr, env));
  }();
  return c.WithBudget(budget);
}

ConstraintSpec ConstraintSpec::WithBudget(int budget) const {
  if (budget < 0) throw Error("budget must be non-negative");
  if (budget > 0 && kind_ != ConstraintKind::kForbiddenPattern) {
    throw Error("constraint '" + name_ + "' (" + KindName(kind_) +
                ") has no violation family; only ~$P constraints take a "
                "budget");
  }
  ConstraintSpec c = *this;
  c.budget_ = budget;
  c.members_.erase(c.members_.begin() + 1, c.members_.end());
  if (budget > 0) {
    const Network contains = regex::Contains(*pattern_);
    for (int k = 1; k <= budget; ++k) {
      c.members_.push_back(Minimize(Complement(regex::MoreThan(contains, k))));
    }
  }
  return c;
}

int ConstraintSpec::CountViolations(std::span<const Label> candidate) const {
  if (!counter_ok_) {
    throw Error("constraint '" + name_ + "' has no violation counter");
  }
  const auto& body = pattern_strings_.front();
  int count = 0;
  if (kind_ == ConstraintKind::kForbiddenPattern) {
    for (std::size_t i = 0; i + body.size() <= candidate.size();) {
      if (MatchesAt(candidate, i, body)) {
        ++count;
        i += body.size();
      } else {
        ++i;
      }
    }
    return count;
  }
  for (std::size_t i = 0; i + body.size() <= candidate.size(); ++i) {
    if (!MatchesAt(candidate, i, body)) continue;
    const bool left_ok =
        !left_ || std::any_of(left_->begin(), left_->end(), [&](const auto& l) {
          return EndsAt(candidate, i, l);
        });
    const std::size_t after = i + body.size();
    const bool right_ok =
        !right_ ||
        std::any_of(right_->begin(), right_->end(), [&](const auto& r) {
          return MatchesAt(candidate, after, r);
        });
    if (!left_ok || !right_ok) ++count;
  }
  return count;
}

std::vector<Network> ExpandFamily(const ConstraintSpec& c) {
  if (c.kind() != ConstraintKind::kForbiddenPattern) {
    throw Error("no violation family for " + std::string(KindName(c.kind())) +
                " constraint '" + c.name() + "'");
  }
  if (c.budget() < 1) {
    throw Error("family of '" + c.name() + "' needs budget >= 1");
  }
  return c.Members();
}

}  // namespace otfst::ot
