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

#include "otfst/regex/compiler.h"

#include <memory>
#include <set>

#include "otfst/regex/calculus.h"
#include "otfst/regex/parser.h"

namespace otfst::regex {

CompileError::CompileError(const std::string& message, SourceLocation location)
    : Error("line " + std::to_string(location.line) + ", column " +
            std::to_string(location.column) + ": " + message),
      location_(location) {}

Environment::Environment(SymbolTablePtr symbols)
    : symbols_(std::move(symbols)) {}

void Environment::Define(const std::string& name, Network net) {
  if (net.symbols() != symbols_) {
    throw Error("definition '" + name + "' uses a foreign symbol table");
  }
  if (!networks_.emplace(name, std::move(net)).second) {
    throw Error("redefinition of '" + name + "'");
  }
  order_.push_back(name);
}

bool Environment::Contains(std::string_view name) const {
  return networks_.find(name) != networks_.end();
}

const Network& Environment::Get(std::string_view name) const {
  auto it = networks_.find(name);
  if (it == networks_.end()) {
    throw Error("undefined name '" + std::string(name) + "'");
  }
  return it->second;
}

namespace {

bool IsSingleCharacter(const std::string& s) { return s.size() == 1; }

void CollectSymbols(const RegexAst& ast, const std::set<std::string>& defined,
                    SymbolTable& symbols) {
  if (ast.kind == NodeKind::kSymbol) {
    symbols.AddSymbol(ast.text);
  } else if (ast.kind == NodeKind::kRef && !defined.count(ast.text)) {
    if (!IsSingleCharacter(ast.text)) {
      throw CompileError("undefined name '" + ast.text + "'", ast.location);
    }
    symbols.AddSymbol(ast.text);
  }
  for (const auto& c : ast.children) CollectSymbols(c, defined, symbols);
}

Network Binary(NodeKind kind, const Network& a, const Network& b) {
  switch (kind) {
    case NodeKind::kUnion:
      return Minimize(Union(a, b));
    case NodeKind::kIntersect:
      return Minimize(Intersect(a, b));
    case NodeKind::kSubtract:
      return Minimize(Subtract(a, b));
    case NodeKind::kIgnore:
      return Ignore(a, b);
    case NodeKind::kCompose:
      return Minimize(Compose(a, b));
    case NodeKind::kCross:
      return Minimize(CrossProduct(a, b));
    case NodeKind::kPriorityUnion:
      return PriorityUnion(a, b);
    case NodeKind::kLenientCompose:
      return LenientCompose(a, b);
    default:
      throw Error(std::string("not a binary operator: ") + KindName(kind));
  }
}

Network CompileNode(const RegexAst& ast, const Environment& env) {
  const auto& symbols = env.symbols();
  std::vector<Network> kids;
  kids.reserve(ast.children.size());
  for (const auto& c : ast.children) kids.push_back(CompileNode(c, env));
  try {
    switch (ast.kind) {
      case NodeKind::kSymbol: {
        const auto id = symbols->Find(ast.text);
        if (!id) {
          throw CompileError("symbol '" + ast.text + "' is not in the alphabet",
                             ast.location);
        }
        return Atom(symbols, *id);
      }
      case NodeKind::kAny:
        return AnySymbol(symbols);
      case NodeKind::kEpsilon:
        return EpsilonLanguage(symbols);
      case NodeKind::kRef:
        if (env.Contains(ast.text)) return env.Get(ast.text);
        if (IsSingleCharacter(ast.text)) {
          if (auto id = symbols->Find(ast.text)) return Atom(symbols, *id);
        }
        throw CompileError("undefined name '" + ast.text + "'", ast.location);
      case NodeKind::kConcat: {
        Network acc = kids.front();
        for (std::size_t i = 1; i < kids.size(); ++i) {
          acc = Minimize(Concat(acc, kids[i]));
        }
        return acc;
      }
      case NodeKind::kOption:
        return Optional(kids[0]);
      case NodeKind::kStar:
        return Minimize(Star(kids[0]));
      case NodeKind::kPlus:
        return Minimize(Plus(kids[0]));
      case NodeKind::kMoreThan:
        return MoreThan(kids[0], ast.count);
      case NodeKind::kComplement:
        return Minimize(Complement(kids[0]));
      case NodeKind::kContains:
        return Contains(kids[0]);
      case NodeKind::kRestriction:
        return Restriction(kids[0], kids[1], kids[2]);
      case NodeKind::kMarkupReplace:
        return MarkupReplace(kids[0], kids[1], kids[2]);
      case NodeKind::kOptionalInsert:
        return OptionalInsert(kids[0]);
      case NodeKind::kProject:
        return Minimize(Project(kids[0], ast.side));
      default:
        return Binary(ast.kind, kids[0], kids[1]);
    }
  } catch (const CompileError&) {
    throw;
  } catch (const Error& e) {
    throw CompileError(std::string(KindName(ast.kind)) + ": " + e.what(),
                       ast.location);
  }
}

}  // namespace

RegexAst Resolve(const RegexAst& ast, const Environment& env) {
  RegexAst out = ast;
  if (out.kind == NodeKind::kRef && !env.Contains(out.text)) {
    if (!IsSingleCharacter(out.text)) {
      throw CompileError("undefined name '" + out.text + "'", out.location);
    }
    out.kind = NodeKind::kSymbol;
  }
  for (auto& c : out.children) c = Resolve(c, env);
  return out;
}

Network Compile(const RegexAst& ast, const Environment& env) {
  return CompileNode(Resolve(ast, env), env);
}

CompiledScript CompileScript(const Script& script) {
  auto table = std::make_shared<SymbolTable>();
  for (const auto& s : script.alphabet) table->AddSymbol(s);

  std::set<std::string> defined;
  std::set<std::string> constraint_names;
  const RankDecl* rank = nullptr;
  for (const auto& st : script.statements) {
    if (const auto* d = std::get_if<Definition>(&st)) {
      CollectSymbols(d->expr, defined, *table);
      if (!defined.insert(d->name).second) {
        throw CompileError("redefinition of '" + d->name + "'", d->location);
      }
    } else if (const auto* c = std::get_if<ConstraintDecl>(&st)) {
      CollectSymbols(c->expr, defined, *table);
      if (!defined.insert(c->name).second) {
        throw CompileError("redefinition of '" + c->name + "'", c->location);
      }
      if (c->budget && *c->budget < 0) {
        throw CompileError("budget must be non-negative", c->location);
      }
      constraint_names.insert(c->name);
    } else {
      const auto& r = std::get<RankDecl>(st);
      if (rank) throw CompileError("duplicate rank statement", r.location);
      rank = &r;
    }
  }

  CompiledScript out{Environment(table), {}, {}};
  for (const auto& st : script.statements) {
    if (const auto* d = std::get_if<Definition>(&st)) {
      out.env.Define(d->name, Compile(d->expr, out.env));
    } else if (const auto* c = std::get_if<ConstraintDecl>(&st)) {
      RegexAst resolved = Resolve(c->expr, out.env);
      Network net = CompileNode(resolved, out.env);
      if (!net.IsLanguage()) {
        throw CompileError("constraint '" + c->name + "' must be a language",
                           c->location);
      }
      out.env.Define(c->name, std::move(net));
      out.constraints.push_back({c->name, std::move(resolved), c->budget});
    }
  }
  if (rank) {
    std::set<std::string> seen;
    for (const auto& name : rank->names) {
      if (!constraint_names.count(name)) {
        throw CompileError("rank names unknown constraint '" + name + "'",
                           rank->location);
      }
      if (!seen.insert(name).second) {
        throw CompileError("constraint '" + name + "' ranked twice",
                           rank->location);
      }
    }
    out.ranking = rank->names;
  }
  return out;
}

CompiledScript CompileScriptText(std::string_view text) {
  return CompileScript(ParseScript(text));
}

}  // namespace otfst::regex
