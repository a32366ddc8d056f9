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

#include "otfst/regex/parser.h"

#include <cctype>
#include <utility>
#include <vector>

namespace otfst::regex {

SyntaxError::SyntaxError(const std::string& message, SourceLocation location)
    : Error("line " + std::to_string(location.line) + ", column " +
            std::to_string(location.column) + ": " + message),
      location_(location) {}

namespace {

enum class Tok {
  kEnd,
  kWord,     // bare identifier or single character
  kQuoted,   // "..."
  kNumber,
  kLBracket, kRBracket, kLParen, kRParen,
  kBar, kAmp, kMinus,
  kStar, kPlus, kMoreThan,  // ^>
  kUpper, kLower,           // .u .l
  kTilde, kDollar, kSlash,
  kRestrict,                // =>
  kUnderscore,
  kArrow,                   // ->
  kEllipsis,                // ...
  kDotOpen, kDotClose,      // [. .]
  kOptArrow,                // (->)
  kCompose, kCross, kPriority, kLenient,
  kAny, kSemicolon,
};

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  SourceLocation location;
};

bool IsWordChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> Run() {
    std::vector<Token> out;
    for (;;) {
      SkipSpace();
      Token t;
      t.location = {line_, column_};
      if (pos_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      Lex(t);
      out.push_back(std::move(t));
    }
  }

 private:
  void SkipSpace() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') Advance(1);
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        Advance(1);
      } else {
        break;
      }
    }
  }

  void Advance(std::size_t n) {
    for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i) {
      if (text_[pos_++] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
    }
  }

  bool Match(std::string_view s) { return text_.substr(pos_, s.size()) == s; }

  void Lex(Token& t) {
    static constexpr std::pair<std::string_view, Tok> kFixed[] = {
        {"(->)", Tok::kOptArrow}, {".o.", Tok::kCompose},
        {".x.", Tok::kCross},     {".P.", Tok::kPriority},
        {".O.", Tok::kLenient},   {"...", Tok::kEllipsis},
        {"[.", Tok::kDotOpen},    {".]", Tok::kDotClose},
        {".u", Tok::kUpper},      {".l", Tok::kLower},
        {"^>", Tok::kMoreThan},   {"->", Tok::kArrow},
        {"=>", Tok::kRestrict},   {"[", Tok::kLBracket},
        {"]", Tok::kRBracket},    {"(", Tok::kLParen},
        {")", Tok::kRParen},      {"|", Tok::kBar},
        {"&", Tok::kAmp},         {"-", Tok::kMinus},
        {"*", Tok::kStar},        {"+", Tok::kPlus},
        {"~", Tok::kTilde},       {"$", Tok::kDollar},
        {"/", Tok::kSlash},       {"?", Tok::kAny},
        {";", Tok::kSemicolon},
    };
    const char c = text_[pos_];
    if (c == '"') {
      Advance(1);
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\n') break;
        t.text += text_[pos_];
        Advance(1);
      }
      if (pos_ >= text_.size() || text_[pos_] != '"') {
        throw SyntaxError("unterminated quoted symbol", t.location);
      }
      Advance(1);
      if (t.text.empty()) throw SyntaxError("empty quoted symbol", t.location);
      t.kind = Tok::kQuoted;
      return;
    }
    if (c == '%') {
      if (pos_ + 1 >= text_.size()) {
        throw SyntaxError("dangling escape", t.location);
      }
      t.kind = Tok::kQuoted;
      t.text = std::string(1, text_[pos_ + 1]);
      Advance(2);
      return;
    }
    if (c == '_' && (pos_ + 1 >= text_.size() || !IsWordChar(text_[pos_ + 1]))) {
      t.kind = Tok::kUnderscore;
      Advance(1);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        t.text += text_[pos_];
        Advance(1);
      }
      t.kind = Tok::kNumber;
      return;
    }
    if (IsWordChar(c)) {
      while (pos_ < text_.size() && IsWordChar(text_[pos_])) {
        t.text += text_[pos_];
        Advance(1);
      }
      t.kind = Tok::kWord;
      return;
    }
    for (const auto& [spelling, kind] : kFixed) {
      if (Match(spelling)) {
        t.kind = kind;
        t.text = spelling;
        Advance(spelling.size());
        return;
      }
    }
    throw SyntaxError(std::string("unknown operator '") + c + "'", t.location);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Script ParseScript() {
    Script script;
    while (Peek().kind != Tok::kEnd) {
      const Token& head = Peek();
      if (head.kind != Tok::kWord) {
        throw SyntaxError("expected a statement keyword", head.location);
      }
      if (head.text == "alphabet") {
        Next();
        while (Peek().kind != Tok::kSemicolon) {
          const Token& t = Next();
          if (t.kind == Tok::kWord || t.kind == Tok::kQuoted ||
              t.kind == Tok::kNumber) {
            script.alphabet.push_back(t.text);
          } else {
            throw SyntaxError("expected a symbol in alphabet statement",
                              t.location);
          }
        }
        Next();
      } else if (head.text == "define") {
        const SourceLocation loc = Next().location;
        std::string name = ExpectName();
        RegexAst expr = ParseExpr();
        Expect(Tok::kSemicolon, "';'");
        script.statements.emplace_back(
            Definition{std::move(name), std::move(expr), loc});
      } else if (head.text == "constraint") {
        const SourceLocation loc = Next().location;
        std::string name = ExpectName();
        stop_at_budget_ = true;
        RegexAst expr = ParseExpr();
        stop_at_budget_ = false;
        std::optional<int> budget;
        if (AtBudget()) {
          Next();
          const Token& n = Expect(Tok::kNumber, "a budget count");
          budget = std::stoi(n.text);
        }
        Expect(Tok::kSemicolon, "';'");
        script.statements.emplace_back(
            ConstraintDecl{std::move(name), std::move(expr), budget, loc});
      } else if (head.text == "rank") {
        const SourceLocation loc = Next().location;
        RankDecl rank{{}, loc};
        while (Peek().kind != Tok::kSemicolon) rank.names.push_back(ExpectName());
        Next();
        if (rank.names.empty()) {
          throw SyntaxError("rank statement names no constraints", loc);
        }
        script.statements.emplace_back(std::move(rank));
      } else {
        throw SyntaxError("unknown statement '" + head.text + "'",
                          head.location);
      }
    }
    return script;
  }

  RegexAst ParseStandalone() {
    RegexAst e = ParseExpr();
    if (Peek().kind != Tok::kEnd) {
      throw SyntaxError("unexpected trailing input", Peek().location);
    }
    return e;
  }

 private:
  const Token& Peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& Next() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  const Token& Expect(Tok kind, const char* what) {
    if (Peek().kind != kind) {
      throw SyntaxError(std::string("expected ") + what, Peek().location);
    }
    return Next();
  }
  std::string ExpectName() {
    const Token& t = Peek();
    if (t.kind != Tok::kWord) throw SyntaxError("expected a name", t.location);
    return Next().text;
  }
  bool AtBudget() const {
    return Peek().kind == Tok::kWord && Peek().text == "budget" &&
           Peek(1).kind == Tok::kNumber;
  }

  bool StartsOperand() const {
    switch (Peek().kind) {
      case Tok::kWord:
        return !(stop_at_budget_ && AtBudget());
      case Tok::kQuoted:
      case Tok::kNumber:
      case Tok::kLBracket:
      case Tok::kLParen:
      case Tok::kTilde:
      case Tok::kDollar:
      case Tok::kAny:
        return true;
      default:
        return false;
    }
  }

  static RegexAst At(RegexAst node, SourceLocation loc) {
    node.location = loc;
    return node;
  }

  RegexAst ParseExpr() {
    RegexAst left = ParseReplace();
    for (;;) {
      NodeKind kind;
      switch (Peek().kind) {
        case Tok::kCompose: kind = NodeKind::kCompose; break;
        case Tok::kCross: kind = NodeKind::kCross; break;
        case Tok::kPriority: kind = NodeKind::kPriorityUnion; break;
        case Tok::kLenient: kind = NodeKind::kLenientCompose; break;
        default: return left;
      }
      const SourceLocation loc = Next().location;
      RegexAst right = ParseReplace();
      left = At(RegexAst::Node(kind, {std::move(left), std::move(right)}), loc);
    }
  }

  RegexAst ParseReplace() {
    if (Peek().kind == Tok::kDotOpen) {
      const SourceLocation loc = Next().location;
      Expect(Tok::kDotClose, "'.]'");
      Expect(Tok::kOptArrow, "'(->)'");
      RegexAst inserts = ParseUnion();
      return At(RegexAst::Node(NodeKind::kOptionalInsert, {std::move(inserts)}),
                loc);
    }
    RegexAst left = ParseUnion();
    if (Peek().kind == Tok::kArrow) {
      const SourceLocation loc = Next().location;
      RegexAst prefixes = ParseUnion();
      if (Peek().kind != Tok::kEllipsis) {
        throw SyntaxError(
            "only markup replacement 'A -> B ... C' is supported", loc);
      }
      Next();
      RegexAst suffix = ParseUnion();
      return At(RegexAst::Node(NodeKind::kMarkupReplace,
                               {std::move(left), std::move(prefixes),
                                std::move(suffix)}),
                loc);
    }
    if (Peek().kind == Tok::kRestrict) {
      const SourceLocation loc = Next().location;
      RegexAst lctx = StartsOperand() ? ParseUnion() : Universal(loc);
      Expect(Tok::kUnderscore, "'_' in restriction context");
      RegexAst rctx = StartsOperand() ? ParseUnion() : Universal(loc);
      return At(RegexAst::Node(NodeKind::kRestriction,
                               {std::move(left), std::move(lctx),
                                std::move(rctx)}),
                loc);
    }
    return left;
  }

  static RegexAst Universal(SourceLocation loc) {
    return At(RegexAst::Node(NodeKind::kStar,
                             {At(RegexAst::Leaf(NodeKind::kAny), loc)}),
              loc);
  }

  RegexAst ParseUnion() {
    RegexAst left = ParseConcat();
    for (;;) {
      NodeKind kind;
      switch (Peek().kind) {
        case Tok::kBar: kind = NodeKind::kUnion; break;
        case Tok::kAmp: kind = NodeKind::kIntersect; break;
        case Tok::kMinus: kind = NodeKind::kSubtract; break;
        default: return left;
      }
      const SourceLocation loc = Next().location;
      RegexAst right = ParseConcat();
      left = At(RegexAst::Node(kind, {std::move(left), std::move(right)}), loc);
    }
  }

  RegexAst ParseConcat() {
    if (!StartsOperand()) {
      throw SyntaxError("expected an expression", Peek().location);
    }
    const SourceLocation loc = Peek().location;
    std::vector<RegexAst> parts;
    while (StartsOperand()) parts.push_back(ParseIgnore());
    if (parts.size() == 1) return std::move(parts.front());
    return At(RegexAst::Node(NodeKind::kConcat, std::move(parts)), loc);
  }

  RegexAst ParseIgnore() {
    RegexAst left = ParsePrefix();
    while (Peek().kind == Tok::kSlash) {
      const SourceLocation loc = Next().location;
      RegexAst right = ParsePrefix();
      left = At(RegexAst::Node(NodeKind::kIgnore,
                               {std::move(left), std::move(right)}),
                loc);
    }
    return left;
  }

  RegexAst ParsePrefix() {
    if (Peek().kind == Tok::kTilde || Peek().kind == Tok::kDollar) {
      const Token& t = Next();
      const NodeKind kind =
          t.kind == Tok::kTilde ? NodeKind::kComplement : NodeKind::kContains;
      const SourceLocation loc = t.location;
      return At(RegexAst::Node(kind, {ParsePrefix()}), loc);
    }
    return ParsePostfix();
  }

  RegexAst ParsePostfix() {
    RegexAst node = ParsePrimary();
    for (;;) {
      const SourceLocation loc = Peek().location;
      switch (Peek().kind) {
        case Tok::kStar:
          Next();
          node = At(RegexAst::Node(NodeKind::kStar, {std::move(node)}), loc);
          break;
        case Tok::kPlus:
          Next();
          node = At(RegexAst::Node(NodeKind::kPlus, {std::move(node)}), loc);
          break;
        case Tok::kMoreThan: {
          Next();
          const Token& n = Expect(Tok::kNumber, "a count after '^>'");
          RegexAst m = RegexAst::Node(NodeKind::kMoreThan, {std::move(node)});
          m.count = std::stoi(n.text);
          node = At(std::move(m), loc);
          break;
        }
        case Tok::kUpper:
        case Tok::kLower: {
          const bool upper = Next().kind == Tok::kUpper;
          RegexAst p = RegexAst::Node(NodeKind::kProject, {std::move(node)});
          p.side = upper ? Side::kUpper : Side::kLower;
          node = At(std::move(p), loc);
          break;
        }
        default:
          return node;
      }
    }
  }

  RegexAst ParsePrimary() {
    const Token& t = Peek();
    const SourceLocation loc = t.location;
    switch (t.kind) {
      case Tok::kQuoted:
        return At(RegexAst::Leaf(NodeKind::kSymbol, Next().text), loc);
      case Tok::kAny:
        Next();
        return At(RegexAst::Leaf(NodeKind::kAny), loc);
      case Tok::kNumber: {
        std::string text = Next().text;
        if (text == "0") return At(RegexAst::Leaf(NodeKind::kEpsilon), loc);
        if (text.size() == 1) {
          return At(RegexAst::Leaf(NodeKind::kSymbol, text), loc);
        }
        throw SyntaxError("multi-digit symbol '" + text + "' must be quoted",
                          loc);
      }
      case Tok::kWord:
        // Resolved to a definition or a single-character symbol at compile
        // time.
        return At(RegexAst::Leaf(NodeKind::kRef, Next().text), loc);
      case Tok::kLBracket: {
        Next();
        if (Peek().kind == Tok::kRBracket) {
          Next();
          return At(RegexAst::Leaf(NodeKind::kEpsilon), loc);
        }
        RegexAst inner = ParseExpr();
        Expect(Tok::kRBracket, "']'");
        return inner;
      }
      case Tok::kLParen: {
        Next();
        RegexAst inner = ParseExpr();
        Expect(Tok::kRParen, "')'");
        return At(RegexAst::Node(NodeKind::kOption, {std::move(inner)}), loc);
      }
      default:
        throw SyntaxError("expected an expression", loc);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  bool stop_at_budget_ = false;
};

}  // namespace

Script ParseScript(std::string_view text) {
  return Parser(Lexer(text).Run()).ParseScript();
}

RegexAst ParseExpression(std::string_view text) {
  return Parser(Lexer(text).Run()).ParseStandalone();
}

}  // namespace otfst::regex
