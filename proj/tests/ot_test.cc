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

#include <gtest/gtest.h>

#include <algorithm>
#include <memory>

#include "gen_oracle.h"
#include "otfst/ot/gen.h"
#include "otfst/ot/grammar.h"
#include "otfst/ot/oracle.h"
#include "test_util.h"

namespace otfst::ot {
namespace {

using testing::AsSet;
using Strings = std::set<std::string>;

const Strings kGenA = {
    "N[a]",       "N[a]N[]",    "N[a]D[]",    "N[]N[a]",    "N[]N[a]N[]",
    "N[]N[a]D[]", "N[]X[a]",    "N[]X[a]N[]", "N[]X[a]D[]", "O[]N[a]",
    "O[]N[a]N[]", "O[]N[a]D[]", "O[]X[a]N[]", "X[a]N[]",
};

// Words over `letters` of length 1..max_len.
std::vector<std::string> Words(std::string_view letters, int max_len) {
  std::vector<std::string> out;
  std::vector<std::string> frontier{""};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const auto& w : frontier) {
      for (char c : letters) next.push_back(w + c);
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

std::string StripBrackets(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c != '[' && c != ']' && !(c >= 'A' && c <= 'Z')) out += c;
  }
  return out;
}

class OtTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    grammar_ = new Grammar(DefaultGrammar());
  }
  static void TearDownTestSuite() {
    delete grammar_;
    grammar_ = nullptr;
  }
  static const Grammar& G() { return *grammar_; }

  static Grammar* grammar_;
};

Grammar* OtTest::grammar_ = nullptr;

TEST_F(OtTest, GenAppliedToA) {
  EXPECT_EQ(AsSet(Apply(G().gen(), "a", Direction::kDown)), kGenA);
  EXPECT_EQ(CountPaths(Candidates(G(), "a")), 14);
}

TEST_F(OtTest, GenMatchesBruteForce) {
  for (const auto& w : Words("pabne", 3)) {
    EXPECT_EQ(AsSet(Apply(G().gen(), w, Direction::kDown)),
              testing::BruteForceGen(w))
        << w;
  }
  for (std::string w : {"", "abra", "pppp", "aeio", "bebop"}) {
    EXPECT_EQ(AsSet(Apply(G().gen(), w, Direction::kDown, 10000000)),
              testing::BruteForceGen(w))
        << w;
  }
}

TEST_F(OtTest, CandidateCountsMatchDefinition) {
  for (std::string w : {"a", "b", "ab", "aba", "abra", "panama", "america",
                        "abracadabra"}) {
    const Network c = Candidates(G(), w);
    EXPECT_EQ(CountPaths(c), testing::GenCandidateCount(w)) << w;
    if (w.size() <= 4) {
      EXPECT_EQ(CountPaths(c),
                Apply(G().gen(), w, Direction::kDown, 10000000).size());
    }
  }
  EXPECT_EQ(testing::GenCandidateCount("abracadabra"), 1672335136);
}

TEST_F(OtTest, GenShape) {
  const GenParts p = BuildGenParts(G().symbols(), DefaultInventory());
  EXPECT_TRUE(Equivalent(p.gen, G().gen()));
  EXPECT_TRUE(Equivalent(Project(G().gen(), Side::kUpper), p.input));
  EXPECT_TRUE(IsEmpty(
      Subtract(Project(G().gen(), Side::kLower), p.syllable_structure)));
  EXPECT_TRUE(Accepts(p.syllable_structure, "O[]X[a]N[]"));
  EXPECT_FALSE(Accepts(p.syllable_structure, "X[a]"));
  EXPECT_EQ(G().gen().NumStates(), 22);
  EXPECT_EQ(G().gen().NumArcs(), 229);
}

TEST(GenTest, RejectsBadInventories) {
  EXPECT_THROW(BuildGen(Inventory{{"p", "a"}, {"a"}}), Error);
  EXPECT_THROW(BuildGen(Inventory{{}, {"a"}}), Error);
  EXPECT_THROW(BuildGen(Inventory{{"p"}, {}}), Error);
  EXPECT_THROW(BuildGen(Inventory{{"p", "]"}, {"a"}}), Error);
  const Network g = BuildGen(Inventory{{"t", "k"}, {"i"}});
  EXPECT_EQ(AsSet(Apply(g, "i", Direction::kDown)).size(), 14u);
}

TEST(ConstraintTest, FamilyMembersCountViolations) {
  const auto st =
      std::make_shared<SymbolTable>(SymbolTable{"a", "X[", "]"});
  const auto c = ConstraintSpec::ForbiddenPattern("Parse", Atom(st, "X["), 3);
  const auto family = ExpandFamily(c);
  ASSERT_EQ(family.size(), 4u);
  EXPECT_TRUE(Equivalent(family[0], c.network()));
  const Label x = st->Id("X[");
  for (const auto& w : testing::AllWords(st->Alphabet(), 6)) {
    const auto n = std::count(w.begin(), w.end(), x);
    for (int k = 0; k <= 3; ++k) {
      EXPECT_EQ(Accepts(family[k], w), n <= k) << st->Render(w);
    }
    EXPECT_EQ(c.CountViolations(w), n);
  }
  for (int k = 0; k < 3; ++k) {
    EXPECT_TRUE(IsEmpty(Subtract(family[k], family[k + 1])));
    EXPECT_FALSE(IsEmpty(Subtract(family[k + 1], family[k])));
  }
}

TEST(ConstraintTest, BudgetOneFamily) {
  const auto st = std::make_shared<SymbolTable>(SymbolTable{"a", "X[", "]"});
  const auto f = ExpandFamily(
      ConstraintSpec::ForbiddenPattern("Parse", Atom(st, "X["), 1));
  ASSERT_EQ(f.size(), 2u);
  EXPECT_FALSE(Accepts(f[0], "X[a]"));
  EXPECT_TRUE(Accepts(f[1], "X[a]"));
  EXPECT_THROW(ExpandFamily(
                   ConstraintSpec::ForbiddenPattern("P", Atom(st, "X["), 0)),
               Error);
}

TEST_F(OtTest, RestrictionFamiliesAreRefused) {
  const auto& have_ons = G().ranking()[0];
  EXPECT_EQ(have_ons.kind(), ConstraintKind::kRestriction);
  EXPECT_THROW(ExpandFamily(have_ons), Error);
  EXPECT_THROW(have_ons.WithBudget(1), Error);
  EXPECT_NO_THROW(have_ons.WithBudget(0));
}

TEST_F(OtTest, ViolationCounters) {
  const auto& st = *G().symbols();
  auto count = [&](std::size_t i, std::string_view s) {
    return G().ranking()[i].CountViolations(st.Tokenize(s));
  };
  EXPECT_EQ(count(0, "O[]N[a]"), 0);
  EXPECT_EQ(count(0, "N[a]"), 1);
  EXPECT_EQ(count(0, "O[]X[b]N[a]N[]"), 2);
  EXPECT_EQ(count(0, "O[b]N[a]D[]O[p]N[a]"), 0);
  EXPECT_EQ(count(1, "N[a]D[]D[b]"), 2);
  EXPECT_EQ(count(2, "N[]N[a]N[]"), 2);
  EXPECT_EQ(count(3, "X[b]X[e]O[b]N[o]X[p]"), 3);
  EXPECT_EQ(count(4, "O[]N[a]O[]N[]"), 2);
}

TEST_F(OtTest, LenientCascadeOnA) {
  EXPECT_EQ(AsSet(Evaluate(G(), "a")), Strings{"O[]N[a]"});
  const auto trace = Trace(G(), "a");
  ASSERT_EQ(trace.size(), 1u + 4u + 6u);
  EXPECT_EQ(trace[0].label, "GEN");
  EXPECT_EQ(AsSet(trace[0].outputs), kGenA);
  EXPECT_EQ(trace[1].label, "HaveOns");
  EXPECT_EQ(AsSet(trace[1].outputs), (Strings{"O[]N[a]", "O[]N[a]D[]"}));
  EXPECT_EQ(trace[2].label, "NoCoda");
  EXPECT_EQ(AsSet(trace[2].outputs), Strings{"O[]N[a]"});
  EXPECT_EQ(trace[5].label, "Parse1");
  EXPECT_EQ(trace.back().label, "FillOns");
  EXPECT_EQ(AsSet(trace.back().outputs), Strings{"O[]N[a]"});
}

TEST_F(OtTest, MercilessCascade) {
  EXPECT_EQ(AsSet(Evaluate(G(), "panama", Mode::kMerciless)),
            Strings{"O[p]N[a]O[n]N[a]O[m]N[a]"});
  EXPECT_TRUE(Evaluate(G(), "america", Mode::kMerciless).empty());
  EXPECT_TRUE(Evaluate(G(), "a", Mode::kMerciless).empty());
  for (const auto& w : Words("pame", 3)) {
    const auto lenient = AsSet(Evaluate(G(), w));
    const auto merciless = AsSet(Evaluate(G(), w, Mode::kMerciless));
    EXPECT_FALSE(lenient.empty()) << w;
    EXPECT_TRUE(std::includes(lenient.begin(), lenient.end(),
                              merciless.begin(), merciless.end()))
        << w;
  }
}

TEST_F(OtTest, GradientParse) {
  const Grammar strict = G().WithBudget("Parse", 0);
  EXPECT_EQ(AsSet(Evaluate(strict, "bebop")),
            (Strings{"O[b]N[e]O[b]N[o]X[p]", "O[b]N[e]X[b]X[o]X[p]",
                     "X[b]X[e]O[b]N[o]X[p]"}));
  for (int budget : {1, 2, 5}) {
    EXPECT_EQ(AsSet(Evaluate(G().WithBudget("Parse", budget), "bebop")),
              Strings{"O[b]N[e]O[b]N[o]X[p]"})
        << budget;
  }
  EXPECT_EQ(AsSet(Evaluate(G(), "abracadabra")),
            Strings{"O[]N[a]X[b]O[r]N[a]O[c]N[a]O[d]N[a]X[b]O[r]N[a]"});
}

TEST_F(OtTest, OutputsContainTheInput) {
  for (const auto& w : Words("pabe", 4)) {
    const auto outputs = Evaluate(G(), w);
    ASSERT_FALSE(outputs.empty()) << w;
    for (const auto& s : outputs.outputs) {
      EXPECT_EQ(StripBrackets(s), w) << s;
      EXPECT_TRUE(testing::BruteForceGen(w).count(s)) << s;
    }
  }
}

TEST_F(OtTest, MergeAgreesWithCascade) {
  const Grammar g = G().WithBudget("Parse", 2);
  const Network merged = Merge(g);
  for (const auto& w : Words("pame", 3)) {
    EXPECT_EQ(Apply(merged, w, Direction::kDown), Evaluate(g, w)) << w;
  }
  EXPECT_EQ(Apply(merged, "bebop", Direction::kDown), Evaluate(g, "bebop"));
  EXPECT_TRUE(Equivalent(Project(merged, Side::kUpper),
                         Project(g.gen(), Side::kUpper)));
  EXPECT_TRUE(Equivalent(Merge(g.WithRanking({})), g.gen()));
  // Merged and per-input cascades agree as relations on a single input.
  const Network word = StringLanguage(g.symbols(), "a");
  EXPECT_TRUE(Equivalent(Compose(word, merged),
                         Cascade(g, Candidates(g, "a"), Mode::kLenient)));
}

TEST_F(OtTest, MergedAbracadabra) {
  EXPECT_EQ(AsSet(Apply(Merge(G()), "abracadabra", Direction::kDown)),
            Strings{"O[]N[a]X[b]O[r]N[a]O[c]N[a]O[d]N[a]X[b]O[r]N[a]"});
}

TEST_F(OtTest, OracleOnA) {
  const Tableau t = OracleEvaluate(G(), "a");
  EXPECT_EQ(t.rows.size(), 14u);
  EXPECT_EQ(t.constraints, (std::vector<std::string>{"HaveOns", "NoCoda",
                                                     "FillNuc", "Parse",
                                                     "FillOns"}));
  EXPECT_EQ(t.Winners(), std::vector<std::string>{"O[]N[a]"});
  EXPECT_EQ(t.rows.front().violations, (std::vector<int>{0, 0, 0, 0, 1}));
  Strings all;
  for (const auto& r : t.rows) {
    all.insert(r.candidate);
    EXPECT_EQ(r.winner, !r.fatal.has_value());
  }
  EXPECT_EQ(all, kGenA);
  const auto& coda = *std::find_if(t.rows.begin(), t.rows.end(), [](auto& r) {
    return r.candidate == "O[]N[a]D[]";
  });
  EXPECT_EQ(coda.fatal, 1u);
}

TEST_F(OtTest, OracleWinners) {
  EXPECT_EQ(OracleEvaluate(G(), "bebop").Winners(),
            std::vector<std::string>{"O[b]N[e]O[b]N[o]X[p]"});
  EXPECT_THROW(OracleEvaluate(G(), "abracadabra"), Error);
  EXPECT_THROW(OracleEvaluate(G(), "bebop", 100), Error);
}

TEST_F(OtTest, CascadeMatchesOracleOnShortInputs) {
  const Grammar g = G().WithUniformBudget(6);
  for (const auto& w : Words("pabe", 3)) {
    EXPECT_EQ(Evaluate(g, w).outputs, OracleEvaluate(g, w).Winners()) << w;
  }
}

TEST_F(OtTest, OrderInsensitivity) {
  EXPECT_TRUE(OrderInsensitivityCheck(G().WithBudget("Parse", 2), "bebop"));
  EXPECT_TRUE(OrderInsensitivityCheck(G().WithBudget("Parse", 2), "pa"));
  EXPECT_THROW(OrderInsensitivityCheck(G().WithBudget("Parse", 0), "pa"),
               Error);
  EXPECT_THROW(OrderInsensitivityCheck(G(), "pa", "HaveOns"), Error);
  EXPECT_THROW(OrderInsensitivityCheck(G(), "pa", "Nope"), Error);
}

TEST_F(OtTest, BatchMatchesSerial) {
  const auto words = Words("pab", 3);
  EXPECT_EQ(EvaluateBatch(G(), words), EvaluateBatchSerial(G(), words));
  const auto parallel = OracleBatch(G(), words);
  const auto serial = OracleBatchSerial(G(), words);
  ASSERT_EQ(parallel.size(), serial.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    EXPECT_EQ(parallel[i].Winners(), serial[i].Winners());
    EXPECT_EQ(parallel[i].rows.size(), serial[i].rows.size());
  }
  EXPECT_THROW(EvaluateBatch(G(), {"pa", "pQ"}), Error);
}

TEST(ScriptGrammarTest, DefaultScript) {
  const auto cs = regex::CompileScriptText(DefaultScript());
  const Grammar g = GrammarFromScript(cs);
  ASSERT_EQ(g.ranking().size(), 5u);
  EXPECT_EQ(g.ranking()[3].name(), "Parse");
  EXPECT_EQ(g.ranking()[3].budget(), 5);
  EXPECT_EQ(g.ranking()[0].kind(), ConstraintKind::kRestriction);
  EXPECT_EQ(g.ranking()[1].kind(), ConstraintKind::kForbiddenPattern);
  EXPECT_EQ(AsSet(Evaluate(g, "bebop")), Strings{"O[b]N[e]O[b]N[o]X[p]"});
  const Grammar zero = GrammarFromScript(cs, 0);
  EXPECT_EQ(zero.ranking()[3].budget(), 0);
  EXPECT_EQ(Evaluate(zero, "bebop").size(), 3u);
  EXPECT_EQ(OracleEvaluate(g, "a").Winners(),
            std::vector<std::string>{"O[]N[a]"});
}

TEST(ScriptGrammarTest, ErrorsAndDefaults) {
  const std::string base =
      "define C [p] ; define V [a] ;\n"
      "define GEN [C | V]* .o. [. .] (->) [\"O[\" \"]\"] ;\n";
  EXPECT_THROW(GrammarFromScript(regex::CompileScriptText(
                   base + "constraint H \"N[\" => \"O[\" _ budget 1 ;")),
               Error);
  EXPECT_THROW(GrammarFromScript(regex::CompileScriptText("define A a ;")),
               Error);
  // Without a rank statement constraints keep declaration order.
  const Grammar g = GrammarFromScript(regex::CompileScriptText(
      base + "constraint B ~$\"O[\" ; constraint A ~$a ;"));
  ASSERT_EQ(g.ranking().size(), 2u);
  EXPECT_EQ(g.ranking()[0].name(), "B");
  EXPECT_EQ(g.ranking()[1].kind(), ConstraintKind::kForbiddenPattern);
}

TEST_F(OtTest, TableauFormatting) {
  const std::string text = FormatTableau(OracleEvaluate(G(), "a"));
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  ASSERT_EQ(lines.size(), 16u);
  EXPECT_EQ(lines[0].rfind("/a/", 0), 0u);
  EXPECT_EQ(lines[2].rfind("-> O[]N[a] ", 0), 0u);
  EXPECT_EQ(std::count_if(lines.begin(), lines.end(),
                          [](const auto& l) { return l.rfind("->", 0) == 0; }),
            1);
  EXPECT_NE(text.find("*!"), std::string::npos);
  for (const auto& l : lines) EXPECT_NE(l.back(), ' ');
}

}  // namespace
}  // namespace otfst::ot
