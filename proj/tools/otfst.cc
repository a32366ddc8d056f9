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
// otfst: compile calculus scripts, apply networks and run OT grammars.
//
// Exit status: 0 on success, 1 on usage or compile errors, 2 when the
// requested result set is empty.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "otfst/operations.h"
#include "otfst/ot/grammar.h"
#include "otfst/ot/oracle.h"
#include "otfst/regex/compiler.h"
#include "otfst/serialize.h"

namespace {

using namespace otfst;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kEmpty = 2;

struct Options {
  std::string script;  // empty: built-in syllabification script
  std::string compile_file;
  std::string name;
  std::string direction;
  std::string input;
  std::size_t limit = kDefaultApplyLimit;
  std::optional<int> budget;
  bool merciless = false;
  bool trace = false;
  std::string out;
  std::size_t cap = ot::kDefaultOracleCap;
  std::string constraint = "Parse";
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

regex::CompiledScript LoadSession(const Options& o) {
  if (o.script.empty()) {
    return regex::CompileScriptText(ot::DefaultScript());
  }
  return regex::CompileScriptText(ReadFile(o.script));
}

int PrintSet(const PathSet& p, std::size_t limit) {
  for (const auto& s : p.outputs) std::cout << s << "\n";
  if (p.truncated) {
    std::cerr << "otfst: output truncated at " << limit << " strings\n";
  }
  return p.empty() ? kEmpty : kOk;
}

int CmdCompile(const Options& o) {
  const auto cs = regex::CompileScriptText(ReadFile(o.compile_file));
  std::set<std::string> constraints;
  for (const auto& c : cs.constraints) constraints.insert(c.name);
  for (const auto& name : cs.env.names()) {
    const Network& n = cs.env.Get(name);
    std::cout << (constraints.count(name) ? "constraint " : "define ") << name
              << ": " << n.NumStates() << " states, " << n.NumArcs()
              << " arcs\n";
  }
  if (!cs.ranking.empty()) {
    std::cout << "rank:";
    for (const auto& r : cs.ranking) std::cout << " " << r;
    std::cout << "\n";
  }
  return kOk;
}

int CmdApply(const Options& o) {
  const auto cs = LoadSession(o);
  const Direction dir = o.direction == "up" ? Direction::kUp : Direction::kDown;
  return PrintSet(Apply(cs.env.Get(o.name), o.input, dir, o.limit), o.limit);
}

int CmdCount(const Options& o) {
  const auto cs = LoadSession(o);
  const Network& net = cs.env.Get(o.name);
  const Network composed =
      Minimize(Compose(StringLanguage(net.symbols(), o.input), net));
  std::cout << CountPaths(composed) << " candidates, " << composed.NumStates()
            << " states\n";
  return kOk;
}

ot::Grammar LoadGrammar(const Options& o) {
  const auto cs = LoadSession(o);
  if (!cs.env.Contains("GEN")) {
    throw Error("script defines no grammar (no GEN definition)");
  }
  return ot::GrammarFromScript(cs, o.budget);
}

ot::Mode ModeOf(const Options& o) {
  return o.merciless ? ot::Mode::kMerciless : ot::Mode::kLenient;
}

int CmdEval(const Options& o) {
  const ot::Grammar g = LoadGrammar(o);
  if (o.trace) {
    const auto stages = ot::Trace(g, o.input, ModeOf(o), o.limit);
    for (const auto& st : stages) {
      std::cout << "# " << st.label << ": " << st.outputs.size() << "\n";
    }
    return PrintSet(stages.back().outputs, o.limit);
  }
  return PrintSet(ot::Evaluate(g, o.input, ModeOf(o), o.limit), o.limit);
}

int CmdMerge(const Options& o) {
  const Network merged = ot::Merge(LoadGrammar(o), ModeOf(o));
  if (!o.out.empty()) {
    std::ofstream out(o.out);
    if (!out) throw Error("cannot write '" + o.out + "'");
    WriteText(merged, out);
  }
  std::cout << "merged: " << merged.NumStates() << " states, "
            << merged.NumArcs() << " arcs\n";
  return kOk;
}

int CmdTableau(const Options& o) {
  const ot::Tableau t = ot::OracleEvaluate(LoadGrammar(o), o.input, o.cap);
  std::cout << ot::FormatTableau(t);
  return t.rows.empty() ? kEmpty : kOk;
}

int CmdCheckOrders(const Options& o) {
  const bool same =
      ot::OrderInsensitivityCheck(LoadGrammar(o), o.input, o.constraint);
  std::cout << (same ? "true" : "false") << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Finite-state calculus and Optimality Theory toolkit"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--script", o.script,
                 "Script to load (default: built-in syllabification grammar)")
      ->check(CLI::ExistingFile);
  app.fallthrough();

  auto* compile = app.add_subcommand("compile", "Compile a script and list its networks");
  compile->add_option("file", o.compile_file, "Script file")
      ->required()
      ->check(CLI::ExistingFile);

  auto* apply = app.add_subcommand("apply", "Apply a network to an input");
  apply->add_option("name", o.name, "Network name")->required();
  apply->add_option("direction", o.direction, "down or up")
      ->required()
      ->check(CLI::IsMember({"down", "up"}));
  apply->add_option("input", o.input, "Input string")->required();
  apply->add_option("--limit", o.limit, "Maximum number of outputs");

  auto* count = app.add_subcommand("count", "Count candidates of input .o. network");
  count->add_option("name", o.name, "Network name")->required();
  count->add_option("input", o.input, "Input string")->required();

  auto* ot = app.add_subcommand("ot", "Optimality Theory evaluation");
  ot->require_subcommand(1);
  ot->fallthrough();
  ot->add_option("--budget", o.budget,
                 "Violation budget for constraints that declare one");
  ot->add_flag("--merciless", o.merciless,
               "Use plain composition instead of lenient composition");

  auto* eval = ot->add_subcommand("eval", "Print the optimal outputs");
  eval->add_option("input", o.input, "Input string")->required();
  eval->add_option("--limit", o.limit, "Maximum number of outputs");
  eval->add_flag("--trace", o.trace, "Report the candidate count after each stage");

  auto* merge = ot->add_subcommand("merge", "Merge GEN and the cascade into one transducer");
  merge->add_option("--out", o.out, "Write the serialized transducer here");

  auto* tableau = ot->add_subcommand("tableau", "Print the tableau for an input");
  tableau->add_option("input", o.input, "Input string")->required();
  tableau->add_option("--cap", o.cap, "Maximum number of candidates");

  auto* orders = ot->add_subcommand(
      "check-orders", "Check that family member order does not change winners");
  orders->add_option("input", o.input, "Input string")->required();
  orders->add_option("--constraint", o.constraint, "Gradient constraint");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kFailure;
  }

  try {
    if (*compile) return CmdCompile(o);
    if (*apply) return CmdApply(o);
    if (*count) return CmdCount(o);
    if (*eval) return CmdEval(o);
    if (*merge) return CmdMerge(o);
    if (*tableau) return CmdTableau(o);
    if (*orders) return CmdCheckOrders(o);
  } catch (const std::exception& e) {
    std::cerr << "otfst: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
