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

#include "otfst/ot/oracle.h"

#include <algorithm>
#include <exception>

namespace otfst::ot {

std::vector<std::string> Tableau::Winners() const {
  std::vector<std::string> out;
  for (const auto& r : rows) {
    if (r.winner) out.push_back(r.candidate);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Tableau OracleEvaluate(const Grammar& g, std::string_view input,
                       std::size_t cap) {
  for (const auto& c : g.ranking()) {
    if (!c.HasCounter()) {
      throw Error("constraint '" + c.name() + "' has no violation counter");
    }
  }
  const Network cands = Candidates(g, input);
  const PathCount n = CountPaths(cands);
  if (n > cap) {
    throw Error("'" + std::string(input) + "' has " + n.str() +
                " candidates, above the oracle cap of " + std::to_string(cap));
  }
  // The minimal lower-side acceptor is deterministic, so its paths are the
  // distinct candidates.
  const Network surface = Minimize(Project(cands, Side::kLower));

  Tableau t;
  t.input = std::string(input);
  for (const auto& c : g.ranking()) t.constraints.push_back(c.name());
  const SymbolTable& symbols = *g.symbols();
  std::vector<Label> path;
  auto walk = [&](auto&& self, StateId s) -> void {
    if (surface.IsFinal(s)) {
      TableauRow row{symbols.Render(path), {}, false, std::nullopt};
      row.violations.reserve(g.ranking().size());
      for (const auto& c : g.ranking()) {
        row.violations.push_back(c.CountViolations(path));
      }
      t.rows.push_back(std::move(row));
    }
    for (const Arc& a : surface.Arcs(s)) {
      path.push_back(a.upper);
      self(self, a.target);
      path.pop_back();
    }
  };
  if (!IsEmpty(surface)) walk(walk, surface.Start());
  std::sort(t.rows.begin(), t.rows.end(), [](const auto& a, const auto& b) {
    return a.candidate < b.candidate;
  });
  if (t.rows.empty()) return t;

  const auto best = std::min_element(
      t.rows.begin(), t.rows.end(), [](const auto& a, const auto& b) {
        return a.violations < b.violations;
      })->violations;
  for (auto& r : t.rows) {
    if (r.violations == best) {
      r.winner = true;
      continue;
    }
    const auto mm = std::mismatch(r.violations.begin(), r.violations.end(),
                                  best.begin());
    r.fatal = static_cast<std::size_t>(mm.first - r.violations.begin());
  }
  std::stable_sort(t.rows.begin(), t.rows.end(),
                   [](const auto& a, const auto& b) {
                     if (a.winner != b.winner) return a.winner;
                     return a.violations < b.violations;
                   });
  return t;
}

std::vector<Tableau> OracleBatchSerial(const Grammar& g,
                                       const std::vector<std::string>& inputs,
                                       std::size_t cap) {
  std::vector<Tableau> out;
  out.reserve(inputs.size());
  for (const auto& w : inputs) out.push_back(OracleEvaluate(g, w, cap));
  return out;
}

std::vector<Tableau> OracleBatch(const Grammar& g,
                                 const std::vector<std::string>& inputs,
                                 std::size_t cap) {
  std::vector<Tableau> out(inputs.size());
  const auto n = static_cast<std::ptrdiff_t>(inputs.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = OracleEvaluate(g, inputs[i], cap);
    } catch (...) {
#pragma omp critical(otfst_oracle_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

std::string FormatTableau(const Tableau& t) {
  const std::string head = "/" + t.input + "/";
  std::size_t first = head.size();
  for (const auto& r : t.rows) first = std::max(first, r.candidate.size() + 3);

  std::vector<std::vector<std::string>> cells(t.rows.size());
  std::vector<std::size_t> width;
  for (const auto& c : t.constraints) width.push_back(c.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& r = t.rows[i];
    for (std::size_t j = 0; j < r.violations.size(); ++j) {
      std::string cell(static_cast<std::size_t>(r.violations[j]), '*');
      if (r.fatal && *r.fatal == j) {
        // The mark that exceeds the winners' count is the fatal one.
        const int winners = t.rows.front().violations[j];
        cell.insert(static_cast<std::size_t>(winners) + 1, "!");
      }
      width[j] = std::max(width[j], cell.size());
      cells[i].push_back(std::move(cell));
    }
  }

  std::string out;
  auto emit = [&](std::string line) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  };
  auto padded = [](const std::string& s, std::size_t w) {
    return s + std::string(w - s.size(), ' ');
  };
  std::string line = padded(head, first);
  for (std::size_t j = 0; j < t.constraints.size(); ++j) {
    line += " | " + padded(t.constraints[j], width[j]);
  }
  emit(std::move(line));
  line = std::string(first, '-');
  for (std::size_t w : width) line += "-+-" + std::string(w, '-');
  emit(std::move(line));
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    line = padded((t.rows[i].winner ? "-> " : "   ") + t.rows[i].candidate,
                  first);
    for (std::size_t j = 0; j < cells[i].size(); ++j) {
      line += " | " + padded(cells[i][j], width[j]);
    }
    emit(std::move(line));
  }
  return out;
}

}  // namespace otfst::ot
