// Copyright 2026 The covker Authors.
//
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

#include "covker/formula.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "covker/errors.hpp"

namespace covker {

std::size_t AnnotatedFormula::occurrences(int var) const {
  std::size_t c = 0;
  for (const auto& cl : clauses)
    for (int l : cl.lits)
      if (std::abs(l) == var) ++c;
  return c;
}

void AnnotatedFormula::validate() const {
  if (num_vars == 0) throw InvalidInput("formula has no variables");
  if (clauses.empty()) throw InvalidInput("formula has no clauses");
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    auto vs = clauses[j].lits;
    for (int& l : vs) {
      if (l == 0 || static_cast<std::size_t>(std::abs(l)) > num_vars)
        throw InvalidInput("clause " + std::to_string(j + 1) + " has an out-of-range literal");
      l = std::abs(l);
    }
    if (vs[0] == vs[1] || vs[0] == vs[2] || vs[1] == vs[2])
      throw InvalidInput("clause " + std::to_string(j + 1) + " repeats a variable");
  }
  std::vector<int> sorted = variable_order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expect(num_vars);
  std::iota(expect.begin(), expect.end(), 1);
  if (sorted != expect) throw InvalidInput("variable order is not a permutation of 1..n");
  for (std::size_t v = 1; v <= num_vars; ++v)
    if (occurrences(static_cast<int>(v)) == 0)
      throw InvalidInput("variable " + std::to_string(v) + " occurs in no clause");
}

bool AnnotatedFormula::satisfied_by(const std::vector<bool>& assignment) const {
  if (assignment.size() != num_vars) throw InvalidInput("assignment has wrong length");
  return std::all_of(clauses.begin(), clauses.end(), [&](const Clause& c) {
    return std::any_of(c.lits.begin(), c.lits.end(), [&](int l) {
      return assignment[std::abs(l) - 1] == (l > 0);
    });
  });
}

std::vector<ClauseLayout> layout_clauses(const AnnotatedFormula& f) {
  f.validate();
  std::vector<std::size_t> pos(f.num_vars + 1);
  for (std::size_t i = 0; i < f.variable_order.size(); ++i) pos[f.variable_order[i]] = i;

  std::vector<ClauseLayout> out(f.clauses.size());
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    auto lits = f.clauses[j].lits;
    std::sort(lits.begin(), lits.end(),
              [&](int a, int b) { return pos[std::abs(a)] < pos[std::abs(b)]; });
    for (int k = 0; k < 3; ++k) {
      out[j].lits[k] = lits[k];
      out[j].vars[k] = std::abs(lits[k]);
      out[j].pos[k] = pos[std::abs(lits[k])];
    }
  }

  // inside[a][b]: comb b sits within a gap of comb a.
  const std::size_t m = out.size();
  std::vector<std::vector<bool>> inside(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b || f.clauses[a].side != f.clauses[b].side) continue;
      const auto &A = out[a].pos, &B = out[b].pos;
      if (B[0] >= A[2] || B[2] <= A[0]) continue;  // disjoint, maybe sharing an end
      const bool span_inside = A[0] <= B[0] && B[2] <= A[2] && !(A[0] == B[0] && A[2] == B[2]);
      const bool in_gap = B[2] <= A[1] || B[0] >= A[1];
      if (span_inside && in_gap) {
        inside[a][b] = true;
        continue;
      }
      const bool other_way = B[0] <= A[0] && A[2] <= B[2] && !(A[0] == B[0] && A[2] == B[2]);
      if (!other_way || !(A[2] <= B[1] || A[0] >= B[1]))
        throw InvalidInput("clauses " + std::to_string(a + 1) + " and " +
                           std::to_string(b + 1) + " cross on the same side of the spine");
    }
  }
  // Levels by repeated relaxation; nesting is acyclic so m passes suffice.
  for (std::size_t pass = 0; pass < m; ++pass) {
    bool changed = false;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (inside[a][b] && out[a].level < out[b].level + 1) {
          out[a].level = out[b].level + 1;
          changed = true;
        }
    if (!changed) break;
  }
  return out;
}

AnnotatedFormula parse_dimacs(const std::string& text) {
  AnnotatedFormula f;
  std::istringstream in(text);
  std::string line;
  bool header = false;
  std::size_t declared = 0;
  std::vector<int> cur;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c" || tok[0] == '%') continue;
    if (tok == "p") {
      std::string fmt;
      long long n = 0, m = 0;
      if (!(ls >> fmt >> n >> m) || fmt != "cnf" || n <= 0 || m < 0)
        throw InvalidInput("malformed DIMACS header");
      f.num_vars = static_cast<std::size_t>(n);
      declared = static_cast<std::size_t>(m);
      header = true;
      continue;
    }
    if (!header) throw InvalidInput("DIMACS clause before the header");
    std::istringstream cs(line);
    long long lit = 0;
    while (cs >> lit) {
      if (lit == 0) {
        if (cur.size() != 3) throw InvalidInput("DIMACS clause does not have exactly 3 literals");
        f.clauses.push_back({{cur[0], cur[1], cur[2]}, Side::Above});
        cur.clear();
      } else {
        cur.push_back(static_cast<int>(lit));
      }
    }
    if (!cs.eof()) throw InvalidInput("DIMACS clause has a non-integer token");
  }
  if (!header) throw InvalidInput("missing DIMACS header");
  if (!cur.empty()) throw InvalidInput("unterminated DIMACS clause");
  if (f.clauses.size() != declared)
    throw InvalidInput("DIMACS clause count does not match the header");
  f.variable_order.resize(f.num_vars);
  std::iota(f.variable_order.begin(), f.variable_order.end(), 1);
  f.validate();
  return f;
}

AnnotatedFormula parse_layout_json(const std::string& text, const AnnotatedFormula* base) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("layout JSON: ") + e.what());
  }
  try {
    AnnotatedFormula f;
    if (base) f = *base;
    const auto& cls = j.at("clauses");
    if (base && cls.size() != f.clauses.size())
      throw InvalidInput("layout lists a different number of clauses than the CNF");
    int max_var = 0;
    for (std::size_t k = 0; k < cls.size(); ++k) {
      const auto& c = cls[k];
      Clause cl;
      if (c.contains("lits")) {
        const auto lits = c.at("lits").get<std::vector<int>>();
        if (lits.size() != 3) throw InvalidInput("layout clause needs exactly 3 literals");
        cl.lits = {lits[0], lits[1], lits[2]};
      } else if (base) {
        cl.lits = f.clauses[k].lits;
      } else {
        throw InvalidInput("layout clause without literals");
      }
      const std::string side = c.value("side", "above");
      if (side == "above") cl.side = Side::Above;
      else if (side == "below") cl.side = Side::Below;
      else throw InvalidInput("clause side must be \"above\" or \"below\"");
      for (int l : cl.lits) max_var = std::max(max_var, std::abs(l));
      if (base) f.clauses[k] = cl;
      else f.clauses.push_back(cl);
    }
    if (j.contains("num_vars")) f.num_vars = j.at("num_vars").get<std::size_t>();
    else if (!base) f.num_vars = static_cast<std::size_t>(max_var);
    if (j.contains("variable_order")) {
      f.variable_order = j.at("variable_order").get<std::vector<int>>();
    } else if (f.variable_order.size() != f.num_vars) {
      f.variable_order.resize(f.num_vars);
      std::iota(f.variable_order.begin(), f.variable_order.end(), 1);
    }
    f.validate();
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("layout JSON: ") + e.what());
  }
}

std::string to_layout_json(const AnnotatedFormula& f) {
  nlohmann::json j;
  j["num_vars"] = f.num_vars;
  j["variable_order"] = f.variable_order;
  j["clauses"] = nlohmann::json::array();
  for (const auto& c : f.clauses)
    j["clauses"].push_back({{"lits", c.lits}, {"side", c.side == Side::Above ? "above" : "below"}});
  return j.dump();
}

}  // namespace covker
