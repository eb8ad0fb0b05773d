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

#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace covker {

enum class Side { Above, Below };

struct Clause {
  std::array<int, 3> lits{};  // signed 1-based variables
  Side side = Side::Above;
};

/// 3-CNF formula with a planar layout: variables on a horizontal spine in
/// `variable_order`, each clause drawn as a comb above or below it.
struct AnnotatedFormula {
  std::size_t num_vars = 0;
  std::vector<Clause> clauses;
  std::vector<int> variable_order;  // permutation of 1..num_vars

  std::size_t occurrences(int var) const;
  /// Throws InvalidInput unless every clause has three distinct in-range
  /// variables, every variable occurs, and the order is a permutation.
  void validate() const;
  bool satisfied_by(const std::vector<bool>& assignment) const;
};

/// Per-clause layout facts derived from the variable order.
struct ClauseLayout {
  std::array<int, 3> vars{};        // left-to-right along the spine
  std::array<int, 3> lits{};        // literal on each of those variables
  std::array<std::size_t, 3> pos{};  // spine positions of the variables
  std::size_t level = 0;            // 0 for combs enclosing no other comb
};

/// Nesting levels per clause. Throws InvalidInput when two combs on the same
/// side cross.
std::vector<ClauseLayout> layout_clauses(const AnnotatedFormula& f);

/// DIMACS CNF ("p cnf n m", clauses terminated by 0). Sides default to
/// above and the order to 1..n.
AnnotatedFormula parse_dimacs(const std::string& text);

/// Layout JSON: {"num_vars":n, "variable_order":[...],
/// "clauses":[{"lits":[-1,2,3],"side":"above"}, ...]}. When `base` is given
/// its clauses are used and the JSON only supplies order and sides.
AnnotatedFormula parse_layout_json(const std::string& text,
                                   const AnnotatedFormula* base = nullptr);

std::string to_layout_json(const AnnotatedFormula& f);

}  // namespace covker
