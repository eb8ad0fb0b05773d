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

#include "covker/formula.hpp"
#include "covker/geometry.hpp"

namespace covker {

enum class Role { Red, Blue, Green, Leg, Connector };

std::string role_name(Role r);

struct GadgetCounts {
  std::size_t blacks = 0;
  std::size_t clause_greens = 0;
  std::size_t var_rects = 0;
  std::size_t var_greens = 0;
};

struct GadgetInstance {
  Instance instance;
  std::vector<Role> roles;
  std::size_t expected_kernel = 0;
  GadgetCounts counts;
  AnnotatedFormula formula;
  /// Red/blue boxes of each variable (index v-1) in ring order.
  std::vector<std::vector<std::size_t>> variable_rings;
  /// Black boxes of each clause in cycle order:
  /// leg1, h4, h5, leg2, h6, h7, leg3, h8, h9.
  std::vector<std::array<std::size_t, 9>> clause_cycles;
  /// Literal attached to leg1, leg2, leg3 of each clause.
  std::vector<std::array<int, 3>> clause_leg_lits;
  std::vector<std::size_t> greens;
};

/// Hardness gadget for the coverage kernel problem. Runs
/// check_mck_gadget before returning.
GadgetInstance generate_mck_gadget(const AnnotatedFormula& f);

/// Box Cover gadget: no greens, one point per redundant and connection
/// region, comb connectors 5 and 6 pulled apart. Runs
/// check_boxcover_gadget before returning.
GadgetInstance generate_boxcover_gadget(const AnnotatedFormula& f);

/// Greens, the color class chosen by the assignment, and per clause a
/// smallest cover of the comb cycle that includes every leg whose literal
/// is false. Sorted.
std::vector<std::size_t> kernel_from_assignment(const GadgetInstance& g,
                                                const std::vector<bool>& assignment);

/// Throw InternalError on any structural violation.
void check_mck_gadget(const GadgetInstance& g);
void check_boxcover_gadget(const GadgetInstance& g);

/// One variable gadget with `c` occurrences and its greens. The red top-row
/// boxes stand in for the connected ones and carry no green.
GadgetInstance isolated_variable_gadget(std::size_t c);

/// One comb with its 9 black boxes only; `instance.points` holds one point
/// inside each of the 9 pairwise overlaps.
GadgetInstance isolated_comb();

}  // namespace covker
