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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "covker/discretization.hpp"
#include "covker/geometry.hpp"

namespace covker {

struct KernelResult {
  std::vector<std::size_t> kernel;  // sorted box indices
  bool certified = false;
  std::string algo;
  std::optional<std::uint64_t> seed;
  nlohmann::json stats = nlohmann::json::object();
  double wall_seconds = 0.0;

  std::size_t size() const { return kernel.size(); }
};

/// Greedy set cover driven by the weight index. Deterministic.
KernelResult greedy_kernel(const Instance& inst,
                           std::size_t max_cells = kDefaultMaxCells);

}  // namespace covker
