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

#include <cstddef>
#include <vector>

#include "covker/kernel.hpp"

namespace covker {

inline constexpr std::size_t kDefaultMaxLiveBoxes = 32;

struct ExactConfig {
  std::size_t max_live_boxes = kDefaultMaxLiveBoxes;
  std::size_t max_cells = kDefaultMaxCells;
};

/// Set-cover view of an instance after preprocessing. Point ids index
/// `coverage`; each entry lists the live boxes containing that point.
struct ReducedInstance {
  std::vector<std::size_t> forced;
  std::vector<std::size_t> live_boxes;
  std::vector<std::vector<std::size_t>> coverage;

  std::size_t live_point_count() const { return coverage.size(); }
};

/// Reduction of an explicit cover relation: `coverage[p]` lists the boxes
/// (out of `n_boxes`) containing point p. Every point needs a coverer.
ReducedInstance reduce_cover_relation(std::size_t n_boxes,
                                      std::vector<std::vector<std::size_t>> coverage);

/// Reduction of the coverage kernel problem over the discretization.
ReducedInstance reduce_instance(const Instance& inst,
                                std::size_t max_cells = kDefaultMaxCells);

/// Minimum coverage kernel. Throws ResourceLimit when too many boxes stay
/// live after reduction.
KernelResult exact_kernel(const Instance& inst, const ExactConfig& cfg = {});

/// Minimum subset of boxes covering `inst.points` (Box Cover).
KernelResult exact_box_cover(const Instance& inst, const ExactConfig& cfg = {});

}  // namespace covker
