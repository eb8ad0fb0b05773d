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
#include <random>
#include <vector>

#include "covker/kernel.hpp"
#include "covker/partition_index.hpp"

namespace covker {

struct BGConfig {
  std::uint64_t seed = 0;
  bool uniform_sampling = false;  // draw boxes uniformly instead of by weight
  std::size_t max_cells = kDefaultMaxCells;

  /// Cap on doubling steps at guess k: ceil(4k log2(n/k)), at least 1.
  static std::uint64_t mu(std::size_t n, std::uint64_t k);
  /// Draws per candidate net: ceil(16k log2(16k)).
  static std::uint64_t sample_size(std::uint64_t k);
  /// Nets tried per stage: ceil(log2 n) + 1.
  static std::uint64_t max_retries(std::size_t n);
};

/// Doubles the weight inside every box containing `p`; returns how many.
std::size_t weight_doubling_step(PartitionIndex& idx, const Point& p);

/// Distinct indices drawn with probability proportional to current box
/// weight (or uniformly), sorted.
std::vector<std::size_t> build_candidate_net(const PartitionIndex& idx,
                                             std::uint64_t k, std::mt19937_64& rng,
                                             bool uniform = false);

KernelResult bg_kernel(const Instance& inst, const BGConfig& cfg = {});

}  // namespace covker
