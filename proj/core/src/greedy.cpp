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

#include <algorithm>
#include <chrono>

#include "covker/errors.hpp"
#include "covker/kernel.hpp"
#include "covker/partition_index.hpp"

namespace covker {

KernelResult greedy_kernel(const Instance& inst, std::size_t max_cells) {
  const auto start = std::chrono::steady_clock::now();
  inst.validate();
  const auto boxes = scaled_boxes(inst.boxes);
  PartitionIndex idx(boxes);

  KernelResult res;
  res.algo = "greedy";
  std::vector<bool> chosen(boxes.size(), false);
  std::size_t iterations = 0;
  std::size_t queries = 0;
  while (idx.covered_summary().total > 0) {
    ++iterations;
    std::optional<std::size_t> best;
    Rational best_w = 0;
    for (std::size_t i = 0; i < boxes.size(); ++i) {
      if (chosen[i]) continue;
      Rational w = idx.query(boxes[i]);
      ++queries;
      if (w > best_w) {
        best_w = w;
        best = i;
      }
    }
    if (!best) throw InternalError("greedy: covered weight left but no box carries it");
    chosen[*best] = true;
    res.kernel.push_back(*best);
    idx.update(boxes[*best], Rational(0));
  }
  std::sort(res.kernel.begin(), res.kernel.end());
  res.certified = covers_same_region(res.kernel, inst, max_cells);
  if (!res.certified) throw InternalError("greedy result failed the volume certificate");
  res.stats["iterations"] = iterations;
  res.stats["queries"] = queries;
  res.stats["index_nodes"] = idx.stats().node_count;
  res.stats["index_leaves"] = idx.stats().leaf_count;
  res.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace covker
