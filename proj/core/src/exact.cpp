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

#include "covker/exact.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <set>

#include "covker/errors.hpp"

namespace covker {

namespace {

using Mask = std::uint64_t;

class CoverSearch {
 public:
  explicit CoverSearch(std::vector<Mask> points) : points_(std::move(points)) {}

  Mask solve(Mask all) {
    best_ = all;
    best_size_ = std::popcount(all);
    Mask greedy = greedy_cover();
    if (std::popcount(greedy) < best_size_) {
      best_ = greedy;
      best_size_ = std::popcount(greedy);
    }
    std::vector<Mask> open = points_;
    search(0, 0, open);
    return best_;
  }

  std::size_t nodes() const { return nodes_; }

 private:
  Mask greedy_cover() const {
    Mask chosen = 0;
    std::vector<Mask> open = points_;
    while (!open.empty()) {
      int best_box = -1;
      std::size_t best_hits = 0;
      for (int b = 0; b < 64; ++b) {
        std::size_t hits = 0;
        for (Mask m : open) hits += (m >> b) & 1U;
        if (hits > best_hits) {
          best_hits = hits;
          best_box = b;
        }
      }
      chosen |= Mask{1} << best_box;
      std::erase_if(open, [&](Mask m) { return (m >> best_box) & 1U; });
    }
    return chosen;
  }

  // Points whose available coverers are pairwise disjoint each need their
  // own box.
  static int lower_bound(const std::vector<Mask>& open, Mask forbidden) {
    Mask used = 0;
    int count = 0;
    for (Mask m : open) {
      const Mask avail = m & ~forbidden;
      if ((avail & used) == 0) {
        used |= avail;
        ++count;
      }
    }
    return count;
  }

  void search(Mask chosen, Mask forbidden, const std::vector<Mask>& open) {
    ++nodes_;
    const int size = std::popcount(chosen);
    if (open.empty()) {
      if (size < best_size_) {
        best_ = chosen;
        best_size_ = size;
      }
      return;
    }
    if (size + lower_bound(open, forbidden) >= best_size_) return;

    std::size_t pick = 0;
    int fewest = 65;
    for (std::size_t i = 0; i < open.size(); ++i) {
      const int c = std::popcount(open[i] & ~forbidden);
      if (c == 0) return;
      if (c < fewest) {
        fewest = c;
        pick = i;
      }
    }
    Mask options = open[pick] & ~forbidden;
    Mask excluded = forbidden;
    while (options) {
      const int b = std::countr_zero(options);
      options &= options - 1;
      const Mask bit = Mask{1} << b;
      std::vector<Mask> rest;
      rest.reserve(open.size());
      for (Mask m : open)
        if (!(m & bit)) rest.push_back(m);
      search(chosen | bit, excluded, rest);
      excluded |= bit;
    }
  }

  std::vector<Mask> points_;
  Mask best_ = 0;
  int best_size_ = 0;
  std::size_t nodes_ = 0;
};

std::vector<std::vector<std::size_t>> cover_relation(std::span<const Box> boxes,
                                                     std::span<const Point> points) {
  std::vector<std::vector<std::size_t>> cov(points.size());
  for (std::size_t p = 0; p < points.size(); ++p)
    for (std::size_t b = 0; b < boxes.size(); ++b)
      if (boxes[b].contains(points[p].coords)) cov[p].push_back(b);
  return cov;
}

struct Solved {
  std::vector<std::size_t> kernel;
  nlohmann::json stats;
};

Solved solve_relation(std::size_t n_boxes, std::vector<std::vector<std::size_t>> cov,
                      std::size_t max_live_boxes) {
  const std::size_t raw_points = cov.size();
  ReducedInstance red = reduce_cover_relation(n_boxes, std::move(cov));
  if (red.live_boxes.size() > std::min<std::size_t>(max_live_boxes, 64))
    throw ResourceLimit("exact solver: " + std::to_string(red.live_boxes.size()) +
                        " live boxes exceed the cap of " +
                        std::to_string(std::min<std::size_t>(max_live_boxes, 64)));
  std::vector<int> slot(n_boxes, -1);
  for (std::size_t i = 0; i < red.live_boxes.size(); ++i)
    slot[red.live_boxes[i]] = static_cast<int>(i);
  std::vector<Mask> masks;
  for (const auto& c : red.coverage) {
    Mask m = 0;
    for (auto b : c) m |= Mask{1} << slot[b];
    masks.push_back(m);
  }
  Mask all = 0;
  for (std::size_t i = 0; i < red.live_boxes.size(); ++i) all |= Mask{1} << i;

  CoverSearch search(std::move(masks));
  const Mask best = red.coverage.empty() ? 0 : search.solve(all);
  Solved out;
  out.kernel = red.forced;
  for (std::size_t i = 0; i < red.live_boxes.size(); ++i)
    if ((best >> i) & 1U) out.kernel.push_back(red.live_boxes[i]);
  std::sort(out.kernel.begin(), out.kernel.end());
  out.stats = {{"points", raw_points},
               {"forced", red.forced.size()},
               {"live_boxes", red.live_boxes.size()},
               {"live_points", red.coverage.size()},
               {"nodes", search.nodes()}};
  return out;
}

}  // namespace

ReducedInstance reduce_cover_relation(std::size_t n_boxes,
                                      std::vector<std::vector<std::size_t>> coverage) {
  for (auto& c : coverage) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    if (c.empty()) throw InvalidInput("a point is covered by no box");
    if (c.back() >= n_boxes) throw InvalidInput("cover relation names an unknown box");
  }
  {
    std::set<std::vector<std::size_t>> uniq(coverage.begin(), coverage.end());
    coverage.assign(uniq.begin(), uniq.end());
  }
  std::vector<bool> live(n_boxes, true);
  std::vector<std::size_t> forced;

  bool changed = true;
  while (changed) {
    changed = false;

    // Essential boxes.
    std::set<std::size_t> essential;
    for (const auto& c : coverage)
      if (c.size() == 1) essential.insert(c.front());
    if (!essential.empty()) {
      for (auto b : essential) {
        forced.push_back(b);
        live[b] = false;
      }
      std::erase_if(coverage, [&](const auto& c) {
        return std::any_of(c.begin(), c.end(), [&](auto b) { return essential.count(b); });
      });
      changed = true;
    }

    // Dominated boxes.
    std::vector<std::vector<std::size_t>> pts(n_boxes);
    for (std::size_t p = 0; p < coverage.size(); ++p)
      for (auto b : coverage[p]) pts[b].push_back(p);
    std::vector<bool> drop(n_boxes, false);
    for (std::size_t b = 0; b < n_boxes; ++b) {
      if (!live[b]) continue;
      if (pts[b].empty()) {
        drop[b] = true;
        continue;
      }
      for (std::size_t c = 0; c < n_boxes && !drop[b]; ++c) {
        if (c == b || !live[c] || pts[c].size() < pts[b].size()) continue;
        if (!std::includes(pts[c].begin(), pts[c].end(), pts[b].begin(), pts[b].end()))
          continue;
        if (pts[c].size() > pts[b].size() || c < b) drop[b] = true;
      }
    }
    for (std::size_t b = 0; b < n_boxes; ++b) {
      if (!drop[b]) continue;
      live[b] = false;
      changed = true;
      for (auto& c : coverage) std::erase(c, b);
    }

    // Dominated points.
    std::sort(coverage.begin(), coverage.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size() || (a.size() == b.size() && a < b); });
    coverage.erase(std::unique(coverage.begin(), coverage.end()), coverage.end());
    std::vector<bool> redundant(coverage.size(), false);
    for (std::size_t p = 0; p < coverage.size(); ++p) {
      for (std::size_t q = 0; q < p && !redundant[p]; ++q) {
        if (redundant[q] || coverage[q].size() >= coverage[p].size()) continue;
        if (std::includes(coverage[p].begin(), coverage[p].end(), coverage[q].begin(),
                          coverage[q].end()))
          redundant[p] = true;
      }
    }
    if (std::find(redundant.begin(), redundant.end(), true) != redundant.end()) {
      std::vector<std::vector<std::size_t>> kept;
      for (std::size_t p = 0; p < coverage.size(); ++p)
        if (!redundant[p]) kept.push_back(std::move(coverage[p]));
      coverage = std::move(kept);
      changed = true;
    }
  }

  ReducedInstance red;
  std::sort(forced.begin(), forced.end());
  red.forced = std::move(forced);
  for (std::size_t b = 0; b < n_boxes; ++b)
    if (live[b]) red.live_boxes.push_back(b);
  red.coverage = std::move(coverage);
  return red;
}

ReducedInstance reduce_instance(const Instance& inst, std::size_t max_cells) {
  inst.validate();
  const auto boxes = scaled_boxes(inst.boxes);
  const auto disc = coverage_discretization(boxes, max_cells);
  return reduce_cover_relation(boxes.size(), cover_relation(boxes, disc.points));
}

KernelResult exact_kernel(const Instance& inst, const ExactConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  inst.validate();
  const auto boxes = scaled_boxes(inst.boxes);
  const auto disc = coverage_discretization(boxes, cfg.max_cells);
  auto solved = solve_relation(boxes.size(), cover_relation(boxes, disc.points),
                               cfg.max_live_boxes);
  KernelResult res;
  res.algo = "exact";
  res.kernel = std::move(solved.kernel);
  res.stats = std::move(solved.stats);
  res.certified = covers_same_region(res.kernel, inst, cfg.max_cells);
  if (!res.certified) throw InternalError("exact result failed the volume certificate");
  res.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

KernelResult exact_box_cover(const Instance& inst, const ExactConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  inst.validate();
  if (!inst.points) throw InvalidInput("box cover needs a point set");
  auto cov = cover_relation(inst.boxes, *inst.points);
  auto solved = solve_relation(inst.boxes.size(), cov, cfg.max_live_boxes);
  KernelResult res;
  res.algo = "exact-box-cover";
  res.kernel = std::move(solved.kernel);
  res.stats = std::move(solved.stats);
  res.certified = std::all_of(cov.begin(), cov.end(), [&](const auto& c) {
    return std::any_of(c.begin(), c.end(), [&](auto b) {
      return std::binary_search(res.kernel.begin(), res.kernel.end(), b);
    });
  });
  if (!res.certified) throw InternalError("box cover result misses a point");
  res.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace covker
