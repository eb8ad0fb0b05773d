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

#include "covker/discretization.hpp"

#include <algorithm>

#include "covker/errors.hpp"

namespace covker {

namespace {

// Compressed facet grid of a box set.
struct Grid {
  std::vector<std::vector<Coord>> axes;  // sorted distinct facet coordinates
  std::vector<std::size_t> extent;       // cells per axis
  std::size_t cells = 1;

  Grid(std::span<const Box> boxes, std::size_t max_cells) {
    const std::size_t d = boxes.front().dim();
    axes.resize(d);
    for (const auto& b : boxes) {
      if (b.dim() != d) throw InvalidInput("dimension mismatch in box set");
      for (std::size_t k = 0; k < d; ++k) {
        axes[k].push_back(b.lo[k]);
        axes[k].push_back(b.hi[k]);
      }
    }
    for (auto& a : axes) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
      const std::size_t e = a.size() - 1;
      extent.push_back(e);
      if (e != 0 && cells > max_cells / e)
        throw ResourceLimit("coverage grid exceeds " + std::to_string(max_cells) +
                            " cells");
      cells *= e;
    }
    if (cells > max_cells)
      throw ResourceLimit("coverage grid exceeds " + std::to_string(max_cells) +
                          " cells");
  }

  std::size_t index_of(std::size_t k, Coord c) const {
    return static_cast<std::size_t>(
        std::lower_bound(axes[k].begin(), axes[k].end(), c) - axes[k].begin());
  }

  // Marks every cell inside some box.
  std::vector<bool> covered(std::span<const Box> boxes) const {
    const std::size_t d = axes.size();
    std::vector<bool> mark(cells, false);
    std::vector<std::size_t> lo(d), hi(d), cur(d);
    for (const auto& b : boxes) {
      bool empty = false;
      for (std::size_t k = 0; k < d; ++k) {
        lo[k] = index_of(k, b.lo[k]);
        hi[k] = index_of(k, b.hi[k]);
        if (lo[k] >= hi[k]) empty = true;
      }
      if (empty) continue;
      cur = lo;
      while (true) {
        std::size_t flat = 0;
        for (std::size_t k = 0; k < d; ++k) flat = flat * extent[k] + cur[k];
        mark[flat] = true;
        std::size_t k = d;
        while (k > 0) {
          --k;
          if (++cur[k] < hi[k]) break;
          cur[k] = lo[k];
          if (k == 0) goto next_box;
        }
        if (d == 0) break;
      }
    next_box:;
    }
    return mark;
  }

  std::vector<std::size_t> unflatten(std::size_t flat) const {
    std::vector<std::size_t> idx(axes.size());
    for (std::size_t k = axes.size(); k-- > 0;) {
      idx[k] = flat % extent[k];
      flat /= extent[k];
    }
    return idx;
  }
};

}  // namespace

Discretization coverage_discretization(std::span<const Box> boxes,
                                       std::size_t max_cells) {
  Discretization disc;
  if (boxes.empty()) return disc;
  Grid grid(boxes, max_cells);
  const auto mark = grid.covered(boxes);
  for (std::size_t flat = 0; flat < grid.cells; ++flat) {
    if (!mark[flat]) continue;
    const auto idx = grid.unflatten(flat);
    Point p;
    p.coords.resize(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const Coord a = grid.axes[k][idx[k]], b = grid.axes[k][idx[k] + 1];
      p.coords[k] = a + (b - a) / 2;
    }
    disc.points.push_back(std::move(p));
  }
  return disc;
}

Discretization coverage_discretization(const Instance& inst, std::size_t max_cells) {
  if (inst.boxes.empty()) throw InvalidInput("instance has no boxes");
  const auto sb = scaled_boxes(inst.boxes);
  return coverage_discretization(sb, max_cells);
}

Rational union_volume(std::span<const Box> boxes, std::size_t max_cells) {
  if (boxes.empty()) return Rational(0);
  Grid grid(boxes, max_cells);
  const auto mark = grid.covered(boxes);
  BigInt total = 0;
  for (std::size_t flat = 0; flat < grid.cells; ++flat) {
    if (!mark[flat]) continue;
    const auto idx = grid.unflatten(flat);
    BigInt vol = 1;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const Coord w = grid.axes[k][idx[k] + 1] - grid.axes[k][idx[k]];
      vol *= BigInt(static_cast<long>(w));
    }
    total += vol;
  }
  return Rational(total);
}

std::vector<Box> select_boxes(const Instance& inst,
                              std::span<const std::size_t> indices) {
  std::vector<Box> out;
  out.reserve(indices.size());
  for (auto i : indices) {
    if (i >= inst.boxes.size())
      throw InvalidInput("box index " + std::to_string(i) + " out of range");
    out.push_back(inst.boxes[i]);
  }
  return out;
}

bool covers_same_region(std::span<const std::size_t> candidate,
                        const Instance& inst, std::size_t max_cells) {
  const auto chosen = select_boxes(inst, candidate);
  // Volumes are compared on one shared grid so the cap applies uniformly.
  return union_volume(chosen, max_cells) == union_volume(inst.boxes, max_cells);
}

bool covers_points(std::span<const std::size_t> candidate, const Instance& inst,
                   const Discretization& disc) {
  const auto chosen = scaled_boxes(select_boxes(inst, candidate));
  for (const auto& p : disc.points) {
    const bool hit = std::any_of(chosen.begin(), chosen.end(),
                                 [&](const Box& b) { return b.contains(p.coords); });
    if (!hit) return false;
  }
  return true;
}

NaiveWeightTable::NaiveWeightTable(std::vector<Point> points) {
  for (auto& p : points) weights_.emplace(std::move(p), Rational(1));
}

Rational NaiveWeightTable::query(const Box& b) const {
  Rational sum = 0;
  for (const auto& [p, w] : weights_)
    if (b.contains(p.coords)) sum += w;
  return sum;
}

void NaiveWeightTable::update(const Box& b, const Rational& alpha) {
  if (alpha < 0) throw InvalidInput("update factor must be non-negative");
  for (auto& [p, w] : weights_)
    if (b.contains(p.coords)) w *= alpha;
}

const Rational& NaiveWeightTable::weight(const Point& p) const {
  auto it = weights_.find(p);
  if (it == weights_.end()) throw InvalidInput("point is not in the table");
  return it->second;
}

Rational NaiveWeightTable::total() const {
  Rational sum = 0;
  for (const auto& [p, w] : weights_) sum += w;
  return sum;
}

}  // namespace covker
