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
#include <map>
#include <span>
#include <vector>

#include "covker/geometry.hpp"
#include "covker/rational.hpp"

namespace covker {

inline constexpr std::size_t kDefaultMaxCells = 10'000'000;

/// Explicit coverage discretization: one midpoint per fully covered cell of
/// the grid spanned by every box facet. Points live on the doubled grid.
struct Discretization {
  std::vector<Point> points;
  std::size_t size() const { return points.size(); }
};

/// `boxes` are already on the doubled grid (see scaled_boxes).
Discretization coverage_discretization(std::span<const Box> boxes,
                                       std::size_t max_cells = kDefaultMaxCells);
Discretization coverage_discretization(const Instance& inst,
                                       std::size_t max_cells = kDefaultMaxCells);

/// Exact volume of the union by coordinate compression, in the units of the
/// given boxes.
Rational union_volume(std::span<const Box> boxes,
                      std::size_t max_cells = kDefaultMaxCells);

/// Subset of `inst.boxes` selected by index.
std::vector<Box> select_boxes(const Instance& inst,
                              std::span<const std::size_t> indices);

/// Volume-equality test: the candidate covers exactly the region of all boxes.
bool covers_same_region(std::span<const std::size_t> candidate,
                        const Instance& inst,
                        std::size_t max_cells = kDefaultMaxCells);

/// Point-based test: every point of `disc` lies in some candidate box.
/// `disc` must come from the doubled grid of `inst`.
bool covers_points(std::span<const std::size_t> candidate, const Instance& inst,
                   const Discretization& disc);

/// Reference weight index: an explicit weight per point, linear-time query
/// and update. Boxes are on the same grid as the points.
class NaiveWeightTable {
 public:
  explicit NaiveWeightTable(std::vector<Point> points);
  explicit NaiveWeightTable(const Discretization& disc)
      : NaiveWeightTable(disc.points) {}

  Rational query(const Box& b) const;
  void update(const Box& b, const Rational& alpha);

  const Rational& weight(const Point& p) const;
  Rational total() const;
  std::size_t size() const { return weights_.size(); }
  const std::map<Point, Rational>& weights() const { return weights_; }

 private:
  std::map<Point, Rational> weights_;
};

}  // namespace covker
