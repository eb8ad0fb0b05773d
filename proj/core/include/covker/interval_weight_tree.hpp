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
#include <optional>
#include <span>
#include <vector>

#include "covker/geometry.hpp"
#include "covker/rational.hpp"

namespace covker {

/// Aggregates over the points of a coordinate range. Minima and maxima over
/// an empty set are absent.
struct RangeAggregates {
  Rational sum = 0;
  std::optional<Rational> min_weight;
  std::optional<Rational> max_weight;
  Rational covered_sum = 0;
  std::optional<Rational> covered_min;
  std::optional<Rational> covered_max;
  Rational uncovered_sum = 0;
  std::size_t uncovered_cnt = 0;
};

/// Balanced tree over a static, strictly increasing set of 1-D points with
/// multiplicative lazy tags. The weight of the point at leaf v is the product
/// of mu(u) over every node u on the root-to-v path. Each point also carries
/// a static covered/uncovered mark, and every node keeps aggregates split by
/// mark so callers can exclude points they do not want to count.
class IntervalWeightTree {
 public:
  IntervalWeightTree() = default;
  /// Throws InvalidInput if points are not strictly increasing or the mark
  /// vector has a different length.
  IntervalWeightTree(std::vector<Coord> points, std::vector<bool> covered);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  /// Number of levels on the longest root-to-leaf path.
  std::size_t height() const { return height_; }

  const std::vector<Coord>& points() const { return points_; }
  bool covered(std::size_t i) const { return marks_[i]; }
  /// Index of `x` among the points, if present.
  std::optional<std::size_t> index_of(Coord x) const;

  /// Sum of weights of points in [a,b]. Empty range gives 0.
  Rational total_weight(Coord a, Coord b) const;
  Rational total() const;

  /// Multiplies by alpha >= 0 the weight of every point in [a,b].
  void update_weights(Coord a, Coord b, const Rational& alpha);

  RangeAggregates range_aggregates(Coord a, Coord b) const;
  RangeAggregates root_aggregates() const;

  Rational weight_at(std::size_t i) const;
  std::size_t argmin_all() const;
  std::size_t argmax_all() const;
  /// Absent when no point is covered.
  std::optional<std::size_t> argmin_covered() const;
  std::optional<std::size_t> argmax_covered() const;

  /// Index drawn with probability proportional to weight, given u in [0,1).
  /// Requires total() > 0.
  std::size_t sample(double u) const;

  /// Nodes touched by the most recent query or update.
  std::size_t last_visits() const { return last_visits_; }

 private:
  struct Node {
    Rational mu = 1;
    Rational omega = 1;
    Rational min_w = 1;
    Rational max_w = 1;
    Rational covered_sum = 0;
    std::optional<Rational> covered_min;
    std::optional<Rational> covered_max;
    Rational uncovered_sum = 0;
    std::size_t uncovered_cnt = 0;
    Coord lo = 0;  // min(v)
    Coord hi = 0;  // max(v)
    int left = -1;
    int right = -1;
    std::size_t first = 0;  // leaf range [first, last)
    std::size_t last = 0;
  };

  int build(std::size_t first, std::size_t last, std::size_t depth);
  void pull(Node& v);
  RangeAggregates aggregates_of(const Node& v) const;
  Rational query(int t, std::optional<Coord> a, std::optional<Coord> b) const;
  void update(int t, std::optional<Coord> a, std::optional<Coord> b,
              const Rational& alpha);
  RangeAggregates collect(int t, std::optional<Coord> a,
                          std::optional<Coord> b) const;

  std::vector<Coord> points_;
  std::vector<bool> marks_;
  std::vector<Node> nodes_;
  int root_ = -1;
  std::size_t height_ = 0;
  mutable std::size_t last_visits_ = 0;
};

}  // namespace covker
