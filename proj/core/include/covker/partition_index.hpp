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
#include <random>
#include <span>
#include <vector>

#include "covker/geometry.hpp"
#include "covker/interval_weight_tree.hpp"
#include "covker/rational.hpp"

namespace covker {

/// Weight index over the coverage discretization of a box set, without
/// materializing it.
///
/// Space is split by a binary partition tree until every box is, inside each
/// leaf cell, either containing the cell or a slab (spans the cell in all but
/// one axis). A leaf represents the Cartesian product of one 1-D point set
/// per axis, and stores one IntervalWeightTree per axis; a point's weight is
/// the product of its per-axis weights times the mu tags on its root path.
///
/// Product-grid points covered by no box ("phantoms") are kept in the raw
/// totals but excluded from every covered_* aggregate. A point is real iff
/// the leaf is fully covered or one of its coordinates is marked in that
/// axis's tree (the union of the axis's slab projections).
///
/// All coordinates are on the doubled grid (see scaled_boxes).
class PartitionIndex {
 public:
  struct BuildStats {
    std::size_t node_count = 0;
    std::size_t leaf_count = 0;
    std::size_t depth = 0;
    std::size_t max_slabs_per_leaf = 0;
    std::size_t total_slab_entries = 0;
    std::size_t max_leaves_per_box = 0;
    std::size_t represented_points = 0;
    bool audit_passed = false;
  };

  struct CoveredSummary {
    Rational total = 0;
    std::optional<Rational> min;
    std::optional<Point> min_point;
  };

  struct RepresentedPoint {
    Point point;
    bool real = false;
  };

  explicit PartitionIndex(std::span<const Box> scaled_boxes);
  /// Builds from the raw instance (doubles the coordinates itself).
  static PartitionIndex from_instance(const Instance& inst);

  std::size_t dim() const { return dim_; }
  const Box& bounding_cell() const { return nodes_[0].cell; }
  const std::vector<Box>& boxes() const { return boxes_; }
  const BuildStats& stats() const { return stats_; }

  /// Total weight of represented points inside `b`. For any box of the
  /// instance every such point is real.
  Rational query(const Box& b) const;

  /// Multiplies by alpha >= 0 the weight of every represented point in `b`.
  /// `b` must be an instance box or contain every leaf cell it cuts.
  void update(const Box& b, const Rational& alpha);

  CoveredSummary covered_summary() const;
  std::optional<Rational> covered_max() const;
  Rational raw_total() const { return nodes_[0].omega; }

  /// A real point of weight < threshold, if one exists.
  std::optional<Point> find_light_point(const Rational& threshold) const;

  /// A real point drawn with probability proportional to its weight.
  /// Throws StateError when the covered total is zero.
  Point sample_covered_point(std::mt19937_64& rng) const;

  /// Weight of a represented point; throws InvalidInput otherwise.
  Rational point_weight(const Point& p) const;
  bool is_real(const Point& p) const;

  /// Every represented point with its real/phantom flag (test support).
  std::vector<RepresentedPoint> represented_points() const;

  /// Nodes (internal and leaf) visited by the last query or update.
  std::size_t last_visits() const { return last_visits_; }

  /// Re-checks the tiling and slab invariants; throws InternalError.
  void audit() const;

 private:
  struct Slab {
    std::size_t box;
    std::size_t axis;
  };

  struct Leaf {
    std::vector<IntervalWeightTree> axes;
    std::vector<Slab> slabs;
    bool fully_covered = false;
  };

  struct Node {
    Box cell;  // half-open [lo, hi) except along the global upper boundary
    Rational mu = 1;
    Rational omega = 0;
    Rational covered_sum = 0;
    std::optional<Rational> covered_min;
    std::optional<Rational> covered_max;
    int left = -1;
    int right = -1;
    int leaf = -1;
    std::vector<std::size_t> relevant;  // boxes cutting the cell's interior
  };

  int build(Box cell, const std::vector<std::size_t>& candidates,
            std::size_t depth);
  Leaf make_leaf(const Box& cell, const std::vector<std::size_t>& relevant) const;
  void pull(Node& v);
  Rational query(int t, const Box& b) const;
  void update(int t, const Box& b, const Rational& alpha);
  int descend_to_leaf(const Point& p, Rational* mu_product) const;
  std::optional<std::size_t> slab_axis(const Box& b, const Box& cell) const;
  void enumerate_leaf(const Leaf& leaf, const Rational& mu,
                      std::vector<RepresentedPoint>& out,
                      std::vector<Rational>* weights) const;

  std::size_t dim_ = 0;
  std::vector<Box> boxes_;
  std::vector<Node> nodes_;
  std::vector<Leaf> leaves_;
  BuildStats stats_;
  mutable std::size_t last_visits_ = 0;
};

}  // namespace covker
