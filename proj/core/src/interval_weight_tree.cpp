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

#include "covker/interval_weight_tree.hpp"

#include <algorithm>
#include <cmath>

#include "covker/errors.hpp"

namespace covker {

namespace {

using Bound = std::optional<Coord>;

bool disjoint(Bound a, Bound b, Coord lo, Coord hi) {
  return (b && *b < lo) || (a && *a > hi);
}

bool encloses(Bound a, Bound b, Coord lo, Coord hi) {
  return (!a || *a <= lo) && (!b || *b >= hi);
}

void scale(RangeAggregates& g, const Rational& mu) {
  g.sum *= mu;
  if (g.min_weight) *g.min_weight *= mu;
  if (g.max_weight) *g.max_weight *= mu;
  g.covered_sum *= mu;
  if (g.covered_min) *g.covered_min *= mu;
  if (g.covered_max) *g.covered_max *= mu;
  g.uncovered_sum *= mu;
}

RangeAggregates merge(RangeAggregates a, const RangeAggregates& b) {
  a.sum += b.sum;
  a.min_weight = min_present(a.min_weight, b.min_weight);
  a.max_weight = max_present(a.max_weight, b.max_weight);
  a.covered_sum += b.covered_sum;
  a.covered_min = min_present(a.covered_min, b.covered_min);
  a.covered_max = max_present(a.covered_max, b.covered_max);
  a.uncovered_sum += b.uncovered_sum;
  a.uncovered_cnt += b.uncovered_cnt;
  return a;
}

}  // namespace

IntervalWeightTree::IntervalWeightTree(std::vector<Coord> points,
                                       std::vector<bool> covered)
    : points_(std::move(points)), marks_(std::move(covered)) {
  if (points_.size() != marks_.size())
    throw InvalidInput("interval tree: marks and points differ in length");
  for (std::size_t i = 1; i < points_.size(); ++i)
    if (points_[i - 1] >= points_[i])
      throw InvalidInput("interval tree: points must be strictly increasing");
  if (points_.empty()) return;
  nodes_.reserve(2 * points_.size());
  root_ = build(0, points_.size(), 1);
}

int IntervalWeightTree::build(std::size_t first, std::size_t last,
                              std::size_t depth) {
  height_ = std::max(height_, depth);
  const int id = static_cast<int>(nodes_.size());
  nodes_.emplace_back();
  nodes_[id].first = first;
  nodes_[id].last = last;
  nodes_[id].lo = points_[first];
  nodes_[id].hi = points_[last - 1];
  if (last - first == 1) {
    Node& v = nodes_[id];
    if (marks_[first]) {
      v.covered_sum = 1;
      v.covered_min = Rational(1);
      v.covered_max = Rational(1);
    } else {
      v.uncovered_sum = 1;
      v.uncovered_cnt = 1;
    }
    return id;
  }
  const std::size_t mid = first + (last - first) / 2;
  const int l = build(first, mid, depth + 1);
  const int r = build(mid, last, depth + 1);
  nodes_[id].left = l;
  nodes_[id].right = r;
  pull(nodes_[id]);
  return id;
}

// Restores the aggregates of an internal node from its children.
void IntervalWeightTree::pull(Node& v) {
  const Node& l = nodes_[v.left];
  const Node& r = nodes_[v.right];
  v.omega = v.mu * (l.omega + r.omega);
  v.min_w = v.mu * std::min(l.min_w, r.min_w);
  v.max_w = v.mu * std::max(l.max_w, r.max_w);
  v.covered_sum = v.mu * (l.covered_sum + r.covered_sum);
  v.covered_min = min_present(l.covered_min, r.covered_min);
  if (v.covered_min) *v.covered_min *= v.mu;
  v.covered_max = max_present(l.covered_max, r.covered_max);
  if (v.covered_max) *v.covered_max *= v.mu;
  v.uncovered_sum = v.mu * (l.uncovered_sum + r.uncovered_sum);
  v.uncovered_cnt = l.uncovered_cnt + r.uncovered_cnt;
}

std::optional<std::size_t> IntervalWeightTree::index_of(Coord x) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), x);
  if (it == points_.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

Rational IntervalWeightTree::query(int t, Bound a, Bound b) const {
  ++last_visits_;
  const Node& v = nodes_[t];
  if (disjoint(a, b, v.lo, v.hi)) return 0;
  if (encloses(a, b, v.lo, v.hi)) return v.omega;
  const Node& l = nodes_[v.left];
  const Node& r = nodes_[v.right];
  if (a && *a > l.hi) return v.mu * query(v.right, a, b);
  if (b && *b < r.lo) return v.mu * query(v.left, a, b);
  return v.mu * (query(v.left, a, std::nullopt) + query(v.right, std::nullopt, b));
}

Rational IntervalWeightTree::total_weight(Coord a, Coord b) const {
  last_visits_ = 0;
  if (root_ < 0 || a > b) return 0;
  return query(root_, a, b);
}

Rational IntervalWeightTree::total() const {
  return root_ < 0 ? Rational(0) : nodes_[root_].omega;
}

void IntervalWeightTree::update(int t, Bound a, Bound b, const Rational& alpha) {
  ++last_visits_;
  Node& v = nodes_[t];
  if (disjoint(a, b, v.lo, v.hi)) return;
  if (encloses(a, b, v.lo, v.hi)) {
    v.mu *= alpha;
    v.omega *= alpha;
    v.min_w *= alpha;
    v.max_w *= alpha;
    v.covered_sum *= alpha;
    if (v.covered_min) *v.covered_min *= alpha;
    if (v.covered_max) *v.covered_max *= alpha;
    v.uncovered_sum *= alpha;
    return;
  }
  const Coord left_hi = nodes_[v.left].hi;
  const Coord right_lo = nodes_[v.right].lo;
  if (a && *a > left_hi) {
    update(v.right, a, b, alpha);
  } else if (b && *b < right_lo) {
    update(v.left, a, b, alpha);
  } else {
    update(v.left, a, std::nullopt, alpha);
    update(v.right, std::nullopt, b, alpha);
  }
  pull(nodes_[t]);
}

void IntervalWeightTree::update_weights(Coord a, Coord b, const Rational& alpha) {
  if (alpha < 0) throw InvalidInput("update factor must be non-negative");
  last_visits_ = 0;
  if (root_ < 0 || a > b) return;
  update(root_, a, b, alpha);
}

RangeAggregates IntervalWeightTree::aggregates_of(const Node& v) const {
  RangeAggregates g;
  g.sum = v.omega;
  g.min_weight = v.min_w;
  g.max_weight = v.max_w;
  g.covered_sum = v.covered_sum;
  g.covered_min = v.covered_min;
  g.covered_max = v.covered_max;
  g.uncovered_sum = v.uncovered_sum;
  g.uncovered_cnt = v.uncovered_cnt;
  return g;
}

RangeAggregates IntervalWeightTree::collect(int t, Bound a, Bound b) const {
  ++last_visits_;
  const Node& v = nodes_[t];
  if (disjoint(a, b, v.lo, v.hi)) return {};
  if (encloses(a, b, v.lo, v.hi)) return aggregates_of(v);
  const Node& l = nodes_[v.left];
  const Node& r = nodes_[v.right];
  RangeAggregates g;
  if (a && *a > l.hi) {
    g = collect(v.right, a, b);
  } else if (b && *b < r.lo) {
    g = collect(v.left, a, b);
  } else {
    g = merge(collect(v.left, a, std::nullopt), collect(v.right, std::nullopt, b));
  }
  scale(g, v.mu);
  return g;
}

RangeAggregates IntervalWeightTree::range_aggregates(Coord a, Coord b) const {
  last_visits_ = 0;
  if (root_ < 0 || a > b) return {};
  return collect(root_, a, b);
}

RangeAggregates IntervalWeightTree::root_aggregates() const {
  if (root_ < 0) return {};
  return aggregates_of(nodes_[root_]);
}

Rational IntervalWeightTree::weight_at(std::size_t i) const {
  Rational w = 1;
  int t = root_;
  while (t >= 0) {
    const Node& v = nodes_[t];
    w *= v.mu;
    if (v.left < 0) break;
    t = i < nodes_[v.left].last ? v.left : v.right;
  }
  return w;
}

std::size_t IntervalWeightTree::argmin_all() const {
  int t = root_;
  while (nodes_[t].left >= 0) {
    const Node& v = nodes_[t];
    t = nodes_[v.left].min_w <= nodes_[v.right].min_w ? v.left : v.right;
  }
  return nodes_[t].first;
}

std::size_t IntervalWeightTree::argmax_all() const {
  int t = root_;
  while (nodes_[t].left >= 0) {
    const Node& v = nodes_[t];
    t = nodes_[v.left].max_w >= nodes_[v.right].max_w ? v.left : v.right;
  }
  return nodes_[t].first;
}

std::optional<std::size_t> IntervalWeightTree::argmin_covered() const {
  if (root_ < 0 || !nodes_[root_].covered_min) return std::nullopt;
  int t = root_;
  while (nodes_[t].left >= 0) {
    const Node& v = nodes_[t];
    const auto& lm = nodes_[v.left].covered_min;
    const auto& rm = nodes_[v.right].covered_min;
    t = (lm && (!rm || *lm <= *rm)) ? v.left : v.right;
  }
  return nodes_[t].first;
}

std::optional<std::size_t> IntervalWeightTree::argmax_covered() const {
  if (root_ < 0 || !nodes_[root_].covered_max) return std::nullopt;
  int t = root_;
  while (nodes_[t].left >= 0) {
    const Node& v = nodes_[t];
    const auto& lm = nodes_[v.left].covered_max;
    const auto& rm = nodes_[v.right].covered_max;
    t = (lm && (!rm || *lm >= *rm)) ? v.left : v.right;
  }
  return nodes_[t].first;
}

std::size_t IntervalWeightTree::sample(double u) const {
  if (root_ < 0 || total() <= 0)
    throw StateError("cannot sample from a tree with zero total weight");
  int t = root_;
  while (nodes_[t].left >= 0) {
    const Node& v = nodes_[t];
    const Rational& wl = nodes_[v.left].omega;
    const Rational& wr = nodes_[v.right].omega;
    if (wr == 0) { t = v.left; continue; }
    if (wl == 0) { t = v.right; continue; }
    const double frac = Rational(wl / (wl + wr)).get_d();
    if (u < frac) {
      u = u / frac;
      t = v.left;
    } else {
      u = (u - frac) / (1.0 - frac);
      t = v.right;
    }
    u = std::clamp(u, 0.0, std::nextafter(1.0, 0.0));
  }
  return nodes_[t].first;
}

}  // namespace covker
