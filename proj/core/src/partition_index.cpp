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

#include "covker/partition_index.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "covker/errors.hpp"

namespace covker {

namespace {

bool encloses(const Box& b, const Box& cell) { return b.contains(cell); }

bool misses(const Box& b, const Box& cell) { return !b.overlaps_interior(cell); }

Rational product(const std::vector<Rational>& xs, std::size_t skip) {
  Rational p = 1;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (i != skip) p *= xs[i];
  return p;
}

constexpr std::size_t kNoSkip = static_cast<std::size_t>(-1);
constexpr int kMaxRejections = 64;

}  // namespace

PartitionIndex::PartitionIndex(std::span<const Box> scaled_boxes)
    : boxes_(scaled_boxes.begin(), scaled_boxes.end()) {
  if (boxes_.empty()) throw InvalidInput("weight index needs at least one box");
  dim_ = boxes_.front().dim();
  for (const auto& b : boxes_) {
    if (b.dim() != dim_) throw InvalidInput("dimension mismatch in box set");
    for (std::size_t k = 0; k < dim_; ++k)
      if (b.lo[k] >= b.hi[k]) throw InvalidInput("degenerate box");
  }
  std::vector<std::size_t> all(boxes_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  build(bounding_box(boxes_), all, 1);

  std::vector<std::size_t> leaves_per_box(boxes_.size(), 0);
  for (const auto& leaf : leaves_) {
    stats_.max_slabs_per_leaf = std::max(stats_.max_slabs_per_leaf, leaf.slabs.size());
    stats_.total_slab_entries += leaf.slabs.size();
    std::size_t pts = 1;
    for (const auto& t : leaf.axes) pts *= t.size();
    stats_.represented_points += pts;
    for (const auto& s : leaf.slabs) ++leaves_per_box[s.box];
  }
  stats_.node_count = nodes_.size();
  stats_.leaf_count = leaves_.size();
  stats_.max_leaves_per_box =
      *std::max_element(leaves_per_box.begin(), leaves_per_box.end());
  audit();
  stats_.audit_passed = true;
}

PartitionIndex PartitionIndex::from_instance(const Instance& inst) {
  inst.validate();
  const auto sb = scaled_boxes(inst.boxes);
  return PartitionIndex(sb);
}

std::optional<std::size_t> PartitionIndex::slab_axis(const Box& b,
                                                     const Box& cell) const {
  std::optional<std::size_t> axis;
  for (std::size_t k = 0; k < dim_; ++k) {
    if (b.lo[k] <= cell.lo[k] && b.hi[k] >= cell.hi[k]) continue;
    if (axis) return std::nullopt;
    axis = k;
  }
  return axis;
}

int PartitionIndex::build(Box cell, const std::vector<std::size_t>& candidates,
                          std::size_t depth) {
  stats_.depth = std::max(stats_.depth, depth);
  const int id = static_cast<int>(nodes_.size());
  nodes_.emplace_back();
  nodes_[id].cell = cell;

  std::vector<std::size_t> relevant;
  std::vector<std::size_t> bad;
  for (auto i : candidates) {
    const Box& b = boxes_[i];
    if (misses(b, cell)) continue;
    relevant.push_back(i);
    if (!encloses(b, cell) && !slab_axis(b, cell)) bad.push_back(i);
  }

  if (bad.empty()) {
    nodes_[id].leaf = static_cast<int>(leaves_.size());
    leaves_.push_back(make_leaf(cell, relevant));
    nodes_[id].relevant = std::move(relevant);
    pull(nodes_[id]);
    return id;
  }

  // Split at a median facet of the boxes that are neither slabs nor
  // containing, cycling through the axes.
  std::size_t axis = 0;
  Coord cut = 0;
  bool found = false;
  for (std::size_t step = 0; step < dim_ && !found; ++step) {
    axis = (depth - 1 + step) % dim_;
    std::vector<Coord> facets;
    for (auto i : bad) {
      for (Coord c : {boxes_[i].lo[axis], boxes_[i].hi[axis]})
        if (c > cell.lo[axis] && c < cell.hi[axis]) facets.push_back(c);
    }
    if (facets.empty()) continue;
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    cut = facets[facets.size() / 2];
    found = true;
  }
  if (!found) throw InternalError("partition: no admissible split for a cell");

  Box left_cell = cell, right_cell = cell;
  left_cell.hi[axis] = cut;
  right_cell.lo[axis] = cut;
  const int l = build(left_cell, relevant, depth + 1);
  const int r = build(right_cell, relevant, depth + 1);
  nodes_[id].left = l;
  nodes_[id].right = r;
  nodes_[id].relevant = std::move(relevant);
  pull(nodes_[id]);
  return id;
}

PartitionIndex::Leaf PartitionIndex::make_leaf(
    const Box& cell, const std::vector<std::size_t>& relevant) const {
  Leaf leaf;
  std::vector<std::vector<Coord>> breaks(dim_);
  std::vector<std::vector<std::pair<Coord, Coord>>> spans(dim_);
  for (std::size_t k = 0; k < dim_; ++k) breaks[k] = {cell.lo[k], cell.hi[k]};
  for (auto i : relevant) {
    const Box& b = boxes_[i];
    if (encloses(b, cell)) {
      leaf.fully_covered = true;
      continue;
    }
    const std::size_t k = *slab_axis(b, cell);
    const Coord lo = std::max(b.lo[k], cell.lo[k]);
    const Coord hi = std::min(b.hi[k], cell.hi[k]);
    breaks[k].push_back(lo);
    breaks[k].push_back(hi);
    spans[k].emplace_back(lo, hi);
    leaf.slabs.push_back({i, k});
  }
  for (std::size_t k = 0; k < dim_; ++k) {
    auto& br = breaks[k];
    std::sort(br.begin(), br.end());
    br.erase(std::unique(br.begin(), br.end()), br.end());
    std::vector<Coord> mids;
    std::vector<bool> marks;
    for (std::size_t j = 0; j + 1 < br.size(); ++j) {
      const Coord m = br[j] + (br[j + 1] - br[j]) / 2;
      mids.push_back(m);
      marks.push_back(std::any_of(spans[k].begin(), spans[k].end(), [&](auto s) {
        return s.first <= m && m <= s.second;
      }));
    }
    leaf.axes.emplace_back(std::move(mids), std::move(marks));
  }
  return leaf;
}

void PartitionIndex::pull(Node& v) {
  if (v.leaf >= 0) {
    const Leaf& leaf = leaves_[v.leaf];
    std::vector<RangeAggregates> agg;
    std::vector<Rational> sums, mins, maxs, unc;
    for (const auto& t : leaf.axes) {
      agg.push_back(t.root_aggregates());
      sums.push_back(agg.back().sum);
      mins.push_back(*agg.back().min_weight);
      maxs.push_back(*agg.back().max_weight);
      unc.push_back(agg.back().uncovered_sum);
    }
    v.omega = v.mu * product(sums, kNoSkip);
    if (leaf.fully_covered) {
      v.covered_sum = v.omega;
      v.covered_min = v.mu * product(mins, kNoSkip);
      v.covered_max = v.mu * product(maxs, kNoSkip);
      return;
    }
    // Phantoms are exactly the points whose every coordinate is unmarked.
    v.covered_sum = v.mu * (product(sums, kNoSkip) - product(unc, kNoSkip));
    v.covered_min.reset();
    v.covered_max.reset();
    for (std::size_t i = 0; i < dim_; ++i) {
      if (agg[i].covered_min)
        v.covered_min = min_present(
            v.covered_min, Rational(*agg[i].covered_min * product(mins, i)));
      if (agg[i].covered_max)
        v.covered_max = max_present(
            v.covered_max, Rational(*agg[i].covered_max * product(maxs, i)));
    }
    if (v.covered_min) *v.covered_min *= v.mu;
    if (v.covered_max) *v.covered_max *= v.mu;
    return;
  }
  const Node& l = nodes_[v.left];
  const Node& r = nodes_[v.right];
  v.omega = v.mu * (l.omega + r.omega);
  v.covered_sum = v.mu * (l.covered_sum + r.covered_sum);
  v.covered_min = min_present(l.covered_min, r.covered_min);
  if (v.covered_min) *v.covered_min *= v.mu;
  v.covered_max = max_present(l.covered_max, r.covered_max);
  if (v.covered_max) *v.covered_max *= v.mu;
}

Rational PartitionIndex::query(int t, const Box& b) const {
  ++last_visits_;
  const Node& v = nodes_[t];
  if (misses(b, v.cell)) return 0;
  if (encloses(b, v.cell)) return v.omega;
  if (v.leaf >= 0) {
    // The points inside b form a product of per-axis ranges.
    Rational w = v.mu;
    for (std::size_t k = 0; k < dim_; ++k) {
      w *= leaves_[v.leaf].axes[k].total_weight(b.lo[k], b.hi[k]);
      if (w == 0) break;
    }
    return w;
  }
  return v.mu * (query(v.left, b) + query(v.right, b));
}

Rational PartitionIndex::query(const Box& b) const {
  if (b.dim() != dim_) throw InvalidInput("query box has wrong arity");
  last_visits_ = 0;
  return query(0, b);
}

void PartitionIndex::update(int t, const Box& b, const Rational& alpha) {
  ++last_visits_;
  Node& v = nodes_[t];
  if (misses(b, v.cell)) return;
  if (encloses(b, v.cell)) {
    v.mu *= alpha;
    v.omega *= alpha;
    v.covered_sum *= alpha;
    if (v.covered_min) *v.covered_min *= alpha;
    if (v.covered_max) *v.covered_max *= alpha;
    return;
  }
  if (v.leaf >= 0) {
    const auto axis = slab_axis(b, v.cell);
    if (!axis)
      throw InvalidInput("update box is not a slab of the partition leaf it cuts");
    leaves_[v.leaf].axes[*axis].update_weights(b.lo[*axis], b.hi[*axis], alpha);
    pull(nodes_[t]);
    return;
  }
  update(v.left, b, alpha);
  update(v.right, b, alpha);
  pull(nodes_[t]);
}

void PartitionIndex::update(const Box& b, const Rational& alpha) {
  if (alpha < 0) throw InvalidInput("update factor must be non-negative");
  if (b.dim() != dim_) throw InvalidInput("update box has wrong arity");
  last_visits_ = 0;
  update(0, b, alpha);
}

PartitionIndex::CoveredSummary PartitionIndex::covered_summary() const {
  CoveredSummary s;
  const Node& root = nodes_[0];
  s.total = root.covered_sum;
  s.min = root.covered_min;
  if (!s.min) return s;

  int t = 0;
  while (nodes_[t].leaf < 0) {
    const Node& v = nodes_[t];
    const auto& lm = nodes_[v.left].covered_min;
    const auto& rm = nodes_[v.right].covered_min;
    t = (lm && (!rm || *lm <= *rm)) ? v.left : v.right;
  }
  const Leaf& leaf = leaves_[nodes_[t].leaf];
  Point p;
  p.coords.resize(dim_);
  if (leaf.fully_covered) {
    for (std::size_t k = 0; k < dim_; ++k)
      p.coords[k] = leaf.axes[k].points()[leaf.axes[k].argmin_all()];
  } else {
    std::vector<Rational> mins;
    for (const auto& tr : leaf.axes) mins.push_back(*tr.root_aggregates().min_weight);
    std::optional<Rational> best;
    std::size_t best_axis = 0;
    for (std::size_t i = 0; i < dim_; ++i) {
      const auto cm = leaf.axes[i].root_aggregates().covered_min;
      if (!cm) continue;
      Rational w = *cm * product(mins, i);
      if (!best || w < *best) {
        best = w;
        best_axis = i;
      }
    }
    for (std::size_t k = 0; k < dim_; ++k) {
      const auto& tr = leaf.axes[k];
      const std::size_t idx = k == best_axis ? *tr.argmin_covered() : tr.argmin_all();
      p.coords[k] = tr.points()[idx];
    }
  }
  s.min_point = std::move(p);
  return s;
}

std::optional<Rational> PartitionIndex::covered_max() const {
  return nodes_[0].covered_max;
}

std::optional<Point> PartitionIndex::find_light_point(const Rational& threshold) const {
  if (threshold < 0) throw InvalidInput("threshold must be non-negative");
  const auto& m = nodes_[0].covered_min;
  if (!m || *m >= threshold) return std::nullopt;
  return covered_summary().min_point;
}

Point PartitionIndex::sample_covered_point(std::mt19937_64& rng) const {
  if (nodes_[0].covered_sum <= 0)
    throw StateError("cannot sample: covered weight is zero");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int t = 0;
  while (nodes_[t].leaf < 0) {
    const Node& v = nodes_[t];
    const Rational& wl = nodes_[v.left].covered_sum;
    const Rational& wr = nodes_[v.right].covered_sum;
    if (wr == 0) {
      t = v.left;
    } else if (wl == 0) {
      t = v.right;
    } else {
      const double frac = Rational(wl / (wl + wr)).get_d();
      t = unit(rng) < frac ? v.left : v.right;
    }
  }
  const Leaf& leaf = leaves_[nodes_[t].leaf];
  Point p;
  p.coords.resize(dim_);
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    bool real = leaf.fully_covered;
    for (std::size_t k = 0; k < dim_; ++k) {
      const auto& tr = leaf.axes[k];
      const std::size_t idx = tr.sample(unit(rng));
      p.coords[k] = tr.points()[idx];
      real = real || tr.covered(idx);
    }
    if (real) return p;
  }
  // Mostly phantom mass: fall back to an explicit weighted choice.
  std::vector<RepresentedPoint> pts;
  std::vector<Rational> weights;
  enumerate_leaf(leaf, Rational(1), pts, &weights);
  Rational total = 0;
  for (std::size_t j = 0; j < pts.size(); ++j)
    if (pts[j].real) total += weights[j];
  Rational target = total * Rational(unit(rng));
  Rational acc = 0;
  std::optional<std::size_t> last_real;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    if (!pts[j].real || weights[j] == 0) continue;
    last_real = j;
    acc += weights[j];
    if (target < acc) return pts[j].point;
  }
  return pts[*last_real].point;
}

int PartitionIndex::descend_to_leaf(const Point& p, Rational* mu_product) const {
  if (p.dim() != dim_) throw InvalidInput("point has wrong arity");
  int t = 0;
  if (!nodes_[0].cell.contains(p.coords)) return -1;
  while (true) {
    const Node& v = nodes_[t];
    if (mu_product) *mu_product *= v.mu;
    if (v.leaf >= 0) return t;
    const Box& lc = nodes_[v.left].cell;
    bool in_left = true;
    for (std::size_t k = 0; k < dim_; ++k)
      if (p.coords[k] >= lc.hi[k] && lc.hi[k] < v.cell.hi[k]) in_left = false;
    t = in_left ? v.left : v.right;
  }
}

Rational PartitionIndex::point_weight(const Point& p) const {
  Rational w = 1;
  const int t = descend_to_leaf(p, &w);
  if (t < 0) throw InvalidInput("point lies outside the indexed region");
  const Leaf& leaf = leaves_[nodes_[t].leaf];
  for (std::size_t k = 0; k < dim_; ++k) {
    const auto idx = leaf.axes[k].index_of(p.coords[k]);
    if (!idx) throw InvalidInput("point is not represented by the index");
    w *= leaf.axes[k].weight_at(*idx);
  }
  return w;
}

bool PartitionIndex::is_real(const Point& p) const {
  const int t = descend_to_leaf(p, nullptr);
  if (t < 0) return false;
  const Leaf& leaf = leaves_[nodes_[t].leaf];
  bool real = leaf.fully_covered;
  for (std::size_t k = 0; k < dim_; ++k) {
    const auto idx = leaf.axes[k].index_of(p.coords[k]);
    if (!idx) throw InvalidInput("point is not represented by the index");
    real = real || leaf.axes[k].covered(*idx);
  }
  return real;
}

void PartitionIndex::enumerate_leaf(const Leaf& leaf, const Rational& mu,
                                    std::vector<RepresentedPoint>& out,
                                    std::vector<Rational>* weights) const {
  std::vector<std::size_t> idx(dim_, 0);
  while (true) {
    RepresentedPoint rp;
    rp.point.coords.resize(dim_);
    rp.real = leaf.fully_covered;
    Rational w = mu;
    for (std::size_t k = 0; k < dim_; ++k) {
      const auto& tr = leaf.axes[k];
      rp.point.coords[k] = tr.points()[idx[k]];
      rp.real = rp.real || tr.covered(idx[k]);
      if (weights) w *= tr.weight_at(idx[k]);
    }
    out.push_back(std::move(rp));
    if (weights) weights->push_back(std::move(w));
    std::size_t k = dim_;
    while (k > 0) {
      --k;
      if (++idx[k] < leaf.axes[k].size()) break;
      idx[k] = 0;
      if (k == 0) return;
    }
  }
}

std::vector<PartitionIndex::RepresentedPoint> PartitionIndex::represented_points() const {
  std::vector<RepresentedPoint> out;
  for (const auto& leaf : leaves_) enumerate_leaf(leaf, Rational(1), out, nullptr);
  return out;
}

void PartitionIndex::audit() const {
  if (!(nodes_[0].cell == bounding_box(boxes_)))
    throw InternalError("partition root is not the bounding box");
  for (const auto& v : nodes_) {
    if (v.leaf < 0) {
      const Box& a = nodes_[v.left].cell;
      const Box& b = nodes_[v.right].cell;
      std::size_t split_axes = 0;
      for (std::size_t k = 0; k < dim_; ++k) {
        if (a.lo[k] == v.cell.lo[k] && b.hi[k] == v.cell.hi[k] && a.hi[k] == b.lo[k] &&
            a.lo[k] < a.hi[k] && b.lo[k] < b.hi[k] && a.hi[k] != v.cell.hi[k]) {
          ++split_axes;
        } else if (!(a.lo[k] == v.cell.lo[k] && a.hi[k] == v.cell.hi[k] &&
                     b.lo[k] == v.cell.lo[k] && b.hi[k] == v.cell.hi[k])) {
          throw InternalError("partition children do not tile their parent");
        }
      }
      if (split_axes != 1) throw InternalError("partition split is not a hyperplane");
      continue;
    }
    const Leaf& leaf = leaves_[v.leaf];
    for (std::size_t i = 0; i < boxes_.size(); ++i) {
      const Box& b = boxes_[i];
      if (misses(b, v.cell) || encloses(b, v.cell)) continue;
      if (!slab_axis(b, v.cell))
        throw InternalError("box " + std::to_string(i) + " is not a slab in a leaf");
      const bool stored = std::any_of(leaf.slabs.begin(), leaf.slabs.end(),
                                      [&](const Slab& s) { return s.box == i; });
      if (!stored) throw InternalError("slab missing from its leaf");
    }
    for (std::size_t k = 0; k < dim_; ++k) {
      for (Coord x : leaf.axes[k].points())
        if (x <= v.cell.lo[k] || x >= v.cell.hi[k])
          throw InternalError("leaf grid point on or outside its cell boundary");
    }
  }
}

}  // namespace covker
