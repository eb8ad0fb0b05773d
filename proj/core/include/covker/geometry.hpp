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
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace covker {

using Coord = std::int64_t;

/// Closed axis-aligned box [lo_0,hi_0] x ... x [lo_{d-1},hi_{d-1}].
struct Box {
  std::vector<Coord> lo;
  std::vector<Coord> hi;

  Box() = default;
  Box(std::vector<Coord> lo_, std::vector<Coord> hi_);

  std::size_t dim() const { return lo.size(); }
  bool contains(std::span<const Coord> p) const;
  /// True when `other` lies inside this box (closed).
  bool contains(const Box& other) const;
  /// Closed intersection: touching facets count.
  bool intersects(const Box& other) const;
  /// Intersection with positive volume.
  bool overlaps_interior(const Box& other) const;

  friend bool operator==(const Box&, const Box&) = default;
};

struct Point {
  std::vector<Coord> coords;

  std::size_t dim() const { return coords.size(); }
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Box Cover / coverage-kernel input. Coordinates are the raw integers read
/// from the instance file; use `scaled_boxes()` for the doubled grid every
/// index and discretization works on.
struct Instance {
  std::size_t dim = 0;
  std::vector<Box> boxes;
  std::optional<std::vector<Point>> points;
  std::map<std::string, std::string> meta;

  /// Throws InvalidInput on arity mismatch or a box with lo >= hi.
  void validate() const;
  std::size_t size() const { return boxes.size(); }
};

/// Every coordinate multiplied by two, so cell midpoints are integers that
/// never coincide with a facet.
std::vector<Box> scaled_boxes(std::span<const Box> boxes);
Box scaled(const Box& b);
Point scaled(const Point& p);

/// Smallest box containing every input box.
Box bounding_box(std::span<const Box> boxes);

struct IntersectionGraph {
  std::size_t n_vertices = 0;
  std::vector<std::vector<std::size_t>> adjacency;  // sorted neighbour lists

  bool has_edge(std::size_t i, std::size_t j) const;
  std::size_t edge_count() const;
};

struct GraphReport {
  std::size_t max_degree = 0;
  std::size_t clique_number = 0;
  bool triangle_free = true;
  bool planarity_necessary = true;
  std::size_t edge_count = 0;
};

IntersectionGraph build_intersection_graph(std::span<const Box> boxes);

/// Induced subgraph on `vertices` (renumbered 0..k-1 in the given order).
IntersectionGraph induced_subgraph(const IntersectionGraph& g,
                                   std::span<const std::size_t> vertices);

inline constexpr std::size_t kDefaultCliqueVertexCap = 512;

/// Exact clique number by Bron-Kerbosch with pivoting. Throws ResourceLimit
/// when the graph has more than `vertex_cap` vertices.
GraphReport analyze_graph(const IntersectionGraph& g,
                          std::size_t vertex_cap = kDefaultCliqueVertexCap);

/// Number of boxes containing each point (closed containment).
std::vector<std::size_t> coverage_depths(std::span<const Box> boxes,
                                         std::span<const Point> points);

}  // namespace covker
