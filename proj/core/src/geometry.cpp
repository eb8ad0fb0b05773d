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

#include "covker/geometry.hpp"

#include <algorithm>
#include <cstdint>

#include "covker/errors.hpp"

namespace covker {

Box::Box(std::vector<Coord> lo_, std::vector<Coord> hi_)
    : lo(std::move(lo_)), hi(std::move(hi_)) {}

bool Box::contains(std::span<const Coord> p) const {
  for (std::size_t k = 0; k < lo.size(); ++k)
    if (p[k] < lo[k] || p[k] > hi[k]) return false;
  return true;
}

bool Box::contains(const Box& other) const {
  for (std::size_t k = 0; k < lo.size(); ++k)
    if (other.lo[k] < lo[k] || other.hi[k] > hi[k]) return false;
  return true;
}

bool Box::intersects(const Box& other) const {
  for (std::size_t k = 0; k < lo.size(); ++k)
    if (other.hi[k] < lo[k] || other.lo[k] > hi[k]) return false;
  return true;
}

bool Box::overlaps_interior(const Box& other) const {
  for (std::size_t k = 0; k < lo.size(); ++k)
    if (other.hi[k] <= lo[k] || other.lo[k] >= hi[k]) return false;
  return true;
}

void Instance::validate() const {
  if (dim == 0) throw InvalidInput("instance dimension must be positive");
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const Box& b = boxes[i];
    if (b.lo.size() != dim || b.hi.size() != dim)
      throw InvalidInput("box " + std::to_string(i) + " has wrong arity");
    for (std::size_t k = 0; k < dim; ++k)
      if (b.lo[k] >= b.hi[k])
        throw InvalidInput("box " + std::to_string(i) +
                           " is degenerate in dimension " + std::to_string(k));
  }
  if (points) {
    for (std::size_t j = 0; j < points->size(); ++j)
      if ((*points)[j].dim() != dim)
        throw InvalidInput("point " + std::to_string(j) + " has wrong arity");
  }
}

Box scaled(const Box& b) {
  Box out = b;
  for (auto& c : out.lo) c *= 2;
  for (auto& c : out.hi) c *= 2;
  return out;
}

Point scaled(const Point& p) {
  Point out = p;
  for (auto& c : out.coords) c *= 2;
  return out;
}

std::vector<Box> scaled_boxes(std::span<const Box> boxes) {
  std::vector<Box> out;
  out.reserve(boxes.size());
  for (const auto& b : boxes) out.push_back(scaled(b));
  return out;
}

Box bounding_box(std::span<const Box> boxes) {
  if (boxes.empty()) throw InvalidInput("bounding box of an empty set");
  Box bb = boxes.front();
  for (const auto& b : boxes) {
    if (b.dim() != bb.dim()) throw InvalidInput("dimension mismatch");
    for (std::size_t k = 0; k < bb.dim(); ++k) {
      bb.lo[k] = std::min(bb.lo[k], b.lo[k]);
      bb.hi[k] = std::max(bb.hi[k], b.hi[k]);
    }
  }
  return bb;
}

bool IntersectionGraph::has_edge(std::size_t i, std::size_t j) const {
  const auto& a = adjacency[i];
  return std::binary_search(a.begin(), a.end(), j);
}

std::size_t IntersectionGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& a : adjacency) twice += a.size();
  return twice / 2;
}

IntersectionGraph build_intersection_graph(std::span<const Box> boxes) {
  IntersectionGraph g;
  g.n_vertices = boxes.size();
  g.adjacency.assign(boxes.size(), {});
  if (boxes.empty()) return g;
  const std::size_t d = boxes.front().dim();
  for (const auto& b : boxes)
    if (b.dim() != d) throw InvalidInput("dimension mismatch in box set");
  for (std::size_t i = 0; i < boxes.size(); ++i)
    for (std::size_t j = i + 1; j < boxes.size(); ++j)
      if (boxes[i].intersects(boxes[j])) {
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
      }
  for (auto& a : g.adjacency) std::sort(a.begin(), a.end());
  return g;
}

IntersectionGraph induced_subgraph(const IntersectionGraph& g,
                                   std::span<const std::size_t> vertices) {
  IntersectionGraph h;
  h.n_vertices = vertices.size();
  h.adjacency.assign(vertices.size(), {});
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = 0; b < vertices.size(); ++b)
      if (a != b && g.has_edge(vertices[a], vertices[b]))
        h.adjacency[a].push_back(b);
  return h;
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitGraph {
  std::size_t n;
  std::size_t words;
  std::vector<Bits> adj;

  explicit BitGraph(const IntersectionGraph& g)
      : n(g.n_vertices), words((g.n_vertices + 63) / 64), adj(n, Bits(words)) {
    for (std::size_t v = 0; v < n; ++v)
      for (auto u : g.adjacency[v]) adj[v][u / 64] |= 1ULL << (u % 64);
  }
};

std::size_t popcount(const Bits& b) {
  std::size_t c = 0;
  for (auto w : b) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

bool empty(const Bits& b) {
  return std::all_of(b.begin(), b.end(), [](auto w) { return w == 0; });
}

Bits and_bits(const Bits& a, const Bits& b) {
  Bits out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
  return out;
}

// Bron-Kerbosch with Tomita pivoting; records the largest clique size seen.
void expand(const BitGraph& g, std::size_t depth, Bits cand, Bits excl,
            std::size_t& best) {
  if (empty(cand) && empty(excl)) {
    best = std::max(best, depth);
    return;
  }
  if (depth + popcount(cand) <= best) return;
  std::size_t pivot = 0, pivot_deg = 0;
  bool have_pivot = false;
  for (std::size_t w = 0; w < g.words; ++w) {
    std::uint64_t both = cand[w] | excl[w];
    while (both) {
      std::size_t u = w * 64 + static_cast<std::size_t>(__builtin_ctzll(both));
      both &= both - 1;
      std::size_t deg = popcount(and_bits(cand, g.adj[u]));
      if (!have_pivot || deg > pivot_deg) {
        pivot = u;
        pivot_deg = deg;
        have_pivot = true;
      }
    }
  }
  for (std::size_t w = 0; w < g.words; ++w) {
    std::uint64_t todo = cand[w] & ~g.adj[pivot][w];
    while (todo) {
      std::size_t v = w * 64 + static_cast<std::size_t>(__builtin_ctzll(todo));
      todo &= todo - 1;
      expand(g, depth + 1, and_bits(cand, g.adj[v]), and_bits(excl, g.adj[v]),
             best);
      cand[v / 64] &= ~(1ULL << (v % 64));
      excl[v / 64] |= 1ULL << (v % 64);
    }
  }
}

}  // namespace

GraphReport analyze_graph(const IntersectionGraph& g, std::size_t vertex_cap) {
  if (g.n_vertices > vertex_cap)
    throw ResourceLimit("clique enumeration capped at " +
                        std::to_string(vertex_cap) + " vertices");
  GraphReport r;
  r.edge_count = g.edge_count();
  for (const auto& a : g.adjacency) r.max_degree = std::max(r.max_degree, a.size());
  if (g.n_vertices > 0) {
    BitGraph bg(g);
    Bits cand(bg.words), excl(bg.words);
    for (std::size_t v = 0; v < g.n_vertices; ++v) cand[v / 64] |= 1ULL << (v % 64);
    std::size_t best = 0;
    expand(bg, 0, cand, excl, best);
    r.clique_number = best;
  }
  r.triangle_free = r.clique_number < 3;
  const std::size_t v = g.n_vertices;
  r.planarity_necessary = v < 3 || r.edge_count <= 3 * v - 6;
  return r;
}

std::vector<std::size_t> coverage_depths(std::span<const Box> boxes,
                                         std::span<const Point> points) {
  std::vector<std::size_t> depth(points.size(), 0);
  for (std::size_t j = 0; j < points.size(); ++j)
    for (const auto& b : boxes)
      if (b.contains(points[j].coords)) ++depth[j];
  return depth;
}

}  // namespace covker
