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

#include "covker/polygon.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "covker/errors.hpp"

namespace covker {

namespace {

struct Edge {
  Vertex a, b;
  bool vertical() const { return a.first == b.first; }
};

std::vector<Edge> edges_of(const std::vector<Vertex>& poly) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < poly.size(); ++i) e.push_back({poly[i], poly[(i + 1) % poly.size()]});
  return e;
}

bool segments_touch(const Edge& p, const Edge& q) {
  const Coord px0 = std::min(p.a.first, p.b.first), px1 = std::max(p.a.first, p.b.first);
  const Coord py0 = std::min(p.a.second, p.b.second), py1 = std::max(p.a.second, p.b.second);
  const Coord qx0 = std::min(q.a.first, q.b.first), qx1 = std::max(q.a.first, q.b.first);
  const Coord qy0 = std::min(q.a.second, q.b.second), qy1 = std::max(q.a.second, q.b.second);
  return px0 <= qx1 && qx0 <= px1 && py0 <= qy1 && qy0 <= py1;
}

// Even-odd test for a point never lying on an edge.
bool inside(const std::vector<Edge>& edges, Coord x, Coord y) {
  bool in = false;
  for (const auto& e : edges) {
    if (!e.vertical() || e.a.first <= x) continue;
    const Coord y0 = std::min(e.a.second, e.b.second), y1 = std::max(e.a.second, e.b.second);
    if (y0 < y && y < y1) in = !in;
  }
  return in;
}

}  // namespace

void validate_polygon(const std::vector<Vertex>& poly) {
  if (poly.size() < 4) throw InvalidInput("polygon needs at least 4 vertices");
  const auto edges = edges_of(poly);
  for (const auto& e : edges) {
    if (e.a == e.b) throw InvalidInput("polygon has a repeated vertex");
    if (e.a.first != e.b.first && e.a.second != e.b.second)
      throw InvalidInput("polygon edge is not axis-parallel");
  }
  const std::size_t k = edges.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == k - 1);
      if (!segments_touch(edges[i], edges[j])) continue;
      if (!adjacent) throw InvalidInput("polygon is self-intersecting");
      if (edges[i].vertical() == edges[j].vertical()) {
        // Collinear neighbours may only share their common vertex.
        const auto& shared = j == i + 1 ? edges[i].b : edges[i].a;
        const auto& far_i = j == i + 1 ? edges[i].a : edges[i].b;
        const auto& far_j = j == i + 1 ? edges[j].b : edges[j].a;
        const bool doubles_back = edges[i].vertical()
            ? (far_i.second < shared.second) == (far_j.second < shared.second)
            : (far_i.first < shared.first) == (far_j.first < shared.first);
        if (doubles_back) throw InvalidInput("polygon doubles back on itself");
      }
    }
  }
  if (polygon_area(poly) == 0) throw InvalidInput("polygon has zero area");
}

Rational polygon_area(const std::vector<Vertex>& poly) {
  BigInt twice = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& [x0, y0] = poly[i];
    const auto& [x1, y1] = poly[(i + 1) % poly.size()];
    twice += BigInt(static_cast<long>(x0)) * static_cast<long>(y1) -
             BigInt(static_cast<long>(x1)) * static_cast<long>(y0);
  }
  if (twice < 0) twice = -twice;
  Rational area(twice, 2);
  area.canonicalize();
  return area;
}

Instance polygon_to_boxes(const std::vector<Vertex>& poly) {
  validate_polygon(poly);
  std::set<Coord> xs_set, ys_set;
  for (const auto& [x, y] : poly) {
    xs_set.insert(x);
    ys_set.insert(y);
  }
  const std::vector<Coord> xs(xs_set.begin(), xs_set.end()), ys(ys_set.begin(), ys_set.end());
  const std::size_t gx = xs.size() - 1, gy = ys.size() - 1;

  std::vector<Edge> doubled;
  for (const auto& e : edges_of(poly))
    doubled.push_back({{2 * e.a.first, 2 * e.a.second}, {2 * e.b.first, 2 * e.b.second}});

  // prefix[i][j] = inside cells among the first i columns and j rows.
  std::vector<std::vector<std::size_t>> prefix(gx + 1, std::vector<std::size_t>(gy + 1, 0));
  for (std::size_t i = 0; i < gx; ++i)
    for (std::size_t j = 0; j < gy; ++j) {
      const bool in = inside(doubled, xs[i] + xs[i + 1], ys[j] + ys[j + 1]);
      prefix[i + 1][j + 1] = prefix[i][j + 1] + prefix[i + 1][j] - prefix[i][j] + (in ? 1 : 0);
    }

  Instance inst;
  inst.dim = 2;
  for (std::size_t a = 0; a < gx; ++a)
    for (std::size_t b = a + 1; b <= gx; ++b)
      for (std::size_t c = 0; c < gy; ++c)
        for (std::size_t d = c + 1; d <= gy; ++d) {
          const std::size_t cells = prefix[b][d] - prefix[a][d] - prefix[b][c] + prefix[a][c];
          if (cells == (b - a) * (d - c)) inst.boxes.emplace_back(std::vector<Coord>{xs[a], ys[c]},
                                                                 std::vector<Coord>{xs[b], ys[d]});
        }
  inst.meta["generator"] = "polygon";
  return inst;
}

std::vector<Vertex> random_staircase_polygon(std::size_t steps, Coord coord_max,
                                             std::uint64_t seed) {
  if (steps == 0) throw InvalidInput("staircase needs at least one step");
  if (coord_max < static_cast<Coord>(steps) + 1)
    throw InvalidInput("coordinate range too small for the step count");
  std::mt19937_64 rng(seed);
  auto distinct = [&](std::size_t k) {
    std::vector<Coord> pool;
    for (Coord v = 1; v <= coord_max; ++v) pool.push_back(v);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
  };
  auto xs = distinct(steps);  // x of each step, widest first after reversing
  auto ys = distinct(steps);  // y of each step top
  std::reverse(xs.begin(), xs.end());
  std::vector<Vertex> poly{{0, 0}, {xs[0], 0}};
  for (std::size_t i = 0; i < steps; ++i) {
    poly.emplace_back(xs[i], ys[i]);
    poly.emplace_back(i + 1 < steps ? xs[i + 1] : 0, ys[i]);
  }
  validate_polygon(poly);
  return poly;
}

Instance random_instance(std::size_t n, std::size_t d, Coord coord_max, std::uint64_t seed) {
  if (n == 0 || d == 0 || coord_max <= 0)
    throw InvalidInput("random instance needs positive n, d and coord_max");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Coord> coord(0, coord_max);
  Instance inst;
  inst.dim = d;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Coord> lo(d), hi(d);
    for (std::size_t k = 0; k < d; ++k) {
      Coord a = coord(rng), b = coord(rng);
      while (a == b) b = coord(rng);
      lo[k] = std::min(a, b);
      hi[k] = std::max(a, b);
    }
    inst.boxes.emplace_back(std::move(lo), std::move(hi));
  }
  inst.meta["generator"] = "random";
  inst.meta["seed"] = std::to_string(seed);
  return inst;
}

}  // namespace covker
