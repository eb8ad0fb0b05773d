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

#include <gtest/gtest.h>

#include "covker/errors.hpp"
#include "covker/geometry.hpp"
#include "covker/polygon.hpp"
#include "oracles.hpp"

namespace covker {
namespace {

using testing::box2;

TEST(Box, ClosedContainmentAndIntersection) {
  const Box a = box2(0, 0, 2, 2);
  const Box b = box2(2, 0, 4, 2);
  EXPECT_TRUE(a.intersects(b));
  EXPECT_FALSE(a.overlaps_interior(b));
  EXPECT_TRUE(a.contains(std::vector<Coord>{2, 2}));
  EXPECT_TRUE(box2(0, 0, 4, 4).contains(a));
  EXPECT_FALSE(a.contains(box2(0, 0, 4, 4)));
}

TEST(Instance, ValidateRejectsBadBoxes) {
  Instance inst = testing::make_instance({box2(0, 0, 2, 2)});
  EXPECT_NO_THROW(inst.validate());
  inst.boxes.push_back(box2(1, 1, 1, 3));
  EXPECT_THROW(inst.validate(), InvalidInput);
  inst.boxes.back() = Box({0}, {1});
  EXPECT_THROW(inst.validate(), InvalidInput);
}

TEST(Scaling, DoublesEveryCoordinate) {
  const auto s = scaled(box2(1, -2, 3, 4));
  EXPECT_EQ(s, box2(2, -4, 6, 8));
  EXPECT_EQ(bounding_box(testing::t3().boxes), box2(0, 0, 6, 6));
}

TEST(IntersectionGraph, DisjointBoxesHaveNoEdge) {
  const auto g = build_intersection_graph(std::vector<Box>{box2(0, 0, 1, 1), box2(3, 3, 4, 4)});
  EXPECT_EQ(g.n_vertices, 2u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(IntersectionGraph, T3IsTriangle) {
  const auto g = build_intersection_graph(testing::t3().boxes);
  EXPECT_EQ(g.edge_count(), 3u);
  const auto rep = analyze_graph(g);
  EXPECT_EQ(rep.max_degree, 2u);
  EXPECT_EQ(rep.clique_number, 3u);
  EXPECT_FALSE(rep.triangle_free);
}

TEST(IntersectionGraph, SharedFacetCounts) {
  const auto g = build_intersection_graph(std::vector<Box>{box2(0, 0, 2, 2), box2(2, 0, 4, 2)});
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(1, 0));
}

TEST(IntersectionGraph, DimensionMismatchThrows) {
  EXPECT_THROW(build_intersection_graph(std::vector<Box>{box2(0, 0, 1, 1), Box({0}, {1})}),
               InvalidInput);
}

TEST(AnalyzeGraph, EmptyGraph) {
  IntersectionGraph g;
  g.n_vertices = 4;
  g.adjacency.resize(4);
  const auto rep = analyze_graph(g);
  EXPECT_EQ(rep.max_degree, 0u);
  EXPECT_EQ(rep.clique_number, 1u);
  EXPECT_TRUE(rep.triangle_free);
  EXPECT_TRUE(rep.planarity_necessary);
}

TEST(AnalyzeGraph, CompleteGraphOnSix) {
  std::vector<Box> boxes(6, box2(0, 0, 1, 1));
  const auto rep = analyze_graph(build_intersection_graph(boxes));
  EXPECT_EQ(rep.clique_number, 6u);
  EXPECT_EQ(rep.edge_count, 15u);
  EXPECT_FALSE(rep.planarity_necessary);  // 15 > 3*6-6
}

TEST(AnalyzeGraph, VertexCap) {
  std::vector<Box> boxes(10, box2(0, 0, 1, 1));
  EXPECT_THROW(analyze_graph(build_intersection_graph(boxes), 5), ResourceLimit);
}

TEST(IntersectionGraph, MatchesBruteForceAndIgnoresScaling) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto inst = random_instance(12, 1 + seed % 3, 10, seed);
    const auto g = build_intersection_graph(inst.boxes);
    const auto gs = build_intersection_graph(scaled_boxes(inst.boxes));
    std::size_t clique3 = 0;
    for (std::size_t i = 0; i < inst.size(); ++i) {
      EXPECT_FALSE(g.has_edge(i, i));
      for (std::size_t j = 0; j < inst.size(); ++j) {
        if (i == j) continue;
        EXPECT_EQ(g.has_edge(i, j), testing::brute_overlap_closed(inst.boxes[i], inst.boxes[j]));
        EXPECT_EQ(g.has_edge(i, j), gs.has_edge(i, j));
        for (std::size_t k = 0; k < inst.size(); ++k)
          if (k != i && k != j && g.has_edge(i, j) && g.has_edge(j, k) && g.has_edge(i, k))
            ++clique3;
      }
    }
    const auto rep = analyze_graph(g);
    EXPECT_EQ(rep.clique_number >= 3, !rep.triangle_free);
    EXPECT_EQ(rep.triangle_free, clique3 == 0);
  }
}

TEST(CoverageDepths, Examples) {
  const std::vector<Point> p1{{{1, 1}}};
  EXPECT_EQ(coverage_depths(std::vector<Box>{box2(0, 0, 4, 2)}, p1),
            std::vector<std::size_t>{1});
  const std::vector<Point> p2{{{3, 1}}};
  EXPECT_EQ(coverage_depths(testing::w2().boxes, p2), std::vector<std::size_t>{2});
}

}  // namespace
}  // namespace covker
