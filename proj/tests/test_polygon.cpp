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

#include "covker/discretization.hpp"
#include "covker/errors.hpp"
#include "covker/polygon.hpp"

namespace covker {
namespace {

TEST(Polygon, UnitSquare) {
  const auto inst = polygon_to_boxes({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
  EXPECT_EQ(inst.boxes.size(), 1u);
}

TEST(Polygon, LShapeHasFiveBoxes) {
  const std::vector<Vertex> l{{0, 0}, {4, 0}, {4, 2}, {2, 2}, {2, 4}, {0, 4}};
  const auto inst = polygon_to_boxes(l);
  EXPECT_EQ(inst.boxes.size(), 5u);
  EXPECT_EQ(polygon_area(l), 12);
  EXPECT_EQ(union_volume(inst.boxes), 12);
}

TEST(Polygon, ClockwiseInputGivesTheSameBoxes) {
  std::vector<Vertex> l{{0, 0}, {4, 0}, {4, 2}, {2, 2}, {2, 4}, {0, 4}};
  const auto a = polygon_to_boxes(l);
  std::reverse(l.begin(), l.end());
  EXPECT_EQ(polygon_to_boxes(l).boxes, a.boxes);
}

TEST(Polygon, RejectsBadInput) {
  EXPECT_THROW(polygon_to_boxes({{0, 0}, {2, 1}, {2, 2}, {0, 2}}), InvalidInput);
  // Bow tie made of two squares touching at a corner.
  EXPECT_THROW(polygon_to_boxes({{0, 0}, {2, 0}, {2, 4}, {4, 4}, {4, 2}, {0, 2}}), InvalidInput);
  EXPECT_THROW(polygon_to_boxes({{0, 0}, {2, 0}, {2, 2}}), InvalidInput);
}

TEST(Polygon, StaircaseAreasMatch) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto poly = random_staircase_polygon(1 + seed % 6, 20, seed);
    EXPECT_EQ(union_volume(polygon_to_boxes(poly).boxes), polygon_area(poly));
  }
}

TEST(RandomInstance, DeterministicAndValid) {
  const auto a = random_instance(20, 3, 10, 42), b = random_instance(20, 3, 10, 42);
  EXPECT_EQ(a.boxes, b.boxes);
  for (const auto& box : a.boxes)
    for (std::size_t k = 0; k < 3; ++k) EXPECT_LT(box.lo[k], box.hi[k]);
  EXPECT_EQ(random_instance(1, 2, 5, 0).boxes.size(), 1u);
  EXPECT_THROW(random_instance(0, 2, 5, 0), InvalidInput);
}

}  // namespace
}  // namespace covker
