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

#include <numeric>

#include "covker/discretization.hpp"
#include "covker/errors.hpp"
#include "covker/polygon.hpp"
#include "oracles.hpp"

namespace covker {
namespace {

using testing::box2;

std::vector<Point> sorted_points(Discretization d) {
  std::sort(d.points.begin(), d.points.end());
  return d.points;
}

TEST(Discretization, SingleBox) {
  const auto d = coverage_discretization(testing::make_instance({box2(0, 0, 4, 2)}));
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.points[0].coords, (std::vector<Coord>{4, 2}));  // (2,1) on the doubled grid
}

TEST(Discretization, W2HasThreeCells) {
  const auto pts = sorted_points(coverage_discretization(testing::w2()));
  const std::vector<Point> expect{{{2, 2}}, {{6, 2}}, {{10, 2}}};
  EXPECT_EQ(pts, expect);
}

TEST(Discretization, CrossHasFivePoints) {
  EXPECT_EQ(coverage_discretization(testing::cross()).size(), 5u);
}

TEST(Discretization, PointsAreStrictlyInsideAndOnePerCell) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = random_instance(8, 1 + seed % 3, 12, seed);
    const auto sb = scaled_boxes(inst.boxes);
    const auto d = coverage_discretization(sb);
    std::set<Point> seen(d.points.begin(), d.points.end());
    EXPECT_EQ(seen.size(), d.size());
    for (const auto& p : d.points) {
      bool strict = false;
      for (const auto& b : sb) {
        bool in = true;
        for (std::size_t k = 0; k < b.dim(); ++k) in = in && b.lo[k] < p.coords[k] && p.coords[k] < b.hi[k];
        strict = strict || in;
        for (std::size_t k = 0; k < b.dim(); ++k) {
          EXPECT_NE(p.coords[k], b.lo[k]);
          EXPECT_NE(p.coords[k], b.hi[k]);
        }
      }
      EXPECT_TRUE(strict);
    }
  }
}

TEST(Discretization, CellCap) {
  EXPECT_THROW(coverage_discretization(testing::cross(), 4), ResourceLimit);
}

TEST(UnionVolume, Examples) {
  EXPECT_EQ(union_volume(std::vector<Box>{box2(0, 0, 4, 2)}), 8);
  EXPECT_EQ(union_volume(testing::w2().boxes), 12);
  const auto l = polygon_to_boxes({{0, 0}, {4, 0}, {4, 2}, {2, 2}, {2, 4}, {0, 4}});
  EXPECT_EQ(union_volume(l.boxes), 12);
}

TEST(UnionVolume, MatchesUnitCellCount) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto inst = random_instance(1 + seed % 9, 1 + seed % 3, 9, seed);
    EXPECT_EQ(union_volume(inst.boxes), Rational(testing::unit_cells(inst.boxes).size()));
  }
}

TEST(UnionVolume, MonotonePermutationAndDuplication) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto boxes = random_instance(7, 2, 15, seed).boxes;
    const Rational full = union_volume(boxes);
    std::vector<Box> prefix;
    Rational last = 0;
    for (const auto& b : boxes) {
      prefix.push_back(b);
      const Rational v = union_volume(prefix);
      EXPECT_GE(v, last);
      last = v;
    }
    std::reverse(boxes.begin(), boxes.end());
    boxes.push_back(boxes.front());
    EXPECT_EQ(union_volume(boxes), full);
  }
}

TEST(CoversSameRegion, Examples) {
  const auto t3 = testing::t3();
  const std::vector<std::size_t> all{0, 1, 2}, pair{0, 1};
  EXPECT_TRUE(covers_same_region(all, t3));
  EXPECT_TRUE(covers_same_region(pair, t3));
  const std::vector<std::size_t> first{0};
  EXPECT_FALSE(covers_same_region(first, testing::w2()));
  const std::vector<std::size_t> bad{5};
  EXPECT_THROW(covers_same_region(bad, t3), InvalidInput);
}

TEST(CoversSameRegion, EquivalentToCoveringDiscretization) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto inst = random_instance(2 + seed % 6, 1 + seed % 3, 8, seed);
    const auto disc = coverage_discretization(inst);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inst.size()); ++mask) {
      std::vector<std::size_t> c;
      for (std::size_t i = 0; i < inst.size(); ++i)
        if ((mask >> i) & 1U) c.push_back(i);
      const bool by_volume = covers_same_region(c, inst);
      EXPECT_EQ(by_volume, covers_points(c, inst, disc));
      EXPECT_EQ(by_volume, testing::brute_is_kernel(inst.boxes, mask));
    }
  }
}

TEST(NaiveWeightTable, Examples) {
  const auto w2 = testing::w2();
  NaiveWeightTable t(coverage_discretization(w2));
  const auto b1 = scaled(w2.boxes[0]), b2 = scaled(w2.boxes[1]);
  EXPECT_EQ(t.query(b1), 2);
  t.update(b1, 1);
  EXPECT_EQ(t.query(b1), 2);
  EXPECT_EQ(t.query(b2), 2);
  t.update(b2, 0);
  EXPECT_EQ(t.query(b1), 1);
  EXPECT_THROW(t.update(b1, -1), InvalidInput);
}

}  // namespace
}  // namespace covker
