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
#include "covker/exact.hpp"
#include "covker/gadgets.hpp"

namespace covker {
namespace {

AnnotatedFormula phi1() {
  AnnotatedFormula f;
  f.num_vars = 3;
  f.clauses = {{{-1, 2, 3}, Side::Above}};
  f.variable_order = {1, 2, 3};
  return f;
}

AnnotatedFormula phi2() {
  AnnotatedFormula f = phi1();
  f.clauses.push_back({{1, -2, -3}, Side::Below});
  return f;
}

std::vector<bool> bits(unsigned mask, std::size_t n) {
  std::vector<bool> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = (mask >> i) & 1U;
  return a;
}

TEST(MckGadget, SingleClauseCounts) {
  const auto g = generate_mck_gadget(phi1());
  EXPECT_EQ(g.instance.boxes.size(), 53u);
  EXPECT_EQ(g.expected_kernel, 40u);
  EXPECT_EQ(g.counts.blacks, 9u);
  EXPECT_EQ(g.counts.clause_greens, 11u);
  EXPECT_EQ(g.counts.var_rects, 18u);
  EXPECT_EQ(g.counts.var_greens, 15u);
  EXPECT_EQ(g.greens.size(), 26u);
  const auto graph = build_intersection_graph(g.instance.boxes);
  EXPECT_LE(analyze_graph(graph).clique_number, 4u);
  // Every variable here occurs once, so each leg sits next to an end box of
  // its ring and also touches that box's green at a corner.
  for (std::size_t i = 0; i < graph.n_vertices; ++i) {
    if (g.roles[i] == Role::Leg)
      EXPECT_EQ(graph.adjacency[i].size(), 9u) << "box " << i;
    else
      EXPECT_LE(graph.adjacency[i].size(), 8u) << "box " << i;
  }
}

TEST(MckGadget, CountIdentityOnSeveralLayouts) {
  std::vector<AnnotatedFormula> fs{phi1(), phi2()};
  AnnotatedFormula nested;
  nested.num_vars = 6;
  nested.variable_order = {1, 2, 3, 4, 5, 6};
  nested.clauses = {{{1, 2, 6}, Side::Above}, {{3, -4, 5}, Side::Above}, {{-1, 5, 6}, Side::Below},
                    {{2, -3, -4}, Side::Below}};
  fs.push_back(nested);
  AnnotatedFormula chain;
  chain.num_vars = 5;
  chain.variable_order = {1, 2, 3, 4, 5};
  chain.clauses = {{{1, -2, 3}, Side::Above}, {{-3, 4, 5}, Side::Above}, {{1, -3, -5}, Side::Below}};
  fs.push_back(chain);
  for (const auto& f : fs) {
    const auto g = generate_mck_gadget(f);
    const std::size_t m = f.clauses.size(), n = f.num_vars;
    std::size_t var_rects = 0, var_greens = 0;
    for (std::size_t v = 1; v <= n; ++v) {
      var_rects += 4 * f.occurrences(static_cast<int>(v)) + 2;
      var_greens += 3 * f.occurrences(static_cast<int>(v)) + 2;
    }
    EXPECT_EQ(9 * m + 11 * m + var_rects + var_greens, 41 * m + 4 * n);
    EXPECT_EQ(g.instance.boxes.size(), 41 * m + 4 * n);
    EXPECT_EQ(g.expected_kernel, 31 * m + 3 * n);
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      const auto a = bits(mask, n);
      const auto k = kernel_from_assignment(g, a);
      EXPECT_TRUE(covers_same_region(k, g.instance));
      if (f.satisfied_by(a)) EXPECT_EQ(k.size(), 31 * m + 3 * n);
      else EXPECT_GT(k.size(), 31 * m + 3 * n);
      EXPECT_LE(k.size(), 31 * m + 3 * n + m);
    }
  }
}

TEST(MckGadget, VariableRingsAlternate) {
  const auto g = generate_mck_gadget(phi2());
  const auto graph = build_intersection_graph(g.instance.boxes);
  for (const auto& ring : g.variable_rings) {
    ASSERT_EQ(ring.size(), 10u);  // every variable occurs twice
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const auto a = ring[i], b = ring[(i + 1) % ring.size()];
      EXPECT_TRUE(graph.has_edge(a, b));
      EXPECT_NE(g.roles[a], g.roles[b]);
    }
  }
}

TEST(MckGadget, WitnessSizes) {
  const auto g1 = generate_mck_gadget(phi1());
  const auto k1 = kernel_from_assignment(g1, {false, false, false});
  EXPECT_EQ(k1.size(), 40u);
  EXPECT_TRUE(covers_same_region(k1, g1.instance));
  const auto g2 = generate_mck_gadget(phi2());
  const auto k2 = kernel_from_assignment(g2, {false, true, true});
  EXPECT_EQ(k2.size(), 72u);
  EXPECT_TRUE(covers_same_region(k2, g2.instance));
  EXPECT_THROW(kernel_from_assignment(g2, {true}), InvalidInput);
}

TEST(MckGadget, CrossingLayoutRejected) {
  AnnotatedFormula f;
  f.num_vars = 6;
  f.variable_order = {1, 2, 3, 4, 5, 6};
  f.clauses = {{{1, 3, 5}, Side::Above}, {{2, 4, 6}, Side::Above}};
  EXPECT_THROW(generate_mck_gadget(f), InvalidInput);
}

TEST(BoxCoverGadget, StructuralClaims) {
  for (const auto& f : {phi1(), phi2()}) {
    const auto g = generate_boxcover_gadget(f);
    ASSERT_TRUE(g.instance.points.has_value());
    std::size_t max_depth = 0;
    for (auto d : coverage_depths(g.instance.boxes, *g.instance.points)) {
      EXPECT_GE(d, 1u);
      EXPECT_LE(d, 2u);
      max_depth = std::max(max_depth, d);
    }
    EXPECT_EQ(max_depth, 2u);
    const auto rep = analyze_graph(build_intersection_graph(g.instance.boxes));
    EXPECT_TRUE(rep.triangle_free);
    EXPECT_LE(rep.max_degree, 4u);
    EXPECT_TRUE(rep.planarity_necessary);
    EXPECT_TRUE(g.greens.empty());
  }
}

TEST(BoxCoverGadget, OptimumForOneClause) {
  const auto g = generate_boxcover_gadget(phi1());
  EXPECT_EQ(exact_box_cover(g.instance).size(), 14u);  // 11m + n
}

TEST(IsolatedVariable, MonochromaticOptimum) {
  for (std::size_t c : {1u, 2u}) {
    const auto g = isolated_variable_gadget(c);
    const auto r = exact_kernel(g.instance);
    EXPECT_EQ(r.size(), (2 * c + 1) + (3 * c + 2));
    std::set<Role> colors;
    for (auto i : r.kernel)
      if (g.roles[i] != Role::Green) colors.insert(g.roles[i]);
    EXPECT_EQ(colors.size(), 1u);
  }
}

TEST(IsolatedComb, FiveBoxesWithoutAllLegs) {
  const auto g = isolated_comb();
  const auto r = exact_box_cover(g.instance);
  EXPECT_EQ(r.size(), 5u);
  const auto& cyc = g.clause_cycles[0];
  std::size_t legs = 0;
  for (std::size_t i : {cyc[0], cyc[3], cyc[6]})
    legs += std::binary_search(r.kernel.begin(), r.kernel.end(), i);
  EXPECT_LT(legs, 3u);
}

}  // namespace
}  // namespace covker
