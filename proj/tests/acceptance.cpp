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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is
// non-zero when any criterion fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "covker/bg.hpp"
#include "covker/discretization.hpp"
#include "covker/exact.hpp"
#include "covker/gadgets.hpp"
#include "covker/interval_weight_tree.hpp"
#include "covker/kernel.hpp"
#include "covker/partition_index.hpp"
#include "covker/polygon.hpp"

namespace covker {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

// 1. Index queries and covered summaries agree exactly with a naive table
// over the points the index represents.
Outcome weight_index_oracle() {
  Outcome o;
  std::mt19937_64 rng(20260101);
  const std::vector<Rational> alphas{0, Rational(1, 2), 1, 2, 3};
  std::size_t checks = 0;
  for (int script = 0; script < 500 && o.pass; ++script) {
    const std::size_t d = 1 + script % 3;
    const std::size_t n = 1 + rng() % 24;
    const auto inst = random_instance(n, d, 32, rng());
    PartitionIndex idx = PartitionIndex::from_instance(inst);
    const auto reps = idx.represented_points();
    std::vector<Point> all;
    std::set<Point> real;
    for (const auto& rp : reps) {
      all.push_back(rp.point);
      if (rp.real) real.insert(rp.point);
    }
    NaiveWeightTable naive(all);
    const auto& boxes = idx.boxes();
    const std::size_t ops = 1 + rng() % 100;
    for (std::size_t op = 0; op < ops && o.pass; ++op) {
      const auto& b = boxes[rng() % boxes.size()];
      if (rng() % 2) {
        const auto& a = alphas[rng() % alphas.size()];
        idx.update(b, a);
        naive.update(b, a);
      } else {
        ++checks;
        if (idx.query(b) != naive.query(b)) fail(o, "query mismatch in script " + std::to_string(script));
      }
      Rational total = 0;
      std::optional<Rational> mn;
      for (const auto& p : real) {
        const auto& w = naive.weight(p);
        total += w;
        mn = mn ? std::min(*mn, w) : w;
      }
      const auto s = idx.covered_summary();
      ++checks;
      if (s.total != total || s.min != mn)
        fail(o, "covered summary mismatch in script " + std::to_string(script));
      else if (s.min_point && (!real.count(*s.min_point) || naive.weight(*s.min_point) != *s.min))
        fail(o, "covered minimum point is wrong in script " + std::to_string(script));
    }
  }
  if (o.pass) o.detail = "500 scripts, " + std::to_string(checks) + " exact comparisons";
  return o;
}

// 2. Node visits of the 1-D tree never exceed four times its height.
Outcome interval_visit_bound() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::vector<Coord> xs;
  std::vector<bool> marks;
  for (Coord i = 0; i < 1000; ++i) {
    xs.push_back(2 * i + 1);
    marks.push_back(rng() % 2);
  }
  IntervalWeightTree t(xs, marks);
  std::size_t worst = 0;
  for (int op = 0; op < 10000; ++op) {
    Coord a = static_cast<Coord>(rng() % 2002), b = static_cast<Coord>(rng() % 2002);
    if (a > b) std::swap(a, b);
    if (op % 2) t.update_weights(a, b, Rational(1 + rng() % 3, 1 + rng() % 2));
    else (void)t.total_weight(a, b);
    worst = std::max(worst, t.last_visits());
  }
  if (worst > 4 * t.height()) fail(o, "visits " + std::to_string(worst) + " > 4 * height");
  o.detail = "10000 operations, max visits " + std::to_string(worst) + ", height " +
             std::to_string(t.height()) + (o.pass ? "" : "; " + o.detail);
  return o;
}

// 3. Covering the discretization is equivalent to equal union volume.
Outcome discretization_equivalence() {
  Outcome o;
  std::mt19937_64 rng(3);
  std::size_t subsets = 0;
  for (int k = 0; k < 200 && o.pass; ++k) {
    const std::size_t n = 1 + rng() % 12, d = 1 + rng() % 2;
    const auto inst = random_instance(n, d, 16, rng());
    const auto disc = coverage_discretization(inst);
    const std::uint64_t total = std::uint64_t{1} << n;
    const std::size_t trials = n <= 10 ? total : 1024;
    for (std::size_t t = 0; t < trials && o.pass; ++t) {
      const std::uint64_t mask = n <= 10 ? t : rng() % total;
      std::vector<std::size_t> c;
      for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1U) c.push_back(i);
      ++subsets;
      if (covers_same_region(c, inst) != covers_points(c, inst, disc))
        fail(o, "disagreement on instance " + std::to_string(k));
    }
  }
  if (o.pass) o.detail = "200 instances, " + std::to_string(subsets) + " subsets";
  return o;
}

std::vector<Instance> approx_instances() {
  std::vector<Instance> out;
  std::mt19937_64 rng(4);
  for (int k = 0; k < 100; ++k)
    out.push_back(random_instance(2 + rng() % 15, 1 + rng() % 2, 24, rng()));
  return out;
}

// 4. Greedy lies between the optimum and the logarithmic bound.
Outcome greedy_bound(const std::vector<Instance>& insts, std::vector<std::size_t>& opt,
                     std::vector<std::size_t>& greedy) {
  Outcome o;
  double worst_ratio = 0;
  for (std::size_t k = 0; k < insts.size(); ++k) {
    const auto ex = exact_kernel(insts[k]);
    const auto gr = greedy_kernel(insts[k]);
    opt.push_back(ex.size());
    greedy.push_back(gr.size());
    const double N = static_cast<double>(coverage_discretization(insts[k]).size());
    if (!gr.certified) fail(o, "uncertified greedy result");
    if (gr.size() < ex.size()) fail(o, "greedy below the optimum");
    if (static_cast<double>(gr.size()) > ex.size() * (std::log(N) + 1))
      fail(o, "greedy above OPT (ln N + 1) on instance " + std::to_string(k));
    worst_ratio = std::max(worst_ratio, static_cast<double>(gr.size()) / ex.size());
  }
  if (o.pass) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "100 instances, worst greedy/OPT %.3f", worst_ratio);
    o.detail = buf;
  }
  return o;
}

// 5. Randomized algorithm: always certified, step caps respected, size
// within greedy + 2 OPT in at least 90% of runs.
Outcome bg_quality(const std::vector<Instance>& insts, const std::vector<std::size_t>& opt,
                   const std::vector<std::size_t>& greedy) {
  Outcome o;
  std::size_t runs = 0, within = 0, weight_violations = 0, fallbacks = 0;
  for (std::size_t k = 0; k < insts.size(); ++k) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto r = bg_kernel(insts[k], {seed});
      ++runs;
      if (!r.certified) fail(o, "uncertified result");
      if (r.size() < opt[k]) fail(o, "result below the optimum");
      if (r.size() <= greedy[k] + 2 * opt[k]) ++within;
      for (const auto& st : r.stats["stages"])
        if (st["steps"].get<std::uint64_t>() > st["mu"].get<std::uint64_t>())
          fail(o, "doubling steps exceeded the cap");
      weight_violations += r.stats["weight_bound_violations"].get<std::size_t>();
      fallbacks += r.stats["fallback"].get<bool>();
    }
  }
  const double frac = static_cast<double>(within) / runs;
  if (frac < 0.9) fail(o, "fewer than 90% of runs within greedy + 2 OPT");
  char buf[192];
  std::snprintf(buf, sizeof buf,
                "%zu of %zu runs within greedy+2*OPT (%.1f%%), %zu fallbacks, %zu stages above "
                "n^4/k^3",
                within, runs, 100 * frac, fallbacks, weight_violations);
  o.detail = o.pass ? buf : o.detail + "; " + buf;
  return o;
}

AnnotatedFormula single_clause() {
  AnnotatedFormula f;
  f.num_vars = 3;
  f.clauses = {{{-1, 2, 3}, Side::Above}};
  f.variable_order = {1, 2, 3};
  return f;
}

// 6. Coverage-kernel gadget for one clause.
Outcome mck_single_clause() {
  Outcome o;
  const auto f = single_clause();
  const auto g = generate_mck_gadget(f);
  if (g.instance.boxes.size() != 53) fail(o, "box count " + std::to_string(g.instance.boxes.size()));
  const auto ex = exact_kernel(g.instance);
  if (ex.size() != 40) fail(o, "exact kernel size " + std::to_string(ex.size()));
  std::size_t satisfying = 0;
  for (unsigned mask = 0; mask < 8; ++mask) {
    const std::vector<bool> a{bool(mask & 1), bool(mask & 2), bool(mask & 4)};
    if (!f.satisfied_by(a)) continue;
    ++satisfying;
    const auto k = kernel_from_assignment(g, a);
    if (k.size() != 40 || !covers_same_region(k, g.instance))
      fail(o, "witness for a satisfying assignment is wrong");
  }
  const auto rep = analyze_graph(build_intersection_graph(g.instance.boxes));
  if (rep.clique_number > 4) fail(o, "clique number above 4");
  if (rep.max_degree > 8) fail(o, "max degree above 8");
  const std::string summary = std::to_string(g.instance.boxes.size()) + " boxes, exact kernel " +
                              std::to_string(ex.size()) + ", " + std::to_string(satisfying) +
                              " satisfying witnesses checked, clique " +
                              std::to_string(rep.clique_number) + ", max degree " +
                              std::to_string(rep.max_degree);
  o.detail = o.pass ? summary : o.detail + "; " + summary;
  return o;
}

// 7. Local optimality of the variable ring and the comb.
Outcome local_optimality() {
  Outcome o;
  for (std::size_t c = 1; c <= 3; ++c) {
    const auto g = isolated_variable_gadget(c);
    const auto r = exact_kernel(g.instance);
    std::set<Role> colors;
    for (auto i : r.kernel)
      if (g.roles[i] != Role::Green) colors.insert(g.roles[i]);
    if (r.size() != (2 * c + 1) + (3 * c + 2) || colors.size() != 1)
      fail(o, "variable gadget with c=" + std::to_string(c) + " not optimal as claimed");
  }
  const auto comb = isolated_comb();
  const auto best = exact_box_cover(comb.instance);
  const auto& cyc = comb.clause_cycles[0];
  const std::array<std::size_t, 3> legs{cyc[0], cyc[3], cyc[6]};
  std::size_t legs_used = 0;
  for (auto l : legs) legs_used += std::binary_search(best.kernel.begin(), best.kernel.end(), l);
  if (best.size() != 5 || legs_used == 3) fail(o, "comb minimum is not 5 without all legs");

  // Fewest boxes in any cover that contains all three legs.
  std::size_t with_legs = 9;
  for (unsigned s = 0; s < 512; ++s) {
    const unsigned leg_bits = 1U | (1U << 3) | (1U << 6);
    if ((s & leg_bits) != leg_bits) continue;
    std::vector<std::size_t> pick;
    for (unsigned i = 0; i < 9; ++i)
      if ((s >> i) & 1U) pick.push_back(cyc[i]);
    bool covers = true;
    for (const auto& p : *comb.instance.points) {
      bool in = false;
      for (auto b : pick) in = in || comb.instance.boxes[b].contains(p.coords);
      covers = covers && in;
    }
    if (covers) with_legs = std::min<std::size_t>(with_legs, std::popcount(s));
  }
  if (with_legs < 6) fail(o, "a cover with all legs uses fewer than 6 boxes");
  if (o.pass)
    o.detail = "variable rings c=1..3 optimal and monochromatic, comb minimum 5 (" +
               std::to_string(legs_used) + " legs), with all legs " + std::to_string(with_legs);
  return o;
}

// 8. Box Cover gadget structure.
Outcome boxcover_structure() {
  Outcome o;
  std::vector<AnnotatedFormula> fs{single_clause()};
  AnnotatedFormula two = single_clause();
  two.clauses.push_back({{1, -2, -3}, Side::Below});
  fs.push_back(two);
  AnnotatedFormula nested;
  nested.num_vars = 6;
  nested.variable_order = {1, 2, 3, 4, 5, 6};
  nested.clauses = {{{1, 2, 6}, Side::Above}, {{3, -4, 5}, Side::Above}, {{-1, 3, 6}, Side::Below}};
  fs.push_back(nested);
  std::size_t worst_degree = 0, worst_depth = 0;
  for (const auto& f : fs) {
    const auto g = generate_boxcover_gadget(f);
    for (auto d : coverage_depths(g.instance.boxes, *g.instance.points)) {
      worst_depth = std::max(worst_depth, d);
      if (d > 2 || d == 0) fail(o, "point depth " + std::to_string(d));
    }
    const auto rep = analyze_graph(build_intersection_graph(g.instance.boxes));
    worst_degree = std::max(worst_degree, rep.max_degree);
    if (!rep.triangle_free) fail(o, "triangle found");
    if (rep.max_degree > 4) fail(o, "degree " + std::to_string(rep.max_degree));
    if (!rep.planarity_necessary) fail(o, "edge bound violated");
  }
  if (o.pass)
    o.detail = "3 layouts, max depth " + std::to_string(worst_depth) + ", triangle-free, max degree " +
               std::to_string(worst_degree);
  return o;
}

// 9. Polygon reduction preserves area.
Outcome polygon_area_check() {
  Outcome o;
  std::size_t boxes = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto poly = random_staircase_polygon(1 + seed % 8, 40, seed);
    const auto inst = polygon_to_boxes(poly);
    boxes += inst.boxes.size();
    if (union_volume(inst.boxes) != polygon_area(poly)) fail(o, "area mismatch for seed " + std::to_string(seed));
  }
  if (o.pass) o.detail = "50 staircases, " + std::to_string(boxes) + " boxes in total";
  return o;
}

}  // namespace
}  // namespace covker

int main() {
  using namespace covker;
  bool all = true;
  auto report = [&](int id, const char* name, const std::function<Outcome()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %d %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs);
    std::fflush(stdout);
    all = all && o.pass;
  };
  report(1, "weight index matches naive table", weight_index_oracle);
  report(2, "1-D visit bound", interval_visit_bound);
  report(3, "discretization vs volume", discretization_equivalence);
  const auto insts = approx_instances();
  std::vector<std::size_t> opt, greedy;
  report(4, "greedy approximation bound", [&] { return greedy_bound(insts, opt, greedy); });
  report(5, "randomized kernel", [&] {
    if (opt.size() != insts.size()) return Outcome{false, "needs criterion 4 results"};
    return bg_quality(insts, opt, greedy);
  });
  report(6, "coverage gadget, one clause", mck_single_clause);
  report(7, "gadget local optimality", local_optimality);
  report(8, "box cover gadget structure", boxcover_structure);
  report(9, "polygon area", polygon_area_check);
  return all ? 0 : 1;
}
