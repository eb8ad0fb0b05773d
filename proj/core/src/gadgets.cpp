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

#include "covker/gadgets.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <optional>

#include "covker/discretization.hpp"
#include "covker/errors.hpp"

namespace covker {

namespace {

constexpr Coord U = 4;          // one layout unit in raw coordinates
constexpr Coord kSpine = 3 * U;  // lower edge of the top row
constexpr Coord kVarGap = 8 * U;
constexpr Coord kLevelStep = 6 * U;

struct Builder {
  std::vector<Box> boxes;
  std::vector<Role> roles;
  bool mirror = false;  // reflect y -> 4U - y (combs below the spine)

  std::size_t add(Coord x0, Coord x1, Coord y0, Coord y1, Role r) {
    if (mirror) {
      const Coord t = 4 * U - y1;
      y1 = 4 * U - y0;
      y0 = t;
    }
    if (x0 >= x1 || y0 >= y1) throw InternalError("gadget produced a degenerate box");
    boxes.push_back(Box({x0, y0}, {x1, y1}));
    roles.push_back(r);
    return boxes.size() - 1;
  }
};

struct VarGadget {
  Coord x = 0;
  std::size_t c = 0;
  std::vector<std::size_t> bottom, top;  // indices of B_1..B_2c, T_1..T_2c
  std::size_t left = 0, right = 0;
};

// Red/blue ring at offset x. Rows hold 2c boxes each; odd rows are red.
VarGadget add_variable(Builder& bld, Coord x, std::size_t c) {
  VarGadget g;
  g.x = x;
  g.c = c;
  g.left = bld.add(x, x + U, 0, 4 * U, Role::Blue);
  for (std::size_t i = 1; i <= 2 * c; ++i) {
    const Coord lo = x + 2 * U * static_cast<Coord>(i - 1);
    const Role r = i % 2 ? Role::Red : Role::Blue;
    g.bottom.push_back(bld.add(lo, lo + 3 * U, 0, U, r));
  }
  g.right = bld.add(x + 4 * U * static_cast<Coord>(c), x + 4 * U * static_cast<Coord>(c) + U,
                    0, 4 * U, Role::Red);
  for (std::size_t i = 1; i <= 2 * c; ++i) {
    const Coord lo = x + 2 * U * static_cast<Coord>(i - 1);
    const Role r = i % 2 ? Role::Red : Role::Blue;
    g.top.push_back(bld.add(lo, lo + 3 * U, 3 * U, 4 * U, r));
  }
  return g;
}

std::vector<std::size_t> ring_order(const VarGadget& g) {
  std::vector<std::size_t> ring{g.left};
  ring.insert(ring.end(), g.bottom.begin(), g.bottom.end());
  ring.push_back(g.right);
  ring.insert(ring.end(), g.top.rbegin(), g.top.rend());
  return ring;
}

// Start of the exclusive x-span of row box i (1-based).
Coord slot_x(const VarGadget& g, std::size_t i) {
  return g.x + (2 * static_cast<Coord>(i) - 1) * U;
}

// Greens for every box of the ring except the connected row boxes.
std::size_t add_variable_greens(Builder& bld, const VarGadget& g,
                                const std::vector<bool>& top_used,
                                const std::vector<bool>& bottom_used) {
  std::size_t added = 0;
  bld.add(g.x - 1, g.x + U, U, 3 * U, Role::Green);
  const Coord rx = g.x + 4 * U * static_cast<Coord>(g.c);
  bld.add(rx, rx + U + 1, U, 3 * U, Role::Green);
  added += 2;
  for (std::size_t i = 1; i <= 2 * g.c; ++i) {
    const Coord s = slot_x(g, i);
    if (!top_used[i - 1]) {
      bld.add(s, s + U, 3 * U - 1, 4 * U, Role::Green);
      ++added;
    }
    if (!bottom_used[i - 1]) {
      bld.add(s, s + U, 0, U + 1, Role::Green);
      ++added;
    }
  }
  return added;
}

struct Comb {
  std::array<std::size_t, 9> cycle{};
  std::size_t greens = 0;
};

// Comb with legs at p1 < p2 < p3 rising from the top row (in the unmirrored
// frame). `boxcover` narrows the legs, drops greens, and pulls h6/h7 down so
// h5 and h6 no longer touch.
Comb add_comb(Builder& bld, Coord p1, Coord p2, Coord p3, Coord h1, bool boxcover) {
  const Coord h2 = h1 + 2 * U;
  const Coord q = p1 + U * (((p2 - p1) / U) / 2);
  const Coord m = p2 + U * (((p3 - p2) / U) / 2);
  if (q <= p1 + U || p2 <= q + U + 1 || m <= p2 + U || p3 <= m + U)
    throw InternalError("comb legs too close together");
  const Coord inset = boxcover ? 1 : 0;
  const Coord low = boxcover ? h1 - 2 * U : h1 - U;

  Comb cb;
  auto leg = [&](Coord p, Coord top) {
    return bld.add(p + inset, p + U - inset, kSpine, top, Role::Leg);
  };
  cb.cycle[0] = leg(p1, h2 + U);
  cb.cycle[1] = bld.add(p1, q + U, h1, h1 + U, Role::Connector);        // h4
  cb.cycle[2] = bld.add(q, p2 + U, h1, h1 + U, Role::Connector);        // h5
  cb.cycle[3] = leg(p2, h1 + U);
  cb.cycle[4] = bld.add(p2, m + U, low, low + U, Role::Connector);      // h6
  cb.cycle[5] = bld.add(m, p3 + U, low, low + U, Role::Connector);      // h7
  cb.cycle[6] = leg(p3, h2 + U);
  cb.cycle[7] = bld.add(q, p3 + U, h2, h2 + U, Role::Connector);        // h8
  cb.cycle[8] = bld.add(p1, q + U, h2, h2 + U, Role::Connector);        // h9
  if (boxcover) return cb;

  const Coord k = q + U + (p2 - q - U) / 2;
  const Coord base = kSpine + U;
  bld.add(p1 + U, q, h1, h2 + U, Role::Green);           // h4 and h9 strips
  bld.add(q + U, k, h1, h1 + U + 1, Role::Green);        // h5 strip, left part
  bld.add(k, p2, h1, h1 + U + 1, Role::Green);           // h5 strip, right part
  bld.add(p2 + U, m, h1 - U - 1, h1, Role::Green);       // h6 strip
  bld.add(m + U, p3, h1 - U, h2 + U, Role::Green);       // h7 strip and end of h8
  bld.add(q + U, m + U, h2, h2 + U + 1, Role::Green);    // rest of h8 strip
  bld.add(p1 - 1, p1 + U, base, h1, Role::Green);
  bld.add(p1 - 1, p1 + U, h1 + U, h2, Role::Green);
  bld.add(p2 - 1, p2 + U, base, h1 - U, Role::Green);
  bld.add(p3, p3 + U + 1, base, h1 - U, Role::Green);
  bld.add(p3, p3 + U + 1, h1, h2, Role::Green);
  cb.greens = 11;
  return cb;
}

Point overlap_center(const Box& a, const Box& b) {
  Point p;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    const Coord lo = std::max(a.lo[k], b.lo[k]);
    const Coord hi = std::min(a.hi[k], b.hi[k]);
    if (lo >= hi) throw InternalError("expected overlapping boxes");
    if ((hi - lo) % 2) throw InternalError("overlap has no integer center");
    p.coords.push_back(lo + (hi - lo) / 2);
  }
  return p;
}

struct LegRef {
  std::size_t clause;
  int role;  // 0 leftmost, 1 middle, 2 rightmost variable of the comb
  int lit;
  std::size_t level;
};

GadgetInstance build_formula_gadget(const AnnotatedFormula& f, bool boxcover) {
  const auto layout = layout_clauses(f);
  const std::size_t n = f.num_vars, m = f.clauses.size();

  Builder bld;
  std::vector<VarGadget> vars(n + 1);
  Coord x = 0;
  for (int v : f.variable_order) {
    const std::size_t c = f.occurrences(v);
    vars[v] = add_variable(bld, x, c);
    x += (4 * static_cast<Coord>(c) + 1) * U + kVarGap;
  }

  // Assign each leg a row box of the literal's color, left to right in an
  // order compatible with the nesting of the combs.
  std::vector<std::array<Coord, 3>> leg_x(m);
  std::vector<std::vector<bool>> top_used(n + 1), bottom_used(n + 1);
  for (std::size_t v = 1; v <= n; ++v) {
    top_used[v].assign(2 * vars[v].c, false);
    bottom_used[v].assign(2 * vars[v].c, false);
  }
  for (std::size_t v = 1; v <= n; ++v) {
    for (Side side : {Side::Above, Side::Below}) {
      std::vector<LegRef> legs;
      for (std::size_t j = 0; j < m; ++j) {
        if (f.clauses[j].side != side) continue;
        for (int r = 0; r < 3; ++r)
          if (layout[j].vars[r] == static_cast<int>(v))
            legs.push_back({j, r, layout[j].lits[r], layout[j].level});
      }
      std::sort(legs.begin(), legs.end(), [](const LegRef& a, const LegRef& b) {
        if (a.role != b.role) return a.role > b.role;
        if (a.role == 2) return a.level < b.level;
        return a.level > b.level;
      });
      auto& used = side == Side::Above ? top_used[v] : bottom_used[v];
      std::size_t prev = 0;
      for (const auto& lg : legs) {
        std::size_t i = prev + 1;
        const std::size_t parity = lg.lit > 0 ? 1 : 0;
        if (i % 2 != parity) ++i;
        if (i > 2 * vars[v].c) throw InternalError("ran out of connection slots");
        used[i - 1] = true;
        leg_x[lg.clause][lg.role] = slot_x(vars[v], i);
        prev = i;
      }
    }
  }

  GadgetInstance g;
  for (std::size_t v = 1; v <= n; ++v) {
    g.variable_rings.push_back(ring_order(vars[v]));
    g.counts.var_rects += 4 * vars[v].c + 2;
  }
  if (!boxcover) {
    for (std::size_t v = 1; v <= n; ++v)
      g.counts.var_greens += add_variable_greens(bld, vars[v], top_used[v], bottom_used[v]);
  }

  for (std::size_t j = 0; j < m; ++j) {
    bld.mirror = f.clauses[j].side == Side::Below;
    const Coord h1 = kSpine + 4 * U + static_cast<Coord>(layout[j].level) * kLevelStep;
    const auto cb = add_comb(bld, leg_x[j][0], leg_x[j][1], leg_x[j][2], h1, boxcover);
    g.clause_cycles.push_back(cb.cycle);
    g.clause_leg_lits.push_back(layout[j].lits);
    g.counts.blacks += 9;
    g.counts.clause_greens += cb.greens;
  }
  bld.mirror = false;

  // Same-side combs must be disjoint or sit inside a single gap of another.
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b || f.clauses[a].side != f.clauses[b].side) continue;
      const auto &A = leg_x[a], &B = leg_x[b];
      if (B[2] < A[0] || B[0] > A[2]) continue;
      const bool nested = A[0] < B[0] && B[2] < A[2] && (B[2] < A[1] || B[0] > A[1]);
      const bool nested_rev = B[0] < A[0] && A[2] < B[2] && (A[2] < B[1] || A[0] > B[1]);
      if (!nested && !nested_rev)
        throw InvalidInput("combs " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                           " cross");
    }
  }

  g.instance.dim = 2;
  g.instance.boxes = std::move(bld.boxes);
  g.roles = std::move(bld.roles);
  for (std::size_t i = 0; i < g.roles.size(); ++i)
    if (g.roles[i] == Role::Green) g.greens.push_back(i);
  g.formula = f;
  g.instance.meta["generator"] = boxcover ? "sat3-boxcover" : "sat3-mck";
  g.instance.meta["vars"] = std::to_string(n);
  g.instance.meta["clauses"] = std::to_string(m);
  g.expected_kernel = boxcover ? 11 * m + n : 31 * m + 3 * n;

  if (boxcover) {
    std::vector<Point> pts;
    for (const auto& ring : g.variable_rings)
      for (std::size_t i = 0; i < ring.size(); ++i)
        pts.push_back(overlap_center(g.instance.boxes[ring[i]],
                                     g.instance.boxes[ring[(i + 1) % ring.size()]]));
    for (const auto& cyc : g.clause_cycles) {
      for (std::size_t i = 0; i < 9; ++i)
        pts.push_back(overlap_center(g.instance.boxes[cyc[i]],
                                     g.instance.boxes[cyc[(i + 1) % 9]]));
      for (std::size_t leg : {cyc[0], cyc[3], cyc[6]})
        for (const auto& ring : g.variable_rings)
          for (std::size_t r : ring)
            if (g.instance.boxes[leg].overlaps_interior(g.instance.boxes[r]))
              pts.push_back(overlap_center(g.instance.boxes[leg], g.instance.boxes[r]));
    }
    g.instance.points = std::move(pts);
    check_boxcover_gadget(g);
  } else {
    check_mck_gadget(g);
  }
  return g;
}

IntersectionGraph overlap_graph(std::span<const Box> boxes) {
  IntersectionGraph g;
  g.n_vertices = boxes.size();
  g.adjacency.resize(boxes.size());
  for (std::size_t i = 0; i < boxes.size(); ++i)
    for (std::size_t j = i + 1; j < boxes.size(); ++j)
      if (boxes[i].overlaps_interior(boxes[j])) {
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
      }
  return g;
}

void check_cycle(const IntersectionGraph& g, std::span<const std::size_t> order,
                 const std::string& what) {
  const std::size_t k = order.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g.has_edge(order[i], order[j]) != consecutive)
        throw InternalError(what + " is not a simple cycle in the stated order");
    }
  }
}

void check_rings(const GadgetInstance& g, const IntersectionGraph& graph) {
  for (const auto& ring : g.variable_rings) {
    check_cycle(graph, ring, "variable ring");
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const Role a = g.roles[ring[i]], b = g.roles[ring[(i + 1) % ring.size()]];
      if ((a != Role::Red && a != Role::Blue) || a == b)
        throw InternalError("variable ring colors do not alternate");
    }
  }
}

}  // namespace

std::string role_name(Role r) {
  switch (r) {
    case Role::Red: return "red";
    case Role::Blue: return "blue";
    case Role::Green: return "green";
    case Role::Leg: return "black-leg";
    case Role::Connector: return "black-connector";
  }
  return "unknown";
}

GadgetInstance generate_mck_gadget(const AnnotatedFormula& f) {
  return build_formula_gadget(f, false);
}

GadgetInstance generate_boxcover_gadget(const AnnotatedFormula& f) {
  return build_formula_gadget(f, true);
}

void check_mck_gadget(const GadgetInstance& g) {
  const std::size_t m = g.clause_cycles.size();
  const std::size_t n = g.variable_rings.size();
  std::size_t occ = 0;
  for (const auto& ring : g.variable_rings) occ += (ring.size() - 2) / 4;
  if (g.counts.blacks != 9 * m || g.counts.clause_greens != 11 * m ||
      g.counts.var_rects != 4 * occ + 2 * n || g.counts.var_greens != 3 * occ + 2 * n)
    throw InternalError("gadget part counts are off");
  if (!g.formula.clauses.empty() && g.instance.boxes.size() != 41 * m + 4 * n)
    throw InternalError("gadget box total is not 41m + 4n");

  const auto& boxes = g.instance.boxes;
  const auto closed = build_intersection_graph(boxes);
  check_rings(g, closed);
  const auto overlap = overlap_graph(boxes);
  for (const auto& cyc : g.clause_cycles) check_cycle(overlap, cyc, "comb");

  // Greens are exactly the boxes owning an exclusive region, and every
  // depth-1 region belongs to a green.
  const auto sb = scaled_boxes(boxes);
  const auto disc = coverage_discretization(sb);
  std::vector<bool> has_private(boxes.size(), false);
  for (const auto& p : disc.points) {
    std::optional<std::size_t> owner;
    std::size_t depth = 0;
    for (std::size_t i = 0; i < sb.size() && depth < 2; ++i)
      if (sb[i].contains(p.coords)) {
        owner = i;
        ++depth;
      }
    if (depth != 1) continue;
    if (g.roles[*owner] != Role::Green)
      throw InternalError("a " + role_name(g.roles[*owner]) + " box owns a private region");
    has_private[*owner] = true;
  }
  for (auto i : g.greens)
    if (!has_private[i]) throw InternalError("a green box has no private region");

  if (!g.formula.clauses.empty()) {
    const auto rep = analyze_graph(closed);
    if (rep.clique_number > 4) throw InternalError("gadget clique number exceeds 4");
  }
}

void check_boxcover_gadget(const GadgetInstance& g) {
  if (!g.instance.points) throw InternalError("box cover gadget without points");
  if (!g.greens.empty()) throw InternalError("box cover gadget has greens");
  for (auto d : coverage_depths(g.instance.boxes, *g.instance.points))
    if (d < 1 || d > 2) throw InternalError("box cover point depth outside 1..2");
  const auto graph = build_intersection_graph(g.instance.boxes);
  check_rings(g, graph);
  for (const auto& cyc : g.clause_cycles) check_cycle(graph, cyc, "comb");
  const auto rep = analyze_graph(graph);
  if (!rep.triangle_free) throw InternalError("box cover gadget has a triangle");
  if (rep.max_degree > 4) throw InternalError("box cover gadget degree exceeds 4");
  if (!rep.planarity_necessary) throw InternalError("box cover gadget fails the edge bound");
}

std::vector<std::size_t> kernel_from_assignment(const GadgetInstance& g,
                                                const std::vector<bool>& assignment) {
  if (assignment.size() != g.variable_rings.size())
    throw InvalidInput("assignment length does not match the variable count");
  std::vector<std::size_t> k = g.greens;
  for (std::size_t v = 0; v < g.variable_rings.size(); ++v) {
    const Role want = assignment[v] ? Role::Red : Role::Blue;
    for (auto b : g.variable_rings[v])
      if (g.roles[b] == want) k.push_back(b);
  }
  for (std::size_t j = 0; j < g.clause_cycles.size(); ++j) {
    unsigned required = 0;
    for (int r = 0; r < 3; ++r) {
      const int lit = g.clause_leg_lits[j][r];
      if (assignment[std::abs(lit) - 1] != (lit > 0)) required |= 1U << (3 * r);
    }
    std::optional<unsigned> best;
    for (unsigned s = 0; s < 512; ++s) {
      if ((s & required) != required) continue;
      bool cover = true;
      for (unsigned i = 0; i < 9 && cover; ++i)
        cover = ((s >> i) & 1U) || ((s >> ((i + 1) % 9)) & 1U);
      if (cover && (!best || std::popcount(s) < std::popcount(*best))) best = s;
    }
    for (unsigned i = 0; i < 9; ++i)
      if ((*best >> i) & 1U) k.push_back(g.clause_cycles[j][i]);
  }
  std::sort(k.begin(), k.end());
  return k;
}

GadgetInstance isolated_variable_gadget(std::size_t c) {
  if (c == 0) throw InvalidInput("variable gadget needs at least one occurrence");
  Builder bld;
  const auto var = add_variable(bld, 0, c);
  std::vector<bool> top(2 * c, false), bottom(2 * c, false);
  for (std::size_t i = 0; i < 2 * c; i += 2) top[i] = true;
  GadgetInstance g;
  g.counts.var_rects = 4 * c + 2;
  g.counts.var_greens = add_variable_greens(bld, var, top, bottom);
  g.variable_rings.push_back(ring_order(var));
  g.instance.dim = 2;
  g.instance.boxes = std::move(bld.boxes);
  g.roles = std::move(bld.roles);
  for (std::size_t i = 0; i < g.roles.size(); ++i)
    if (g.roles[i] == Role::Green) g.greens.push_back(i);
  g.expected_kernel = (2 * c + 1) + (3 * c + 2);
  g.instance.meta["generator"] = "isolated-variable";

  // The unconnected red boxes own private regions here, so only the ring
  // structure is checked.
  check_rings(g, build_intersection_graph(g.instance.boxes));
  return g;
}

GadgetInstance isolated_comb() {
  Builder bld;
  const auto cb = add_comb(bld, 0, 12 * U, 24 * U, kSpine + 4 * U, false);
  GadgetInstance g;
  std::vector<Box> blacks;
  std::array<std::size_t, 9> cyc{};
  for (std::size_t i = 0; i < 9; ++i) {
    blacks.push_back(bld.boxes[cb.cycle[i]]);
    g.roles.push_back(bld.roles[cb.cycle[i]]);
    cyc[i] = i;
  }
  g.clause_cycles.push_back(cyc);
  g.counts.blacks = 9;
  g.instance.dim = 2;
  g.instance.boxes = std::move(blacks);
  std::vector<Point> pts;
  for (std::size_t i = 0; i < 9; ++i)
    pts.push_back(overlap_center(g.instance.boxes[i], g.instance.boxes[(i + 1) % 9]));
  g.instance.points = std::move(pts);
  g.expected_kernel = 5;
  g.instance.meta["generator"] = "isolated-comb";
  check_cycle(overlap_graph(g.instance.boxes), cyc, "comb");
  return g;
}

}  // namespace covker
