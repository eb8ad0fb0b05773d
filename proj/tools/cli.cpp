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

#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "covker/bg.hpp"
#include "covker/discretization.hpp"
#include "covker/errors.hpp"
#include "covker/exact.hpp"
#include "covker/formula.hpp"
#include "covker/gadgets.hpp"
#include "covker/instance_io.hpp"
#include "covker/kernel.hpp"
#include "covker/partition_index.hpp"
#include "covker/polygon.hpp"

namespace covker::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json error_object(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

std::vector<Vertex> parse_vertices(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
    std::vector<Vertex> poly;
    for (const auto& v : j) {
      const auto xy = v.get<std::vector<Coord>>();
      if (xy.size() != 2) throw InvalidInput("polygon vertex must have two coordinates");
      poly.emplace_back(xy[0], xy[1]);
    }
    return poly;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("polygon JSON: ") + e.what());
  }
}

json gadget_json(const GadgetInstance& g) {
  json j = instance_to_json(g.instance);
  json roles = json::array();
  for (auto r : g.roles) roles.push_back(role_name(r));
  j["roles"] = roles;
  j["expected_kernel"] = g.expected_kernel;
  return j;
}

json graph_json(const Instance& inst) {
  try {
    const auto rep = analyze_graph(build_intersection_graph(inst.boxes));
    return {{"max_degree", rep.max_degree},
            {"clique_number", rep.clique_number},
            {"triangle_free", rep.triangle_free},
            {"planarity_necessary", rep.planarity_necessary},
            {"edges", rep.edge_count}};
  } catch (const ResourceLimit& e) {
    return {{"skipped", e.what()}};
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coverage kernels of axis-aligned boxes"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->require_subcommand(1);
  std::size_t g_n = 10, g_d = 2;
  Coord g_max = 32;
  std::uint64_t g_seed = 0;
  auto* gen_random = gen->add_subcommand("random", "seeded random boxes");
  gen_random->add_option("--n", g_n, "number of boxes")->check(CLI::PositiveNumber);
  gen_random->add_option("--d", g_d, "dimension")->check(CLI::PositiveNumber);
  gen_random->add_option("--coord-max", g_max, "largest coordinate")->check(CLI::PositiveNumber);
  gen_random->add_option("--seed", g_seed, "generator seed");

  std::string cnf_path, layout_path, variant = "mck";
  auto* gen_sat = gen->add_subcommand("sat3", "hardness gadget for a planar 3-CNF");
  gen_sat->add_option("--cnf", cnf_path, "DIMACS file");
  gen_sat->add_option("--layout", layout_path, "layout JSON (order and sides)");
  gen_sat->add_option("--variant", variant, "mck or boxcover")
      ->check(CLI::IsMember({"mck", "boxcover"}));

  std::string poly_path;
  std::size_t stair_steps = 0;
  auto* gen_poly = gen->add_subcommand("polygon", "boxes inside a rectilinear polygon");
  gen_poly->add_option("--vertices", poly_path, "JSON file with [[x,y],...]");
  gen_poly->add_option("--staircase", stair_steps, "random staircase with this many steps");
  gen_poly->add_option("--coord-max", g_max, "staircase coordinate range");
  gen_poly->add_option("--seed", g_seed, "staircase seed");

  // solve
  auto* solve = app.add_subcommand("solve", "compute a coverage kernel");
  std::string inst_path, algo = "greedy";
  std::uint64_t seed = 0;
  std::size_t max_cells = kDefaultMaxCells, max_live = kDefaultMaxLiveBoxes;
  bool timing = false, uniform = false;
  solve->add_option("instance", inst_path, "instance JSON")->required();
  solve->add_option("--algo", algo, "greedy, bg or exact")
      ->check(CLI::IsMember({"greedy", "bg", "exact"}));
  solve->add_option("--seed", seed, "seed for bg");
  solve->add_option("--max-cells", max_cells, "cap on explicit grid cells");
  solve->add_option("--max-live-boxes", max_live, "exact solver cap after reduction");
  solve->add_flag("--timing", timing, "include wall time in stats");
  solve->add_flag("--uniform-sampling", uniform, "bg: draw boxes uniformly");

  auto* verify = app.add_subcommand("verify", "check a result against its instance");
  std::string result_path;
  verify->add_option("instance", inst_path, "instance JSON")->required();
  verify->add_option("result", result_path, "result JSON")->required();
  verify->add_option("--max-cells", max_cells, "cap on explicit grid cells");

  auto* analyze = app.add_subcommand("analyze", "graph and discretization report");
  analyze->add_option("instance", inst_path, "instance JSON")->required();
  analyze->add_option("--max-cells", max_cells, "cap on explicit grid cells");

  auto* discretize = app.add_subcommand("discretize", "list the coverage discretization");
  discretize->add_option("instance", inst_path, "instance JSON")->required();
  discretize->add_option("--max-cells", max_cells, "cap on explicit grid cells");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    err << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    out << error_object("invalid_input", e.what()).dump() << '\n';
    return kInvalidInput;
  }

  try {
    if (gen->parsed()) {
      if (gen_random->parsed()) {
        out << dump_instance(random_instance(g_n, g_d, g_max, g_seed)) << '\n';
      } else if (gen_sat->parsed()) {
        AnnotatedFormula f;
        if (!cnf_path.empty()) {
          f = parse_dimacs(read_file(cnf_path));
          if (!layout_path.empty()) f = parse_layout_json(read_file(layout_path), &f);
        } else if (!layout_path.empty()) {
          f = parse_layout_json(read_file(layout_path));
        } else {
          throw InvalidInput("gen sat3 needs --cnf and/or --layout");
        }
        const auto g = variant == "mck" ? generate_mck_gadget(f) : generate_boxcover_gadget(f);
        out << gadget_json(g).dump() << '\n';
      } else {
        std::vector<Vertex> poly;
        if (!poly_path.empty()) poly = parse_vertices(read_file(poly_path));
        else if (stair_steps > 0) poly = random_staircase_polygon(stair_steps, g_max, g_seed);
        else throw InvalidInput("gen polygon needs --vertices or --staircase");
        auto inst = polygon_to_boxes(poly);
        json j = instance_to_json(inst);
        j["polygon_area"] = to_decimal_string(polygon_area(poly));
        out << j.dump() << '\n';
      }
      return kOk;
    }

    const Instance inst = parse_instance(read_file(inst_path));
    const std::string digest = instance_digest(inst);

    if (solve->parsed()) {
      KernelResult r;
      if (algo == "greedy") {
        r = greedy_kernel(inst, max_cells);
      } else if (algo == "bg") {
        BGConfig cfg;
        cfg.seed = seed;
        cfg.uniform_sampling = uniform;
        cfg.max_cells = max_cells;
        r = bg_kernel(inst, cfg);
      } else {
        r = exact_kernel(inst, {max_live, max_cells});
      }
      out << result_to_json(r, digest, timing).dump() << '\n';
      return kOk;
    }

    if (verify->parsed()) {
      json res;
      try {
        res = json::parse(read_file(result_path));
      } catch (const json::exception& e) {
        throw InvalidInput(std::string("result JSON: ") + e.what());
      }
      std::vector<std::size_t> kernel;
      std::string claimed;
      try {
        kernel = res.at("kernel").get<std::vector<std::size_t>>();
        claimed = res.at("instance_digest").get<std::string>();
      } catch (const json::exception& e) {
        throw InvalidInput(std::string("result JSON: ") + e.what());
      }
      json report = {{"instance_digest", digest}, {"size", kernel.size()}};
      if (claimed != digest) {
        report["verified"] = false;
        report["reason"] = "instance digest mismatch";
        out << report.dump() << '\n';
        return kVerifyFailed;
      }
      for (auto i : kernel)
        if (i >= inst.boxes.size()) throw InvalidInput("kernel index out of range");
      const bool ok = covers_same_region(kernel, inst, max_cells);
      report["verified"] = ok;
      if (!ok) report["reason"] = "kernel covers a different region";
      out << report.dump() << '\n';
      return ok ? kOk : kVerifyFailed;
    }

    if (analyze->parsed()) {
      const auto sb = scaled_boxes(inst.boxes);
      const auto disc = coverage_discretization(sb, max_cells);
      const PartitionIndex idx(sb);
      const auto& st = idx.stats();
      json report = {
          {"boxes", inst.boxes.size()},
          {"dim", inst.dim},
          {"instance_digest", digest},
          {"graph", graph_json(inst)},
          {"discretization_size", disc.size()},
          {"union_volume", to_decimal_string(union_volume(inst.boxes, max_cells))},
          {"partition",
           {{"nodes", st.node_count},
            {"leaves", st.leaf_count},
            {"depth", st.depth},
            {"max_slabs_per_leaf", st.max_slabs_per_leaf},
            {"total_slab_entries", st.total_slab_entries},
            {"max_leaves_per_box", st.max_leaves_per_box},
            {"represented_points", st.represented_points},
            {"audit_passed", st.audit_passed}}}};
      out << report.dump() << '\n';
      return kOk;
    }

    const auto disc = coverage_discretization(inst, max_cells);
    json pts = json::array();
    for (const auto& p : disc.points) {
      json row = json::array();
      for (Coord c : p.coords) row.push_back(to_decimal_string(Rational(c, 2)));
      pts.push_back(row);
    }
    out << json{{"N", disc.size()}, {"points", pts}}.dump() << '\n';
    return kOk;
  } catch (const InvalidInput& e) {
    out << error_object("invalid_input", e.what()).dump() << '\n';
    return kInvalidInput;
  } catch (const ResourceLimit& e) {
    out << error_object("resource_limit", e.what()).dump() << '\n';
    return kResourceLimit;
  } catch (const StateError& e) {
    out << error_object("state_error", e.what()).dump() << '\n';
    return kInvalidInput;
  }
}

}  // namespace covker::cli
