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

#include "covker/bg.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>

#include "covker/errors.hpp"

namespace covker {

std::uint64_t BGConfig::mu(std::size_t n, std::uint64_t k) {
  if (n == 0 || k == 0) throw InvalidInput("mu needs n, k >= 1");
  const double v = std::ceil(4.0 * static_cast<double>(k) *
                             std::log2(static_cast<double>(n) / static_cast<double>(k)));
  return v < 1.0 ? 1 : static_cast<std::uint64_t>(v);
}

std::uint64_t BGConfig::sample_size(std::uint64_t k) {
  if (k == 0) throw InvalidInput("sample size needs k >= 1");
  const double kk = 16.0 * static_cast<double>(k);
  return static_cast<std::uint64_t>(std::ceil(kk * std::log2(kk)));
}

std::uint64_t BGConfig::max_retries(std::size_t n) {
  if (n == 0) throw InvalidInput("retries need n >= 1");
  return static_cast<std::uint64_t>(std::ceil(std::log2(static_cast<double>(n)))) + 1;
}

std::size_t weight_doubling_step(PartitionIndex& idx, const Point& p) {
  std::size_t touched = 0;
  for (const auto& b : idx.boxes()) {
    if (!b.contains(p.coords)) continue;
    idx.update(b, Rational(2));
    ++touched;
  }
  if (touched == 0) throw StateError("doubling point lies in no box");
  return touched;
}

std::vector<std::size_t> build_candidate_net(const PartitionIndex& idx,
                                             std::uint64_t k, std::mt19937_64& rng,
                                             bool uniform) {
  const auto& boxes = idx.boxes();
  std::vector<Rational> w(boxes.size());
  Rational wmax = 0;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    w[i] = idx.query(boxes[i]);
    wmax = std::max(wmax, w[i]);
  }
  if (wmax == 0) throw StateError("every box has zero weight");
  std::vector<double> probs(boxes.size());
  for (std::size_t i = 0; i < boxes.size(); ++i)
    probs[i] = uniform ? 1.0 : Rational(w[i] / wmax).get_d();
  std::discrete_distribution<std::size_t> pick(probs.begin(), probs.end());
  std::set<std::size_t> net;
  const auto draws = BGConfig::sample_size(k);
  for (std::uint64_t j = 0; j < draws; ++j) net.insert(pick(rng));
  return {net.begin(), net.end()};
}

KernelResult bg_kernel(const Instance& inst, const BGConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  inst.validate();
  const auto boxes = scaled_boxes(inst.boxes);
  const std::size_t n = boxes.size();
  std::mt19937_64 rng(cfg.seed);

  KernelResult res;
  res.algo = "bg";
  res.seed = cfg.seed;
  nlohmann::json stages = nlohmann::json::array();
  std::uint64_t total_steps = 0;
  std::size_t weight_bound_violations = 0;

  for (std::uint64_t k = 1; k <= 2 * n; k *= 2) {
    PartitionIndex idx(boxes);
    const auto cap = BGConfig::mu(n, k);
    std::uint64_t steps = 0;
    bool exhausted = false;
    while (true) {
      const auto summary = idx.covered_summary();
      const Rational threshold = summary.total / Rational(2 * k);
      const auto p = idx.find_light_point(threshold);
      if (!p) break;
      if (steps == cap) {
        exhausted = true;
        break;
      }
      weight_doubling_step(idx, *p);
      ++steps;
    }
    total_steps += steps;
    nlohmann::json st = {{"k", k}, {"mu", cap}, {"steps", steps}};

    // Soft check of the n^4/k^3 bound on point weights.
    const Rational bound = Rational(BigInt(n) * n * n * n) / Rational(BigInt(k) * k * k);
    const auto wmax = idx.covered_max();
    if (wmax) {
      st["max_weight"] = to_string(*wmax);
      const bool within = *wmax <= bound;
      st["max_weight_within_bound"] = within;
      if (!within) ++weight_bound_violations;
    }
    if (exhausted) {
      st["outcome"] = "opt_exceeds_2k";
      stages.push_back(st);
      continue;
    }

    const auto summary = idx.covered_summary();
    if (summary.min && *summary.min < summary.total / Rational(2 * k))
      throw InternalError("bg: light point left after doubling loop");

    const auto retries = BGConfig::max_retries(n);
    std::uint64_t rounds = 0;
    for (; rounds < retries; ++rounds) {
      auto net = build_candidate_net(idx, k, rng, cfg.uniform_sampling);
      if (covers_same_region(net, inst, cfg.max_cells)) {
        res.kernel = std::move(net);
        break;
      }
    }
    st["rounds"] = rounds < retries ? rounds + 1 : rounds;
    if (rounds < retries) {
      st["outcome"] = "accepted";
      stages.push_back(st);
      res.certified = true;
      break;
    }
    st["outcome"] = "retries_exhausted";
    stages.push_back(st);
  }

  res.stats["stages"] = stages;
  res.stats["doubling_steps"] = total_steps;
  res.stats["weight_bound_violations"] = weight_bound_violations;
  res.stats["fallback"] = !res.certified;
  if (!res.certified) {
    auto g = greedy_kernel(inst, cfg.max_cells);
    if (g.size() <= n) {
      res.kernel = std::move(g.kernel);
    } else {
      res.kernel.resize(n);
      for (std::size_t i = 0; i < n; ++i) res.kernel[i] = i;
    }
    res.certified = covers_same_region(res.kernel, inst, cfg.max_cells);
    if (!res.certified) throw InternalError("bg fallback failed the volume certificate");
  }
  res.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace covker
