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

#include "covker/instance_io.hpp"

#include <cstdio>

#include "covker/errors.hpp"

namespace covker {

Instance instance_from_json(const nlohmann::json& j) {
  try {
    Instance inst;
    inst.dim = j.at("dim").get<std::size_t>();
    for (const auto& b : j.at("boxes"))
      inst.boxes.emplace_back(b.at("lo").get<std::vector<Coord>>(),
                              b.at("hi").get<std::vector<Coord>>());
    if (j.contains("points") && !j.at("points").is_null()) {
      std::vector<Point> pts;
      for (const auto& p : j.at("points")) pts.push_back({p.get<std::vector<Coord>>()});
      inst.points = std::move(pts);
    }
    if (j.contains("meta")) {
      for (const auto& [k, v] : j.at("meta").items())
        inst.meta[k] = v.is_string() ? v.get<std::string>() : v.dump();
    }
    inst.validate();
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("instance JSON: ") + e.what());
  }
}

nlohmann::json instance_to_json(const Instance& inst) {
  nlohmann::json j;
  j["dim"] = inst.dim;
  j["boxes"] = nlohmann::json::array();
  for (const auto& b : inst.boxes) j["boxes"].push_back({{"lo", b.lo}, {"hi", b.hi}});
  if (inst.points) {
    j["points"] = nlohmann::json::array();
    for (const auto& p : *inst.points) j["points"].push_back(p.coords);
  }
  j["meta"] = nlohmann::json::object();
  for (const auto& [k, v] : inst.meta) j["meta"][k] = v;
  return j;
}

Instance parse_instance(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("instance JSON: ") + e.what());
  }
  return instance_from_json(j);
}

std::string dump_instance(const Instance& inst) { return instance_to_json(inst).dump(); }

std::string instance_digest(const Instance& inst) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : dump_instance(inst)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::json result_to_json(const KernelResult& r, const std::string& digest,
                              bool with_timing) {
  nlohmann::json j;
  j["kernel"] = r.kernel;
  j["size"] = r.size();
  j["certified"] = r.certified;
  j["algo"] = r.algo;
  j["seed"] = r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr);
  j["stats"] = r.stats;
  if (with_timing) j["stats"]["wall_seconds"] = r.wall_seconds;
  j["instance_digest"] = digest;
  return j;
}

}  // namespace covker
