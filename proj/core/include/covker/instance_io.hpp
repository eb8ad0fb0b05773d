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

#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "covker/geometry.hpp"
#include "covker/kernel.hpp"

namespace covker {

/// {"dim": d, "boxes": [{"lo": [...], "hi": [...]}, ...],
///  "points": [[...], ...], "meta": {...}} with raw integer coordinates.
Instance instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const Instance& inst);

/// Parses and validates; throws InvalidInput on malformed text.
Instance parse_instance(const std::string& text);
std::string dump_instance(const Instance& inst);

/// FNV-1a 64 over the canonical dump, as 16 hex digits.
std::string instance_digest(const Instance& inst);

nlohmann::json result_to_json(const KernelResult& r, const std::string& digest,
                              bool with_timing = false);

}  // namespace covker
