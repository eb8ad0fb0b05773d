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
#include <utility>
#include <vector>

#include "covker/geometry.hpp"
#include "covker/rational.hpp"

namespace covker {

using Vertex = std::pair<Coord, Coord>;

/// Throws InvalidInput unless the cycle is rectilinear and simple.
void validate_polygon(const std::vector<Vertex>& poly);

/// Shoelace area (absolute value).
Rational polygon_area(const std::vector<Vertex>& poly);

/// Every box spanned by two grid points (grid through all polygon edges)
/// that lies inside the polygon.
Instance polygon_to_boxes(const std::vector<Vertex>& poly);

/// Monotone staircase with `steps` steps and corners in [0, coord_max],
/// counterclockwise.
std::vector<Vertex> random_staircase_polygon(std::size_t steps, Coord coord_max,
                                             std::uint64_t seed);

/// `n` random boxes in [0, coord_max]^d with positive extent.
Instance random_instance(std::size_t n, std::size_t d, Coord coord_max, std::uint64_t seed);

}  // namespace covker
