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

#include <gmpxx.h>

#include <optional>
#include <string>

namespace covker {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Minimum that treats an absent value as +infinity.
inline std::optional<Rational> min_present(const std::optional<Rational>& a,
                                           const std::optional<Rational>& b) {
  if (!a) return b;
  if (!b) return a;
  return *a <= *b ? a : b;
}

inline std::optional<Rational> max_present(const std::optional<Rational>& a,
                                           const std::optional<Rational>& b) {
  if (!a) return b;
  if (!b) return a;
  return *a >= *b ? a : b;
}

/// Canonical "p/q" (or "p") string.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Exact decimal rendering of a rational whose denominator divides a power
/// of ten (e.g. half-integers, volumes over 2^d). Falls back to "p/q".
std::string to_decimal_string(const Rational& q);

}  // namespace covker
