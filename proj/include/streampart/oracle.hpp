/*
 * Copyright 2026 The streampart Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef STREAMPART_ORACLE_HPP
#define STREAMPART_ORACLE_HPP

// Exact offline solvers. These hold the whole sequence in memory and are not
// streaming algorithms; they serve as ground truth for tests and benchmarks.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "streampart/partitioning.hpp"
#include "streampart/rational.hpp"
#include "streampart/types.hpp"

namespace streampart {

enum class OracleMethod { binsearch, dp };

std::string_view to_string(OracleMethod method);
OracleMethod parse_oracle_method(std::string_view text);

struct OracleResult {
  Wide optimum = 0;
  OracleMethod method = OracleMethod::binsearch;
};

/// Lower and upper sandwich bounds on the optimum:
/// max{ceil(S/p), m} <= B* <= floor((S + (p-1) m) / p).
struct BottleneckBounds {
  Wide lower = 0;
  Wide upper = 0;
};

BottleneckBounds bottleneck_bounds(std::span<const Weight> weights, std::size_t parts);

/// Greedy check: can the sequence be cut into at most p blocks of weight <= bound?
bool greedy_feasible(std::span<const Weight> weights, std::size_t parts, Wide bound);

/// Least bound accepted by greedy_feasible, by binary search between the
/// sandwich bounds. Throws DomainError for p < 2.
OracleResult opt_bottleneck_binsearch(std::span<const Weight> weights, std::size_t parts);

/// Prefix dynamic program, O(n^2 p). Throws DomainError for p < 2 or when
/// n^2 p exceeds dp_work_limit.
OracleResult opt_bottleneck_dp(std::span<const Weight> weights, std::size_t parts);

inline constexpr std::uint64_t dp_work_limit = 500'000'000ULL;

/// Second-pass realization of a PartB answer: greedy maximal blocks under
/// floor(bound). Returns nullopt if the bound is below the optimum.
std::optional<Partitioning> realize_partition(std::span<const Weight> weights, std::size_t parts,
                                              const Rational& bound);

}  // namespace streampart

#endif  // STREAMPART_ORACLE_HPP
