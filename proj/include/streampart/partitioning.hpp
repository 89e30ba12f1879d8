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
#ifndef STREAMPART_PARTITIONING_HPP
#define STREAMPART_PARTITIONING_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "streampart/types.hpp"

namespace streampart {

/**
 * p contiguous blocks over a stream of length n, stored as the p+1 separators
 * s_0 = 1 <= s_1 <= ... <= s_p = n+1. Block j (1-based) covers the indices
 * [s_{j-1}, s_j). Equal neighbouring separators denote an empty block.
 */
struct Partitioning {
  std::vector<Index> separators;

  std::size_t parts() const { return separators.empty() ? 0 : separators.size() - 1; }

  bool operator==(const Partitioning&) const = default;
};

/// Returns the first violated invariant, or nullopt if the separators are a
/// valid p-partitioning of a length-n stream.
std::optional<std::string> validate_partitioning(std::uint64_t n, std::size_t parts,
                                                 std::span<const Index> separators);

/// Per-block weights. Throws ValidationError on invalid separators.
std::vector<Wide> block_weights(std::span<const Weight> weights, const Partitioning& part);

/// Maximum block weight. Throws ValidationError on invalid separators.
Wide bottleneck_of(std::span<const Weight> weights, const Partitioning& part);

/// (1, n+1, ..., n+1): everything in the first block.
Partitioning single_block_partitioning(std::uint64_t n, std::size_t parts);

}  // namespace streampart

#endif  // STREAMPART_PARTITIONING_HPP
