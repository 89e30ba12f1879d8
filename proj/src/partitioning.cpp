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
#include "streampart/partitioning.hpp"

#include <algorithm>

#include "streampart/errors.hpp"

namespace streampart {

std::optional<std::string> validate_partitioning(std::uint64_t n, std::size_t parts,
                                                 std::span<const Index> separators) {
  if (parts < 2) return "partition count p = " + std::to_string(parts) + " is below 2";
  if (separators.size() != parts + 1) {
    return "expected " + std::to_string(parts + 1) + " separators, got " +
           std::to_string(separators.size());
  }
  if (separators.front() != 1) {
    return "s_0 = " + std::to_string(separators.front()) + " != 1";
  }
  for (std::size_t j = 0; j + 1 < separators.size(); ++j) {
    if (separators[j] > separators[j + 1]) {
      return "s_" + std::to_string(j) + " = " + std::to_string(separators[j]) + " > s_" +
             std::to_string(j + 1) + " = " + std::to_string(separators[j + 1]);
    }
  }
  if (separators.back() != n + 1) {
    return "s_p = " + std::to_string(separators.back()) + " != n+1 = " + std::to_string(n + 1);
  }
  return std::nullopt;
}

std::vector<Wide> block_weights(std::span<const Weight> weights, const Partitioning& part) {
  if (auto violation = validate_partitioning(weights.size(), part.parts(), part.separators)) {
    throw ValidationError(*violation);
  }
  std::vector<Wide> blocks;
  blocks.reserve(part.parts());
  for (std::size_t j = 0; j < part.parts(); ++j) {
    Wide sum = 0;
    for (Index i = part.separators[j]; i < part.separators[j + 1]; ++i) sum += weights[i - 1];
    blocks.push_back(sum);
  }
  return blocks;
}

Wide bottleneck_of(std::span<const Weight> weights, const Partitioning& part) {
  const auto blocks = block_weights(weights, part);
  return *std::max_element(blocks.begin(), blocks.end());
}

Partitioning single_block_partitioning(std::uint64_t n, std::size_t parts) {
  Partitioning part;
  part.separators.assign(parts + 1, n + 1);
  part.separators.front() = 1;
  return part;
}

}  // namespace streampart
