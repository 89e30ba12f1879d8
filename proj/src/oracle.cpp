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
#include "streampart/oracle.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "streampart/errors.hpp"

namespace streampart {

std::string_view to_string(OracleMethod method) {
  return method == OracleMethod::dp ? "dp" : "binsearch";
}

OracleMethod parse_oracle_method(std::string_view text) {
  if (text == "binsearch") return OracleMethod::binsearch;
  if (text == "dp") return OracleMethod::dp;
  throw UsageError("unknown oracle method '" + std::string(text) + "'");
}

BottleneckBounds bottleneck_bounds(std::span<const Weight> weights, std::size_t parts) {
  if (parts < 2) throw DomainError("partition count p must be at least 2");
  Wide total = 0;
  Weight max = 0;
  for (Weight x : weights) {
    total += x;
    max = std::max(max, x);
  }
  const Wide p = parts;
  BottleneckBounds bounds;
  bounds.lower = std::max<Wide>((total + p - 1) / p, max);
  bounds.upper = (total + (p - 1) * max) / p;
  return bounds;
}

bool greedy_feasible(std::span<const Weight> weights, std::size_t parts, Wide bound) {
  std::size_t blocks = 1;
  Wide current = 0;
  for (Weight x : weights) {
    if (x > bound) return false;
    if (current + x > bound) {
      if (++blocks > parts) return false;
      current = 0;
    }
    current += x;
  }
  return true;
}

OracleResult opt_bottleneck_binsearch(std::span<const Weight> weights, std::size_t parts) {
  const auto bounds = bottleneck_bounds(weights, parts);
  Wide lo = bounds.lower;
  Wide hi = bounds.upper;
  // The upper bound is always feasible; find the least feasible value.
  while (lo < hi) {
    const Wide mid = lo + (hi - lo) / 2;
    if (greedy_feasible(weights, parts, mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return {lo, OracleMethod::binsearch};
}

OracleResult opt_bottleneck_dp(std::span<const Weight> weights, std::size_t parts) {
  if (parts < 2) throw DomainError("partition count p must be at least 2");
  const std::size_t n = weights.size();
  const long double work = static_cast<long double>(n) * n * parts;
  if (work > static_cast<long double>(dp_work_limit)) {
    throw DomainError("dp oracle refused: n^2 p = " + std::to_string(static_cast<double>(work)) +
                      " exceeds the work limit");
  }
  std::vector<Wide> prefix(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + weights[i];

  // best[i] = optimal bottleneck of the first i elements with k blocks.
  constexpr Wide infinity = std::numeric_limits<Wide>::max();
  std::vector<Wide> best(n + 1, infinity);
  std::vector<Wide> next(n + 1, infinity);
  for (std::size_t i = 0; i <= n; ++i) best[i] = prefix[i];  // k = 1
  for (std::size_t k = 2; k <= parts; ++k) {
    for (std::size_t i = 0; i <= n; ++i) {
      Wide value = infinity;
      for (std::size_t j = 0; j <= i; ++j) {
        value = std::min(value, std::max(best[j], prefix[i] - prefix[j]));
      }
      next[i] = value;
    }
    best.swap(next);
  }
  return {best[n], OracleMethod::dp};
}

std::optional<Partitioning> realize_partition(std::span<const Weight> weights, std::size_t parts,
                                              const Rational& bound) {
  if (parts < 2) throw DomainError("partition count p must be at least 2");
  const Wide limit = floor_to_wide(bound);
  Partitioning part;
  part.separators.reserve(parts + 1);
  part.separators.push_back(1);
  Wide current = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const Weight x = weights[i];
    if (x > limit) return std::nullopt;
    if (current + x > limit) {
      if (part.separators.size() == parts) return std::nullopt;
      part.separators.push_back(i + 1);
      current = 0;
    }
    current += x;
  }
  part.separators.resize(parts + 1, weights.size() + 1);
  return part;
}

}  // namespace streampart
