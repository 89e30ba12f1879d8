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
#ifndef STREAMPART_TYPES_HPP
#define STREAMPART_TYPES_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace streampart {

/// One stream element. Weights are non-negative integers in {0, ..., m}.
using Weight = std::uint64_t;

/// Accumulator for sums of weights; n * m cannot overflow for 64-bit n and m.
using Wide = unsigned __int128;

/// 1-based position in a stream. Separators are indices of this type.
using Index = std::uint64_t;

/// Whether an algorithm reports separators (Part) or only a bottleneck bound (PartB).
enum class OutputMode { part, partb };

std::string_view to_string(OutputMode mode);

std::string to_string(Wide value);

/// Parses an unsigned decimal literal into a Wide. Throws ParseError.
Wide parse_wide(std::string_view text);

/// Running summary of a stream: element count, observed maximum and total weight.
struct StreamStats {
  std::uint64_t count = 0;
  Weight max_weight = 0;
  Wide total = 0;

  void observe(Weight x) {
    ++count;
    total += x;
    if (x > max_weight) max_weight = x;
  }

  bool operator==(const StreamStats&) const = default;
};

}  // namespace streampart

#endif  // STREAMPART_TYPES_HPP
