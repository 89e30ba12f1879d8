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
#include "streampart/types.hpp"

#include <algorithm>
#include <limits>

#include "streampart/errors.hpp"

namespace streampart {

std::string_view to_string(OutputMode mode) {
  return mode == OutputMode::part ? "part" : "partb";
}

std::string to_string(Wide value) {
  if (value == 0) return "0";
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Wide parse_wide(std::string_view text) {
  if (text.empty()) throw ParseError("empty integer literal");
  constexpr Wide max = std::numeric_limits<Wide>::max();
  Wide value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw ParseError("invalid integer literal '" + std::string(text) + "'");
    }
    const auto digit = static_cast<unsigned>(c - '0');
    if (value > (max - digit) / 10) {
      throw ParseError("integer literal out of range '" + std::string(text) + "'");
    }
    value = value * 10 + digit;
  }
  return value;
}

}  // namespace streampart
