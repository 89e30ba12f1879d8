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
#include "streampart/stream.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "streampart/errors.hpp"

namespace streampart {

std::optional<Weight> SpanStream::next() {
  if (pos_ == weights_.size()) return std::nullopt;
  return weights_[pos_++];
}

std::optional<Weight> TextStream::next() {
  std::string token;
  if (!(in_ >> token)) {
    if (in_.bad()) throw ParseError("read error after element " + std::to_string(parsed_));
    return std::nullopt;
  }
  Weight value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  // from_chars accepts neither '+' nor leading whitespace, but does accept '-'.
  if (token.front() == '-') {
    throw ParseError("element " + std::to_string(parsed_ + 1) + ": negative weight '" + token + "'");
  }
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError("element " + std::to_string(parsed_ + 1) + ": weight out of range '" + token + "'");
  }
  if (ec != std::errc() || ptr != last) {
    throw ParseError("element " + std::to_string(parsed_ + 1) + ": not a decimal integer '" + token + "'");
  }
  ++parsed_;
  return value;
}

std::optional<Weight> CountingStream::next() {
  if (exhausted_) {
    ++past_end_;
    return std::nullopt;
  }
  auto value = inner_.next();
  if (value) {
    ++elements_;
  } else {
    exhausted_ = true;
  }
  return value;
}

std::vector<Weight> read_all(ElementStream& stream) {
  std::vector<Weight> weights;
  while (auto x = stream.next()) weights.push_back(*x);
  return weights;
}

std::vector<Weight> parse_weights(std::string_view text) {
  std::istringstream in{std::string(text)};
  TextStream stream(in);
  return read_all(stream);
}

void write_weights(std::ostream& out, std::span<const Weight> weights) {
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i != 0) out << ' ';
    out << weights[i];
  }
  out << '\n';
}

}  // namespace streampart
