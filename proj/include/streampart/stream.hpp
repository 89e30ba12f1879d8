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
#ifndef STREAMPART_STREAM_HPP
#define STREAMPART_STREAM_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "streampart/types.hpp"

namespace streampart {

/// Pull-based, forward-only sequence of weights. The length is unknown until
/// next() returns nullopt.
class ElementStream {
 public:
  virtual ~ElementStream() = default;
  virtual std::optional<Weight> next() = 0;
};

/// Streams an in-memory sequence. The span must outlive the stream.
class SpanStream final : public ElementStream {
 public:
  explicit SpanStream(std::span<const Weight> weights) : weights_(weights) {}
  std::optional<Weight> next() override;

 private:
  std::span<const Weight> weights_;
  std::size_t pos_ = 0;
};

/// Parses whitespace-separated ASCII decimal integers lazily from an istream.
class TextStream final : public ElementStream {
 public:
  explicit TextStream(std::istream& in) : in_(in) {}

  /// Throws ParseError on a malformed token or a value beyond 64 bits.
  std::optional<Weight> next() override;

 private:
  std::istream& in_;
  std::uint64_t parsed_ = 0;
};

/// Wraps a stream and counts pulls, to verify one-pass discipline.
class CountingStream final : public ElementStream {
 public:
  explicit CountingStream(ElementStream& inner) : inner_(inner) {}
  std::optional<Weight> next() override;

  /// Elements handed out.
  std::uint64_t elements_read() const { return elements_; }
  /// Calls to next() after exhaustion was first reported.
  std::uint64_t pulls_past_end() const { return past_end_; }
  bool exhausted() const { return exhausted_; }

 private:
  ElementStream& inner_;
  std::uint64_t elements_ = 0;
  std::uint64_t past_end_ = 0;
  bool exhausted_ = false;
};

/// Drains a stream into memory (oracle and test use only).
std::vector<Weight> read_all(ElementStream& stream);

std::vector<Weight> parse_weights(std::string_view text);

/// Writes weights space-separated on one line, newline-terminated.
void write_weights(std::ostream& out, std::span<const Weight> weights);

}  // namespace streampart

#endif  // STREAMPART_STREAM_HPP
