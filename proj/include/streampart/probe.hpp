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
#ifndef STREAMPART_PROBE_HPP
#define STREAMPART_PROBE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "streampart/partitioning.hpp"
#include "streampart/rational.hpp"
#include "streampart/space_meter.hpp"
#include "streampart/stream.hpp"
#include "streampart/types.hpp"

namespace streampart {

enum class ProbeFailure { none, element_exceeds_bound, partitions_exhausted };

std::string_view to_string(ProbeFailure reason);

struct ProbeOutcome {
  bool success = false;
  ProbeFailure reason = ProbeFailure::none;
  /// Present for successful Part-mode runs only.
  std::optional<Partitioning> separators;
};

/**
 * One-pass greedy feasibility test for a bottleneck bound B.
 *
 * Builds maximal blocks of weight at most floor(B). A separator is the index
 * of the element that opens the next block, and the instance fails as soon as
 * a (p+1)-th block would be opened, so it succeeds exactly when the optimal
 * bottleneck is at most floor(B). In PartB mode no separators are stored.
 *
 * Model space: 4 words (index, block ordinal, block weight, threshold), plus
 * p-1 separator words in Part mode.
 */
class ProbeInstance {
 public:
  ProbeInstance(const Rational& bound, std::size_t parts, OutputMode mode,
                SpaceMeter* meter = nullptr);

  /// Consumes the next element. Throws ContractViolation on a failed instance.
  void feed(Weight x);

  /// Consumes elements until the chunk ends or the instance fails.
  void feed(std::span<const Weight> chunk);

  /// Ends the run for a stream of n elements. Unused separators are n+1.
  ProbeOutcome finish(std::uint64_t n) const;

  bool alive() const { return failure_ == ProbeFailure::none; }
  ProbeFailure failure() const { return failure_; }
  const Rational& bound() const { return bound_; }
  Wide threshold() const { return threshold_; }
  std::size_t block() const { return block_; }
  Wide block_weight() const { return weight_; }
  Index next_index() const { return next_index_; }

  static std::size_t words(std::size_t parts, OutputMode mode);

 private:
  Rational bound_;
  Wide threshold_;
  std::size_t parts_;
  OutputMode mode_;
  std::size_t block_ = 1;
  Wide weight_ = 0;
  Index next_index_ = 1;
  ProbeFailure failure_ = ProbeFailure::none;
  std::vector<Index> separators_;
  MeterCharge charge_;
};

ProbeOutcome probe_run(ElementStream& stream, const Rational& bound, std::size_t parts,
                       OutputMode mode = OutputMode::part, SpaceMeter* meter = nullptr);

ProbeOutcome probe_run(std::span<const Weight> weights, const Rational& bound, std::size_t parts,
                       OutputMode mode = OutputMode::part, SpaceMeter* meter = nullptr);

/// True iff every recorded (non-padding) separator s_k closes a maximal block:
/// weight(block k) + X_{s_k} > floor(B).
bool greedy_maximality_check(std::span<const Weight> weights, const ProbeOutcome& outcome,
                             const Rational& bound);

}  // namespace streampart

#endif  // STREAMPART_PROBE_HPP
