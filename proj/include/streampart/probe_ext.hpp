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
#ifndef STREAMPART_PROBE_EXT_HPP
#define STREAMPART_PROBE_EXT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "streampart/partitioning.hpp"
#include "streampart/rational.hpp"
#include "streampart/space_meter.hpp"
#include "streampart/stream.hpp"
#include "streampart/types.hpp"

namespace streampart {

struct ProbeExtResult {
  /// Exact 2^merges * m * (1 + alpha).
  Rational bound;
  std::uint32_t merges = 0;
  /// Present in Part mode.
  std::optional<Partitioning> separators;
};

/**
 * Feasibility test that never fails: when the p-th block overflows, adjacent
 * blocks (1,2), (3,4), ... are merged and the threshold doubles.
 *
 * The threshold after i merges is floor(2^i * m * (1+alpha)), taken from the
 * exact rational each time. With odd p the open last block survives a merge
 * and absorbs the overflowing element; with even p that element opens a fresh
 * block at the tentative boundary.
 *
 * Model space: 7 words (index, block ordinal, block weight, threshold, merge
 * count, and numerator/denominator of m(1+alpha)), plus p separator words in
 * Part mode (s_1..s_{p-1} and the tentative boundary).
 */
class ProbeExtInstance {
 public:
  ProbeExtInstance(Weight max_weight, std::size_t parts, const Rational& alpha, OutputMode mode,
                   SpaceMeter* meter = nullptr);

  /// Throws DeclaredBoundViolation if x exceeds the declared maximum.
  void feed(Weight x);

  /// Elements must already be checked against the declared maximum; used by
  /// the parallel fan-out where exceptions cannot propagate.
  void feed(std::span<const Weight> chunk);

  ProbeExtResult finish(std::uint64_t n) const;

  std::uint32_t merges() const { return merges_; }
  Wide threshold() const { return threshold_; }
  Rational bound() const;
  const Rational& alpha() const { return alpha_; }
  std::size_t block() const { return block_; }
  Wide block_weight() const { return weight_; }

  static std::size_t words(std::size_t parts, OutputMode mode);

 private:
  void step(Weight x);
  void merge(Weight x);

  Weight max_weight_;
  std::size_t parts_;
  Rational alpha_;
  OutputMode mode_;
  Rational initial_bound_;  // m (1 + alpha)
  Wide threshold_;
  std::uint32_t merges_ = 0;
  std::size_t block_ = 1;
  Wide weight_ = 0;
  Index next_index_ = 1;
  std::vector<Index> separators_;  // separators_[k] = s_k, slot 0 unused
  MeterCharge charge_;
};

ProbeExtResult probe_ext_run(ElementStream& stream, Weight max_weight, std::size_t parts,
                             const Rational& alpha, OutputMode mode = OutputMode::part,
                             SpaceMeter* meter = nullptr);

ProbeExtResult probe_ext_run(std::span<const Weight> weights, Weight max_weight,
                             std::size_t parts, const Rational& alpha,
                             OutputMode mode = OutputMode::part, SpaceMeter* meter = nullptr);

/// Lower bound on the stream weight after `merges` >= 1 merge operations:
/// (p m / 2)(2^i (1+alpha) - alpha - i) - (m / 2)(i + alpha).
Rational weight_lower_bound(std::uint32_t merges, std::size_t parts, Weight max_weight,
                            const Rational& alpha);

/// Approximation factor after `merges` >= 2 merge operations:
/// 2 + 2(alpha + i) / (2^{i-1}(1+alpha) - i - alpha).
/// Returns nullopt where the denominator is not positive (e.g. i = 2, alpha = 0).
std::optional<Rational> approx_factor_bound(std::uint32_t merges, const Rational& alpha);

}  // namespace streampart

#endif  // STREAMPART_PROBE_EXT_HPP
