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
#include "streampart/probe_ext.hpp"

#include <string>

#include "streampart/errors.hpp"

namespace streampart {

std::size_t ProbeExtInstance::words(std::size_t parts, OutputMode mode) {
  return 7 + (mode == OutputMode::part ? parts : 0);
}

ProbeExtInstance::ProbeExtInstance(Weight max_weight, std::size_t parts, const Rational& alpha,
                                   OutputMode mode, SpaceMeter* meter)
    : max_weight_(max_weight),
      parts_(parts),
      alpha_(alpha),
      mode_(mode),
      initial_bound_(Rational(max_weight) * (1 + alpha)),
      threshold_(0) {
  if (parts < 2) throw DomainError("probe-ext needs p >= 2");
  if (alpha < 0) throw DomainError("probe-ext needs alpha >= 0");
  threshold_ = floor_to_wide(initial_bound_);
  if (mode_ == OutputMode::part) separators_.assign(parts + 1, 0);
  charge_ = MeterCharge(meter, words(parts, mode));
}

Rational ProbeExtInstance::bound() const {
  return initial_bound_ * power(Rational(2), merges_);
}

void ProbeExtInstance::feed(Weight x) {
  if (x > max_weight_) {
    throw DeclaredBoundViolation("element " + std::to_string(next_index_) + " has weight " +
                                 std::to_string(x) + " above the declared maximum " +
                                 std::to_string(max_weight_));
  }
  step(x);
}

void ProbeExtInstance::feed(std::span<const Weight> chunk) {
  for (Weight x : chunk) step(x);
}

void ProbeExtInstance::step(Weight x) {
  if (weight_ + x <= threshold_) {
    weight_ += x;
  } else if (block_ < parts_) {
    if (mode_ == OutputMode::part) separators_[block_] = next_index_;
    ++block_;
    weight_ = x;
  } else {
    merge(x);
  }
  ++next_index_;
}

void ProbeExtInstance::merge(Weight x) {
  ++merges_;
  const Rational doubled = initial_bound_ * power(Rational(2), merges_);
  threshold_ = floor_to_wide(doubled);

  const std::size_t half = parts_ / 2;
  if (mode_ == OutputMode::part) {
    separators_[parts_] = next_index_;  // tentative boundary at x
    for (std::size_t a = 1; a <= half; ++a) separators_[a] = separators_[2 * a];
  }
  block_ = half + 1;
  if (parts_ % 2 == 0) {
    weight_ = x;  // x opens the block starting at the tentative boundary
  } else {
    weight_ += x;  // the open last block survives, starting at s_{p-1}
  }
}

ProbeExtResult ProbeExtInstance::finish(std::uint64_t n) const {
  if (n + 1 < next_index_) {
    throw ContractViolation("finish with n smaller than the number of elements fed");
  }
  ProbeExtResult result;
  result.bound = bound();
  result.merges = merges_;
  if (mode_ == OutputMode::part) {
    Partitioning part;
    part.separators.reserve(parts_ + 1);
    part.separators.push_back(1);
    for (std::size_t k = 1; k < block_; ++k) part.separators.push_back(separators_[k]);
    part.separators.resize(parts_ + 1, n + 1);
    result.separators = std::move(part);
  }
  return result;
}

ProbeExtResult probe_ext_run(ElementStream& stream, Weight max_weight, std::size_t parts,
                             const Rational& alpha, OutputMode mode, SpaceMeter* meter) {
  ProbeExtInstance probe(max_weight, parts, alpha, mode, meter);
  std::uint64_t n = 0;
  while (auto x = stream.next()) {
    ++n;
    probe.feed(*x);
  }
  return probe.finish(n);
}

ProbeExtResult probe_ext_run(std::span<const Weight> weights, Weight max_weight,
                             std::size_t parts, const Rational& alpha, OutputMode mode,
                             SpaceMeter* meter) {
  SpanStream stream(weights);
  return probe_ext_run(stream, max_weight, parts, alpha, mode, meter);
}

Rational weight_lower_bound(std::uint32_t merges, std::size_t parts, Weight max_weight,
                            const Rational& alpha) {
  if (merges < 1) throw DomainError("weight lower bound needs at least one merge");
  const Rational i = merges;
  const Rational m = max_weight;
  const Rational p = parts;
  return (p * m / 2) * (power(Rational(2), merges) * (1 + alpha) - alpha - i) -
         (m / 2) * (i + alpha);
}

std::optional<Rational> approx_factor_bound(std::uint32_t merges, const Rational& alpha) {
  if (merges < 2) throw DomainError("approximation factor needs at least two merges");
  const Rational i = merges;
  const Rational denominator = power(Rational(2), merges - 1) * (1 + alpha) - i - alpha;
  if (denominator <= 0) return std::nullopt;
  return 2 + 2 * (alpha + i) / denominator;
}

}  // namespace streampart
