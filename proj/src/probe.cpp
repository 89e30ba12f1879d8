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
#include "streampart/probe.hpp"

#include "streampart/errors.hpp"

namespace streampart {

std::string_view to_string(ProbeFailure reason) {
  switch (reason) {
    case ProbeFailure::none: return "none";
    case ProbeFailure::element_exceeds_bound: return "element-exceeds-bound";
    case ProbeFailure::partitions_exhausted: return "partitions-exhausted";
  }
  return "unknown";
}

std::size_t ProbeInstance::words(std::size_t parts, OutputMode mode) {
  return 4 + (mode == OutputMode::part ? parts - 1 : 0);
}

ProbeInstance::ProbeInstance(const Rational& bound, std::size_t parts, OutputMode mode,
                             SpaceMeter* meter)
    : bound_(bound), threshold_(0), parts_(parts), mode_(mode) {
  if (parts < 2) throw DomainError("probe needs p >= 2");
  if (bound < 0) throw DomainError("probe bound must be non-negative");
  threshold_ = floor_to_wide(bound);
  if (mode_ == OutputMode::part) separators_.reserve(parts - 1);
  charge_ = MeterCharge(meter, words(parts, mode));
}

void ProbeInstance::feed(Weight x) {
  if (!alive()) throw ContractViolation("feed on a failed probe instance");
  if (x > threshold_) {
    failure_ = ProbeFailure::element_exceeds_bound;
  } else if (weight_ + x <= threshold_) {
    weight_ += x;
  } else if (block_ < parts_) {
    if (mode_ == OutputMode::part) separators_.push_back(next_index_);
    ++block_;
    weight_ = x;
  } else {
    failure_ = ProbeFailure::partitions_exhausted;
  }
  ++next_index_;
}

void ProbeInstance::feed(std::span<const Weight> chunk) {
  for (Weight x : chunk) {
    if (!alive()) return;
    feed(x);
  }
}

ProbeOutcome ProbeInstance::finish(std::uint64_t n) const {
  ProbeOutcome outcome;
  if (!alive()) {
    outcome.reason = failure_;
    return outcome;
  }
  if (n + 1 < next_index_) {
    throw ContractViolation("finish with n smaller than the number of elements fed");
  }
  outcome.success = true;
  if (mode_ == OutputMode::part) {
    Partitioning part;
    part.separators.reserve(parts_ + 1);
    part.separators.push_back(1);
    part.separators.insert(part.separators.end(), separators_.begin(), separators_.end());
    part.separators.resize(parts_ + 1, n + 1);
    outcome.separators = std::move(part);
  }
  return outcome;
}

ProbeOutcome probe_run(ElementStream& stream, const Rational& bound, std::size_t parts,
                       OutputMode mode, SpaceMeter* meter) {
  ProbeInstance probe(bound, parts, mode, meter);
  std::uint64_t n = 0;
  while (auto x = stream.next()) {
    ++n;
    probe.feed(*x);
    if (!probe.alive()) break;
  }
  return probe.finish(n);
}

ProbeOutcome probe_run(std::span<const Weight> weights, const Rational& bound, std::size_t parts,
                       OutputMode mode, SpaceMeter* meter) {
  SpanStream stream(weights);
  return probe_run(stream, bound, parts, mode, meter);
}

bool greedy_maximality_check(std::span<const Weight> weights, const ProbeOutcome& outcome,
                             const Rational& bound) {
  if (!outcome.success || !outcome.separators) {
    throw ContractViolation("maximality check needs a successful Part-mode outcome");
  }
  const Wide threshold = floor_to_wide(bound);
  const auto& s = outcome.separators->separators;
  const Index n = weights.size();
  for (std::size_t k = 1; k + 1 < s.size(); ++k) {
    if (s[k] > n) continue;  // padding, not recorded
    Wide block = 0;
    for (Index i = s[k - 1]; i < s[k]; ++i) block += weights[i - 1];
    if (block + weights[s[k] - 1] <= threshold) return false;
  }
  return true;
}

}  // namespace streampart
