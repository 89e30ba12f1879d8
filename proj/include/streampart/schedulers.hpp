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
#ifndef STREAMPART_SCHEDULERS_HPP
#define STREAMPART_SCHEDULERS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "streampart/fanout.hpp"
#include "streampart/partitioning.hpp"
#include "streampart/rational.hpp"
#include "streampart/stream.hpp"
#include "streampart/types.hpp"

namespace streampart {

namespace algorithm_tag {
inline constexpr std::string_view known_s = "known-S";
inline constexpr std::string_view known_mn = "known-mn";
inline constexpr std::string_view known_m = "known-m";
inline constexpr std::string_view unknown = "unknown-2approx";
}  // namespace algorithm_tag

namespace warning_flag {
/// solve_known_m ran with epsilon >= 1/64, outside the proven range.
inline constexpr std::string_view epsilon_outside_guarantee = "epsilon-outside-guarantee";
}  // namespace warning_flag

/// What the caller declares about the stream before the pass.
/// Declared values are verified against the stream after the pass.
struct KnowledgeProfile {
  std::optional<Weight> max_weight;
  std::optional<std::uint64_t> length;
  std::optional<Wide> total;
};

struct PassOptions {
  Execution execution = Execution::openmp;
  /// Elements buffered per fan-out round. Buffering is transport, not model state.
  std::size_t chunk_size = 4096;
};

/// Per-family breakdown for the known-m scheduler.
struct GridSummary {
  std::size_t probe_instances = 0;
  std::size_t probe_ext_instances = 0;
  /// Smallest successful Probe threshold, if any Probe succeeded.
  std::optional<Rational> probe_best;
  /// Smallest final value over the ProbeExt copies.
  std::optional<Rational> probe_ext_best;
};

struct SolveResult {
  OutputMode mode = OutputMode::part;
  std::string algorithm;
  Rational bottleneck;
  Wide bottleneck_ceil = 0;
  std::optional<Partitioning> separators;
  std::optional<std::uint32_t> merges;
  std::size_t instance_count = 0;
  std::size_t space_peak_words = 0;
  std::uint64_t elements_read = 0;
  std::optional<Rational> epsilon;
  std::vector<std::string> warning_flags;
  /// Observed during the pass; not part of the JSON surface.
  StreamStats stats;
  std::optional<GridSummary> grid;
};

/// Known-total search: Probe copies at (S/p)(1+eps)^i, i = 0..C with
/// C = ceil(log p / log(1+eps)). Returns the smallest successful threshold.
SolveResult solve_known_s(ElementStream& stream, std::size_t parts, const Rational& epsilon,
                          Wide total, OutputMode mode = OutputMode::part,
                          const PassOptions& options = {});

/// Probe copies at m(1+eps)^i, i = 0..ceil(log n / log(1+eps)).
SolveResult solve_known_mn(ElementStream& stream, std::size_t parts, const Rational& epsilon,
                           Weight max_weight, std::uint64_t length,
                           OutputMode mode = OutputMode::part, const PassOptions& options = {});

/**
 * Known-m scheduler. With delta = eps / (1 + eps/2), runs in one pass
 *  - Probe at 2^i (1+eps)^j m for i <= ceil(log2(1/delta^2)), j <= ceil(1/log2(1+eps));
 *  - ProbeExt with alpha_j = (1+eps/2)^j - 1 for j <= ceil(1/log2(1+eps/2)).
 * Returns the smallest value among successful Probes and all ProbeExt copies.
 * Ties prefer Probe, then the lowest (i, j).
 */
SolveResult solve_known_m(ElementStream& stream, std::size_t parts, const Rational& epsilon,
                          Weight max_weight, OutputMode mode = OutputMode::part,
                          const PassOptions& options = {});

/// State of the no-knowledge Part scheduler after an element, for observers.
struct PrefixState {
  struct Block {
    Index start = 1;
    Wide weight = 0;
  };
  std::uint64_t elements = 0;
  Wide total = 0;
  Weight max_weight = 0;
  Rational bound;  // 2 max{m, S/p}
  std::span<const Block> blocks;  // opened blocks only, 1 to p of them
};

using PrefixObserver = std::function<void(const PrefixState&)>;

/// 2-approximation for Part with no advance knowledge. Keeps p block
/// summaries and re-runs an in-memory Probe over (w_1, ..., w_p, x) with
/// B = 2 max{m, S/p} after every element.
SolveResult solve_unknown_part(ElementStream& stream, std::size_t parts,
                               const PrefixObserver& observer = {});

/// 2-approximation for PartB with no advance knowledge: max{m, S/p} + m.
SolveResult solve_unknown_partb(ElementStream& stream, std::size_t parts);

/// Picks a scheduler from the profile: S declared -> known-S; else m declared
/// -> known-m; else the 2-approximations. A declared n never selects known-mn,
/// which is reached through solve_known_mn. Every declared value is verified
/// after the pass.
SolveResult dispatch(ElementStream& stream, std::size_t parts,
                     const std::optional<Rational>& epsilon, const KnowledgeProfile& profile,
                     OutputMode mode, const PassOptions& options = {});

/// Throws KnowledgeMismatch if a declared value disagrees with the stats.
void verify_profile(const KnowledgeProfile& profile, const StreamStats& stats);

/// Single JSON object with the fields mode, algorithm, bottleneck_num,
/// bottleneck_den, bottleneck_ceil, separators, merges, instance_count,
/// space_peak_words, elements_read, epsilon, warning_flags.
/// Integers are written as exact JSON number literals of any size.
std::string to_json(const SolveResult& result);

}  // namespace streampart

#endif  // STREAMPART_SCHEDULERS_HPP
