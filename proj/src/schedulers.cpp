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
#include "streampart/schedulers.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>

#include "streampart/errors.hpp"
#include "streampart/probe.hpp"
#include "streampart/probe_ext.hpp"
#include "streampart/space_meter.hpp"

namespace streampart {

namespace {

// Count, total and maximum of the stream, kept by every driver to verify
// declared knowledge after the pass.
constexpr std::size_t kStatsWords = 3;

void require_parts(std::size_t parts) {
  if (parts < 2) throw DomainError("partition count p must be at least 2");
}

void require_epsilon(const Rational& epsilon) {
  if (epsilon <= 0) throw DomainError("epsilon must be positive");
}

// Reads the stream once in chunks, updating stats and rejecting elements above
// a declared maximum before any instance sees them.
template <class OnChunk>
StreamStats drive_pass(ElementStream& stream, const PassOptions& options,
                       std::optional<Weight> declared_max, OnChunk&& on_chunk) {
  const std::size_t chunk_size = std::max<std::size_t>(options.chunk_size, 1);
  StreamStats stats;
  std::vector<Weight> chunk;
  chunk.reserve(chunk_size);
  bool exhausted = false;
  while (!exhausted) {
    chunk.clear();
    while (chunk.size() < chunk_size) {
      const auto x = stream.next();
      if (!x) {
        exhausted = true;
        break;
      }
      if (declared_max && *x > *declared_max) {
        throw DeclaredBoundViolation("element " + std::to_string(stats.count + 1) +
                                     " has weight " + std::to_string(*x) +
                                     " above the declared maximum " +
                                     std::to_string(*declared_max));
      }
      stats.observe(*x);
      chunk.push_back(*x);
    }
    if (!chunk.empty()) on_chunk(std::span<const Weight>(chunk));
  }
  return stats;
}

SolveResult make_result(OutputMode mode, std::string_view algorithm, const Rational& bottleneck,
                        const StreamStats& stats) {
  SolveResult result;
  result.mode = mode;
  result.algorithm = std::string(algorithm);
  result.bottleneck = bottleneck;
  result.bottleneck_ceil = ceil_to_wide(bottleneck);
  result.elements_read = stats.count;
  result.stats = stats;
  return result;
}

void check_max_weight(Weight declared, const StreamStats& stats) {
  if (stats.max_weight != declared) {
    throw KnowledgeMismatch("declared m = " + std::to_string(declared) +
                            " but the stream maximum is " + std::to_string(stats.max_weight));
  }
}

void check_length(std::uint64_t declared, const StreamStats& stats) {
  if (stats.count != declared) {
    throw KnowledgeMismatch("declared n = " + std::to_string(declared) + " but the stream has " +
                            std::to_string(stats.count) + " elements");
  }
}

void check_total(Wide declared, const StreamStats& stats) {
  if (stats.total != declared) {
    throw KnowledgeMismatch("declared S = " + to_string(declared) + " but the stream total is " +
                            to_string(stats.total));
  }
}

// Runs a list of Probe copies over one pass and returns the first success in
// list order, which callers arrange to be ascending threshold order.
struct ProbeGridRun {
  StreamStats stats;
  std::optional<std::size_t> first_success;
  std::optional<ProbeOutcome> outcome;
  std::size_t peak_words = 0;
};

ProbeGridRun run_probe_grid(ElementStream& stream, const std::vector<Rational>& thresholds,
                            std::size_t parts, OutputMode mode, const PassOptions& options,
                            std::optional<Weight> declared_max, std::size_t extra_words) {
  SpaceMeter meter;
  ProbeGridRun run;
  {
    MeterCharge driver(&meter, kStatsWords + extra_words);
    std::vector<ProbeInstance> probes;
    probes.reserve(thresholds.size());
    for (const auto& threshold : thresholds) probes.emplace_back(threshold, parts, mode, &meter);

    run.stats = drive_pass(stream, options, declared_max, [&](std::span<const Weight> chunk) {
      fan_out(std::span<ProbeInstance>(probes), chunk, options.execution);
    });
    for (std::size_t k = 0; k < probes.size(); ++k) {
      if (probes[k].alive()) {
        run.first_success = k;
        run.outcome = probes[k].finish(run.stats.count);
        break;
      }
    }
  }
  run.peak_words = meter.peak_words();
  return run;
}

[[noreturn]] void no_feasible_copy(std::string_view algorithm) {
  throw std::logic_error(std::string(algorithm) + ": no feasibility copy succeeded");
}

}  // namespace

SolveResult solve_known_s(ElementStream& stream, std::size_t parts, const Rational& epsilon,
                          Wide total, OutputMode mode, const PassOptions& options) {
  require_parts(parts);
  require_epsilon(epsilon);
  const Rational ratio = 1 + epsilon;
  // C = ceil(log p / log(1+eps)), the least C with (1+eps)^C >= p.
  const unsigned steps = min_exponent_reaching(ratio, Rational(parts));
  std::vector<Rational> thresholds;
  thresholds.reserve(steps + 1);
  Rational threshold = to_rational(total) / parts;
  for (unsigned i = 0; i <= steps; ++i) {
    thresholds.push_back(threshold);
    threshold *= ratio;
  }

  auto run = run_probe_grid(stream, thresholds, parts, mode, options, std::nullopt, 0);
  check_total(total, run.stats);
  if (!run.first_success) no_feasible_copy(algorithm_tag::known_s);

  auto result = make_result(mode, algorithm_tag::known_s, thresholds[*run.first_success], run.stats);
  result.separators = std::move(run.outcome->separators);
  result.instance_count = thresholds.size();
  result.space_peak_words = run.peak_words;
  result.epsilon = epsilon;
  return result;
}

SolveResult solve_known_mn(ElementStream& stream, std::size_t parts, const Rational& epsilon,
                           Weight max_weight, std::uint64_t length, OutputMode mode,
                           const PassOptions& options) {
  require_parts(parts);
  require_epsilon(epsilon);
  const Rational ratio = 1 + epsilon;
  // Covers [m, m n]: the least C with (1+eps)^C >= n.
  const unsigned steps = min_exponent_reaching(ratio, Rational(length));
  std::vector<Rational> thresholds;
  thresholds.reserve(steps + 1);
  Rational threshold = max_weight;
  for (unsigned i = 0; i <= steps; ++i) {
    thresholds.push_back(threshold);
    threshold *= ratio;
  }

  auto run = run_probe_grid(stream, thresholds, parts, mode, options, max_weight, 0);
  check_length(length, run.stats);
  check_max_weight(max_weight, run.stats);
  if (!run.first_success) no_feasible_copy(algorithm_tag::known_mn);

  auto result = make_result(mode, algorithm_tag::known_mn, thresholds[*run.first_success], run.stats);
  result.separators = std::move(run.outcome->separators);
  result.instance_count = thresholds.size();
  result.space_peak_words = run.peak_words;
  result.epsilon = epsilon;
  return result;
}

SolveResult solve_known_m(ElementStream& stream, std::size_t parts, const Rational& epsilon,
                          Weight max_weight, OutputMode mode, const PassOptions& options) {
  require_parts(parts);
  require_epsilon(epsilon);
  const Rational half_step = 1 + epsilon / 2;
  const Rational delta = epsilon / half_step;
  const Rational full_step = 1 + epsilon;
  // i_max = ceil(log2(1/delta^2)), j_max = ceil(1/log2(1+eps)),
  // k_max = ceil(1/log2(1+eps/2)), each as the least exponent reaching its target.
  const unsigned i_max = min_exponent_reaching(Rational(2), 1 / (delta * delta));
  const unsigned j_max = min_exponent_reaching(full_step, Rational(2));
  const unsigned k_max = min_exponent_reaching(half_step, Rational(2));

  std::vector<Rational> full_powers(j_max + 1);
  full_powers[0] = 1;
  for (unsigned j = 1; j <= j_max; ++j) full_powers[j] = full_powers[j - 1] * full_step;

  SpaceMeter meter;
  StreamStats stats;
  std::optional<std::size_t> probe_best;
  std::optional<ProbeOutcome> probe_outcome;
  std::optional<std::size_t> ext_best;
  std::optional<ProbeExtResult> ext_outcome;
  std::vector<Rational> probe_bounds;
  GridSummary grid;
  {
    MeterCharge driver(&meter, kStatsWords);
    std::vector<ProbeInstance> probes;
    probes.reserve(static_cast<std::size_t>(i_max + 1) * (j_max + 1));
    Rational doubling = max_weight;
    for (unsigned i = 0; i <= i_max; ++i) {
      for (unsigned j = 0; j <= j_max; ++j) {
        probe_bounds.push_back(doubling * full_powers[j]);
        probes.emplace_back(probe_bounds.back(), parts, mode, &meter);
      }
      doubling *= 2;
    }
    std::vector<ProbeExtInstance> exts;
    exts.reserve(k_max + 1);
    Rational half_power = 1;
    for (unsigned k = 0; k <= k_max; ++k) {
      exts.emplace_back(max_weight, parts, half_power - 1, mode, &meter);
      half_power *= half_step;
    }
    grid.probe_instances = probes.size();
    grid.probe_ext_instances = exts.size();

    stats = drive_pass(stream, options, max_weight, [&](std::span<const Weight> chunk) {
      fan_out(std::span<ProbeInstance>(probes), chunk, options.execution);
      fan_out(std::span<ProbeExtInstance>(exts), chunk, options.execution);
    });
    check_max_weight(max_weight, stats);

    // Strict comparisons keep the lowest (i, j) among equal values.
    for (std::size_t k = 0; k < probes.size(); ++k) {
      if (probes[k].alive() && (!probe_best || probe_bounds[k] < probe_bounds[*probe_best])) {
        probe_best = k;
      }
    }
    if (probe_best) probe_outcome = probes[*probe_best].finish(stats.count);
    for (std::size_t k = 0; k < exts.size(); ++k) {
      auto outcome = exts[k].finish(stats.count);
      if (!ext_outcome || outcome.bound < ext_outcome->bound) {
        ext_best = k;
        ext_outcome = std::move(outcome);
      }
    }
  }

  if (probe_best) grid.probe_best = probe_bounds[*probe_best];
  if (ext_outcome) grid.probe_ext_best = ext_outcome->bound;

  SolveResult result;
  const bool use_probe = probe_best && (!ext_outcome || probe_bounds[*probe_best] <= ext_outcome->bound);
  if (use_probe) {
    result = make_result(mode, algorithm_tag::known_m, probe_bounds[*probe_best], stats);
    result.separators = std::move(probe_outcome->separators);
  } else if (ext_outcome) {
    result = make_result(mode, algorithm_tag::known_m, ext_outcome->bound, stats);
    result.separators = std::move(ext_outcome->separators);
    result.merges = ext_outcome->merges;
  } else {
    no_feasible_copy(algorithm_tag::known_m);
  }
  result.instance_count = grid.probe_instances + grid.probe_ext_instances;
  result.space_peak_words = meter.peak_words();
  result.epsilon = epsilon;
  if (epsilon >= Rational(1, 64)) {
    result.warning_flags.emplace_back(warning_flag::epsilon_outside_guarantee);
  }
  result.grid = std::move(grid);
  return result;
}

SolveResult solve_unknown_part(ElementStream& stream, std::size_t parts,
                               const PrefixObserver& observer) {
  require_parts(parts);
  using Block = PrefixState::Block;
  constexpr Wide wide_max = std::numeric_limits<Wide>::max();
  const Wide p = parts;

  SpaceMeter meter;
  StreamStats stats;
  std::vector<Block> blocks;
  std::vector<Block> rebuilt;
  blocks.reserve(parts);
  rebuilt.reserve(parts + 1);
  {
    // Running n, S, m plus (start, weight) per block.
    MeterCharge state(&meter, kStatsWords + 2 * parts);
    while (const auto next = stream.next()) {
      const Weight x = *next;
      stats.observe(x);
      if (stats.total > wide_max / (2 * p)) {
        throw DomainError("stream total too large for exact bound comparisons");
      }
      // W + w <= B with B = 2 max{m, S/p}  <=>  p (W + w) <= 2 max{m p, S}.
      const Wide limit = 2 * std::max(Wide(stats.max_weight) * p, stats.total);
      const Index index = stats.count;

      // In-memory Probe over (w_1, ..., w_p, x); its summaries are scratch.
      MeterCharge scratch(&meter, 2 * (parts + 1));
      rebuilt.clear();
      Block current{1, 0};
      bool opened = false;
      auto absorb = [&](const Block& item) {
        if (p * item.weight > limit) {
          throw std::logic_error("unknown-2approx scheduler: summary exceeds the current bound");
        }
        if (!opened) {
          current = item;
          opened = true;
        } else if (p * (current.weight + item.weight) <= limit) {
          current.weight += item.weight;
        } else {
          rebuilt.push_back(current);
          if (rebuilt.size() == parts) {
            throw std::logic_error("unknown-2approx scheduler: internal probe ran out of blocks");
          }
          current = item;
        }
      };
      for (const auto& block : blocks) absorb(block);
      absorb(Block{index, x});
      rebuilt.push_back(current);
      blocks.swap(rebuilt);

      if (observer) {
        PrefixState state_view;
        state_view.elements = stats.count;
        state_view.total = stats.total;
        state_view.max_weight = stats.max_weight;
        state_view.bound = std::max(Rational(2 * to_big(stats.max_weight)),
                                    Rational(2 * to_big(stats.total), to_big(p)));
        state_view.blocks = blocks;
        observer(state_view);
      }
    }
  }

  const Rational bound = std::max(Rational(2 * to_big(stats.max_weight)),
                                  Rational(2 * to_big(stats.total), to_big(p)));
  auto result = make_result(OutputMode::part, algorithm_tag::unknown, bound, stats);
  Partitioning part;
  part.separators.reserve(parts + 1);
  for (const auto& block : blocks) part.separators.push_back(block.start);
  if (part.separators.empty()) part.separators.push_back(1);
  part.separators.resize(parts + 1, stats.count + 1);
  result.separators = std::move(part);
  result.instance_count = 1;
  result.space_peak_words = meter.peak_words();
  return result;
}

SolveResult solve_unknown_partb(ElementStream& stream, std::size_t parts) {
  require_parts(parts);
  SpaceMeter meter;
  StreamStats stats;
  {
    MeterCharge state(&meter, kStatsWords);
    while (const auto x = stream.next()) stats.observe(*x);
  }
  const Rational m = to_rational(stats.max_weight);
  const Rational bound = std::max(m, Rational(to_big(stats.total), parts)) + m;
  auto result = make_result(OutputMode::partb, algorithm_tag::unknown, bound, stats);
  result.instance_count = 0;
  result.space_peak_words = meter.peak_words();
  return result;
}

void verify_profile(const KnowledgeProfile& profile, const StreamStats& stats) {
  if (profile.max_weight) check_max_weight(*profile.max_weight, stats);
  if (profile.length) check_length(*profile.length, stats);
  if (profile.total) check_total(*profile.total, stats);
}

SolveResult dispatch(ElementStream& stream, std::size_t parts,
                     const std::optional<Rational>& epsilon, const KnowledgeProfile& profile,
                     OutputMode mode, const PassOptions& options) {
  auto need_epsilon = [&]() -> const Rational& {
    if (!epsilon) throw UsageError("epsilon is required when m, n or S is declared");
    return *epsilon;
  };

  SolveResult result;
  if (profile.total) {
    result = solve_known_s(stream, parts, need_epsilon(), *profile.total, mode, options);
  } else if (profile.max_weight) {
    // Also taken when n is declared: known-m needs less space than known-mn.
    result = solve_known_m(stream, parts, need_epsilon(), *profile.max_weight, mode, options);
  } else if (mode == OutputMode::part) {
    result = solve_unknown_part(stream, parts);
  } else {
    result = solve_unknown_partb(stream, parts);
  }
  verify_profile(profile, result.stats);
  return result;
}

namespace {

std::string json_number(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return ec == std::errc() ? std::string(buffer, ptr) : std::string("null");
}

std::string json_string(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_json(const SolveResult& result) {
  std::string out = "{";
  out += "\"mode\": " + json_string(to_string(result.mode));
  out += ", \"algorithm\": " + json_string(result.algorithm);
  out += ", \"bottleneck_num\": " + boost::multiprecision::numerator(result.bottleneck).str();
  out += ", \"bottleneck_den\": " + boost::multiprecision::denominator(result.bottleneck).str();
  out += ", \"bottleneck_ceil\": " + to_string(result.bottleneck_ceil);
  out += ", \"separators\": ";
  if (result.separators) {
    out += '[';
    const auto& s = result.separators->separators;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (j != 0) out += ", ";
      out += std::to_string(s[j]);
    }
    out += ']';
  } else {
    out += "null";
  }
  out += ", \"merges\": " + (result.merges ? std::to_string(*result.merges) : std::string("null"));
  out += ", \"instance_count\": " + std::to_string(result.instance_count);
  out += ", \"space_peak_words\": " + std::to_string(result.space_peak_words);
  out += ", \"elements_read\": " + std::to_string(result.elements_read);
  out += ", \"epsilon\": " + (result.epsilon ? json_number(to_double(*result.epsilon)) : std::string("null"));
  out += ", \"warning_flags\": [";
  for (std::size_t k = 0; k < result.warning_flags.size(); ++k) {
    if (k != 0) out += ", ";
    out += json_string(result.warning_flags[k]);
  }
  out += "]}";
  return out;
}

std::string_view to_string(Execution execution) {
  return execution == Execution::openmp ? "openmp" : "serial";
}

}  // namespace streampart
