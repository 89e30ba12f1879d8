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
#ifndef STREAMPART_BENCH_HPP
#define STREAMPART_BENCH_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "streampart/generators.hpp"
#include "streampart/rational.hpp"
#include "streampart/schedulers.hpp"
#include "streampart/types.hpp"

namespace streampart {

struct BenchRow {
  GeneratorSpec generator;
  std::string algorithm;  // one of algorithm_tag::*
  OutputMode mode = OutputMode::part;
  std::optional<Rational> epsilon;
  std::size_t parts = 2;
};

struct BenchRecord {
  BenchRow row;
  Rational bottleneck;
  Wide optimum = 0;
  double ratio = 0.0;
  /// Guaranteed ratio for the row's algorithm: 1+eps or 2.
  std::optional<Rational> guarantee;
  bool within_guarantee = false;
  std::size_t space_peak_words = 0;
  std::size_t instance_count = 0;
  std::uint64_t elements_read = 0;
  double wall_ms = 0.0;
  /// Non-empty if the row failed; the remaining fields are then unspecified.
  std::string error;
};

/**
 * Bench config, JSON: {"rows": [ {...}, ... ]} or a bare array. Row fields:
 *   kind (uniform|constant|spike|yz|index), n, m, t, i, bits, seed,
 *   p, algorithm (known-S|known-mn|known-m|unknown-2approx),
 *   mode (part|partb, default part), epsilon ("1/10" or 0.1).
 * Hard kinds default to p = 2 and reject any other p.
 */
std::vector<BenchRow> parse_bench_config(std::string_view json_text);

/// Generates, solves and checks every row against the binsearch oracle.
/// Row errors are captured in the record; the run continues.
std::vector<BenchRecord> run_bench(const std::vector<BenchRow>& rows,
                                   const PassOptions& options = {});

std::string_view bench_csv_header();
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace streampart

#endif  // STREAMPART_BENCH_HPP
