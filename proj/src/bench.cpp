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
#include "streampart/bench.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "streampart/errors.hpp"
#include "streampart/oracle.hpp"

namespace streampart {

namespace {

using nlohmann::json;

std::uint64_t get_u64(const json& row, const char* key, std::uint64_t fallback) {
  if (!row.contains(key)) return fallback;
  const auto& value = row.at(key);
  if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
    throw ParseError(std::string("bench row field '") + key + "' must be a non-negative integer");
  }
  return value.get<std::uint64_t>();
}

Rational get_epsilon(const json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number()) return parse_rational(value.dump());
  throw ParseError("bench row field 'epsilon' must be a string or a number");
}

bool is_hard(GeneratorKind kind) {
  return kind == GeneratorKind::yz_hard || kind == GeneratorKind::index_hard;
}

BenchRow parse_row(const json& row) {
  if (!row.is_object()) throw ParseError("bench rows must be JSON objects");
  BenchRow parsed;
  parsed.generator.kind = parse_generator_kind(row.value("kind", std::string("uniform")));
  parsed.generator.n = get_u64(row, "n", 0);
  parsed.generator.m = get_u64(row, "m", 0);
  parsed.generator.t = get_u64(row, "t", 0);
  parsed.generator.index = get_u64(row, "i", 0);
  parsed.generator.bits = row.value("bits", std::string());
  parsed.generator.seed = get_u64(row, "seed", 0);
  parsed.algorithm = row.value("algorithm", std::string(algorithm_tag::unknown));
  const auto mode = row.value("mode", std::string("part"));
  if (mode == "part") {
    parsed.mode = OutputMode::part;
  } else if (mode == "partb") {
    parsed.mode = OutputMode::partb;
  } else {
    throw ParseError("bench row mode must be part or partb");
  }
  if (row.contains("epsilon") && !row.at("epsilon").is_null()) {
    parsed.epsilon = get_epsilon(row.at("epsilon"));
  }
  parsed.parts = get_u64(row, "p", 2);
  return parsed;
}

std::optional<Rational> guarantee_of(const BenchRow& row, const SolveResult& result) {
  if (row.algorithm == algorithm_tag::unknown) return Rational(2);
  if (!result.warning_flags.empty() || !row.epsilon) return std::nullopt;
  return 1 + *row.epsilon;
}

SolveResult solve_row(const BenchRow& row, std::span<const Weight> weights, const PassOptions& options) {
  if (is_hard(row.generator.kind) && row.parts != 2) {
    throw DomainError("hard instance kinds are defined for p = 2 only");
  }
  SpanStream stream(weights);
  StreamStats stats;
  for (Weight x : weights) stats.observe(x);
  auto need_epsilon = [&]() -> const Rational& {
    if (!row.epsilon) throw UsageError("algorithm " + row.algorithm + " needs epsilon");
    return *row.epsilon;
  };
  if (row.algorithm == algorithm_tag::known_s) {
    return solve_known_s(stream, row.parts, need_epsilon(), stats.total, row.mode, options);
  }
  if (row.algorithm == algorithm_tag::known_mn) {
    return solve_known_mn(stream, row.parts, need_epsilon(), stats.max_weight, stats.count,
                          row.mode, options);
  }
  if (row.algorithm == algorithm_tag::known_m) {
    return solve_known_m(stream, row.parts, need_epsilon(), stats.max_weight, row.mode, options);
  }
  if (row.algorithm == algorithm_tag::unknown) {
    return row.mode == OutputMode::part ? solve_unknown_part(stream, row.parts)
                                        : solve_unknown_partb(stream, row.parts);
  }
  throw UsageError("unknown algorithm '" + row.algorithm + "'");
}

std::string csv_field(std::string text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

}  // namespace

std::vector<BenchRow> parse_bench_config(std::string_view json_text) {
  json config;
  try {
    config = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bench config: ") + e.what());
  }
  const json* rows = &config;
  if (config.is_object()) {
    if (!config.contains("rows")) throw ParseError("bench config object needs a 'rows' array");
    rows = &config.at("rows");
  }
  if (!rows->is_array()) throw ParseError("bench config rows must be an array");
  std::vector<BenchRow> parsed;
  for (const auto& row : *rows) {
    try {
      parsed.push_back(parse_row(row));
    } catch (const json::exception& e) {
      throw ParseError(std::string("bench config row: ") + e.what());
    }
  }
  return parsed;
}

std::vector<BenchRecord> run_bench(const std::vector<BenchRow>& rows, const PassOptions& options) {
  std::vector<BenchRecord> records;
  records.reserve(rows.size());
  for (const auto& row : rows) {
    BenchRecord record;
    record.row = row;
    try {
      const auto weights = generate(row.generator);
      const auto started = std::chrono::steady_clock::now();
      const auto result = solve_row(row, weights, options);
      const auto elapsed = std::chrono::steady_clock::now() - started;
      record.wall_ms = std::chrono::duration<double, std::milli>(elapsed).count();
      record.bottleneck = result.bottleneck;
      record.optimum = opt_bottleneck_binsearch(weights, row.parts).optimum;
      const Rational optimum = to_rational(record.optimum);
      record.ratio = record.optimum == 0 ? (result.bottleneck == 0 ? 1.0 : 0.0)
                                         : to_double(result.bottleneck / optimum);
      record.guarantee = guarantee_of(row, result);
      record.within_guarantee = result.bottleneck >= optimum &&
                                (!record.guarantee || result.bottleneck <= *record.guarantee * optimum);
      record.space_peak_words = result.space_peak_words;
      record.instance_count = result.instance_count;
      record.elements_read = result.elements_read;
    } catch (const std::exception& e) {
      record.error = e.what();
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::string_view bench_csv_header() {
  return "kind,n,m,t,i,bits,seed,p,algorithm,mode,epsilon,bottleneck,bottleneck_num,"
         "bottleneck_den,oracle,ratio,guarantee,within_guarantee,space_peak_words,"
         "instance_count,elements_read,wall_ms,error";
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << bench_csv_header() << '\n';
  for (const auto& record : records) {
    const auto& row = record.row;
    const auto& gen = row.generator;
    const bool ok = record.error.empty();
    std::ostringstream line;
    line << std::setprecision(10);
    line << to_string(gen.kind) << ',' << gen.n << ',' << gen.m << ',' << gen.t << ','
         << gen.index << ',' << gen.bits << ',' << gen.seed << ',' << row.parts << ','
         << row.algorithm << ',' << to_string(row.mode) << ','
         << (row.epsilon ? to_string(*row.epsilon) : std::string()) << ',';
    if (ok) {
      line << to_double(record.bottleneck) << ','
           << boost::multiprecision::numerator(record.bottleneck) << ','
           << boost::multiprecision::denominator(record.bottleneck) << ','
           << to_string(record.optimum) << ',' << record.ratio << ','
           << (record.guarantee ? to_string(*record.guarantee) : std::string()) << ','
           << (record.within_guarantee ? 1 : 0) << ',' << record.space_peak_words << ','
           << record.instance_count << ',' << record.elements_read << ',' << record.wall_ms
           << ',';
    } else {
      line << ",,,,,,,,,,,";
    }
    line << csv_field(record.error);
    out << line.str() << '\n';
  }
}

}  // namespace streampart
