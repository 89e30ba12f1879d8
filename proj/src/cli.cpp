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
#include "streampart/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "streampart/bench.hpp"
#include "streampart/errors.hpp"
#include "streampart/generators.hpp"
#include "streampart/oracle.hpp"
#include "streampart/schedulers.hpp"
#include "streampart/stream.hpp"

namespace streampart {

namespace {

struct GenArgs {
  std::string kind;
  std::optional<std::uint64_t> n;
  std::uint64_t m = 0;
  std::uint64_t t = 0;
  std::uint64_t i = 0;
  std::string bits;
  std::uint64_t seed = 0;
  std::string out;
};

struct SolveArgs {
  std::size_t p = 0;
  std::string mode;
  std::string know;
  std::optional<std::string> epsilon;
  std::optional<std::uint64_t> m;
  std::optional<std::uint64_t> n;
  std::optional<std::string> s;
  std::string input;
};

struct OracleArgs {
  std::size_t p = 0;
  std::string method = "binsearch";
  std::string input;
};

struct BenchArgs {
  std::string config;
  std::string out;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw Error("cannot open input file '" + path + "'");
  return file;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path);
  if (!file) throw Error("cannot open output file '" + path + "'");
  return file;
}

template <typename Body>
void with_input(const std::string& path, std::istream& in, Body&& body) {
  if (path.empty()) {
    body(in);
  } else {
    auto file = open_input(path);
    body(file);
  }
}

int run_gen(const GenArgs& args, std::ostream& out) {
  GeneratorSpec spec;
  spec.kind = parse_generator_kind(args.kind);
  if (!args.n && spec.kind != GeneratorKind::index_hard) {
    throw UsageError("gen --kind " + args.kind + " needs --n");
  }
  spec.n = args.n.value_or(0);
  spec.m = args.m;
  spec.t = args.t;
  spec.index = args.i;
  spec.bits = args.bits;
  spec.seed = args.seed;
  const auto weights = generate(spec);
  if (args.out.empty()) {
    write_weights(out, weights);
  } else {
    auto file = open_output(args.out);
    write_weights(file, weights);
  }
  return exit_ok;
}

SolveResult solve_from(std::istream& source, const SolveArgs& args) {
  const OutputMode mode = args.mode == "part" ? OutputMode::part : OutputMode::partb;
  std::optional<Rational> epsilon;
  if (args.epsilon) epsilon = parse_rational(*args.epsilon);

  KnowledgeProfile profile;
  if (args.m) profile.max_weight = *args.m;
  if (args.n) profile.length = *args.n;
  if (args.s) profile.total = parse_wide(*args.s);

  TextStream stream(source);
  if (args.know == "none") {
    if (args.m || args.n || args.s) {
      throw UsageError("--know none does not accept --m, --n or --s");
    }
    return dispatch(stream, args.p, epsilon, profile, mode);
  }
  if (!epsilon) throw UsageError("--know " + args.know + " needs --epsilon");
  if (args.know == "m") {
    if (!args.m) throw UsageError("--know m needs --m");
    if (args.s) throw UsageError("--know m does not accept --s");
    return dispatch(stream, args.p, epsilon, profile, mode);
  }
  if (args.know == "mn") {
    if (!args.m || !args.n) throw UsageError("--know mn needs --m and --n");
    if (args.s) throw UsageError("--know mn does not accept --s");
    auto result = solve_known_mn(stream, args.p, *epsilon, *args.m, *args.n, mode);
    verify_profile(profile, result.stats);
    return result;
  }
  if (!args.s) throw UsageError("--know s needs --s");
  return dispatch(stream, args.p, epsilon, profile, mode);
}

int run_solve(const SolveArgs& args, std::istream& in, std::ostream& out) {
  SolveResult result;
  with_input(args.input, in, [&](std::istream& source) { result = solve_from(source, args); });
  out << to_json(result) << '\n';
  return exit_ok;
}

int run_oracle(const OracleArgs& args, std::istream& in, std::ostream& out) {
  const OracleMethod method = parse_oracle_method(args.method);
  std::vector<Weight> weights;
  with_input(args.input, in, [&](std::istream& source) {
    TextStream stream(source);
    weights = read_all(stream);
  });
  const auto result = method == OracleMethod::dp ? opt_bottleneck_dp(weights, args.p)
                                                 : opt_bottleneck_binsearch(weights, args.p);
  out << "{\"optimum\": " << to_string(result.optimum) << "}\n";
  return exit_ok;
}

int run_bench_command(const BenchArgs& args) {
  auto config = open_input(args.config);
  const std::string text{std::istreambuf_iterator<char>(config), std::istreambuf_iterator<char>()};
  const auto records = run_bench(parse_bench_config(text));
  auto csv = open_output(args.out);
  write_bench_csv(csv, records);
  return exit_ok;
}

}  // namespace

int execute_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                    std::ostream& err) {
  CLI::App app{"Streaming sequence partitioning", "streampart"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated stream");
  gen_cmd->add_option("--kind", gen.kind, "Generator kind")
      ->required()
      ->check(CLI::IsMember({"uniform", "constant", "spike", "yz", "index"}));
  gen_cmd->add_option("--n", gen.n, "Stream length (Y length for yz)");
  gen_cmd->add_option("--m", gen.m, "Maximum weight");
  gen_cmd->add_option("--t", gen.t, "Number of 11 pairs (yz)");
  gen_cmd->add_option("--i", gen.i, "Index (yz, index)");
  gen_cmd->add_option("--bits", gen.bits, "Bit string (index)");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run a one-pass partitioning algorithm");
  solve_cmd->add_option("--p", solve.p, "Number of blocks")->required();
  solve_cmd->add_option("--mode", solve.mode, "Output mode")
      ->required()
      ->check(CLI::IsMember({"part", "partb"}));
  solve_cmd->add_option("--know", solve.know, "Declared knowledge")
      ->required()
      ->check(CLI::IsMember({"none", "m", "mn", "s"}));
  solve_cmd->add_option("--epsilon", solve.epsilon, "Accuracy, e.g. 1/64 or 0.1");
  solve_cmd->add_option("--m", solve.m, "Declared maximum weight");
  solve_cmd->add_option("--n", solve.n, "Declared stream length");
  solve_cmd->add_option("--s", solve.s, "Declared total weight");
  solve_cmd->add_option("--input", solve.input, "Input file (default stdin)");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Compute the exact optimum offline");
  oracle_cmd->add_option("--p", oracle.p, "Number of blocks")->required();
  oracle_cmd->add_option("--method", oracle.method, "binsearch or dp")
      ->check(CLI::IsMember({"binsearch", "dp"}));
  oracle_cmd->add_option("--input", oracle.input, "Input file (default stdin)");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark configuration");
  bench_cmd->add_option("--config", bench.config, "JSON configuration")->required();
  bench_cmd->add_option("--out", bench.out, "CSV output file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (*gen_cmd) return run_gen(gen, out);
    if (*solve_cmd) return run_solve(solve, in, out);
    if (*oracle_cmd) return run_oracle(oracle, in, out);
    return run_bench_command(bench);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  }
}

}  // namespace streampart
