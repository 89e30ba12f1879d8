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
#ifndef STREAMPART_GENERATORS_HPP
#define STREAMPART_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "streampart/types.hpp"

namespace streampart {

enum class GeneratorKind { uniform, constant, spike, yz_hard, index_hard };

std::string_view to_string(GeneratorKind kind);
/// Accepts "uniform", "constant", "spike", "yz" / "yz_hard", "index" / "index_hard".
GeneratorKind parse_generator_kind(std::string_view text);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::uniform;
  std::uint64_t n = 0;
  Weight m = 0;
  std::uint64_t t = 0;      // yz_hard
  std::uint64_t index = 0;  // Bob's i (yz_hard) or I (index_hard)
  std::string bits;         // index_hard, characters '0'/'1'
  std::uint64_t seed = 0;
};

/// iid uniform draws from {0..m}; identical seeds give identical sequences.
std::vector<Weight> gen_uniform(std::uint64_t n, Weight m, std::uint64_t seed);

/// n copies of m.
std::vector<Weight> gen_constant(std::uint64_t n, Weight m);

/// n ones with a single element of weight m at a seeded position.
std::vector<Weight> gen_spike(std::uint64_t n, Weight m, std::uint64_t seed);

/**
 * Index reduction instance for p = 2 over a bit string of length N.
 * Y has length 2N over {1,3}: Y_i = 2 bits_{i/2} + 1 for even i and
 * Y_i = 4 - Y_{i+1} for odd i. Z is (2I - N - 1) fours followed by a 2.
 * Requires ceil(N/2) <= I <= N. For even N and I = N/2 the four-count is
 * negative and Z degenerates to (2).
 */
std::vector<Weight> gen_index_hard(std::string_view bits, std::uint64_t index);

/// True when 2I - N - 1 >= 0, i.e. Z is well defined and the total weight is 8I - 2.
bool index_hard_balanced(std::size_t bit_count, std::uint64_t index);

/**
 * Hard Y o Z instance for p = 2, length 2n. Y has 2(t-1) leading ones and then
 * n - 3t + 2 symbols from {0, 11} with exactly t "11" symbols, placed at the
 * given symbol slots (0-based, strictly increasing). Z has 4(i-1) ones then zeros.
 */
std::vector<Weight> yz_hard_from_slots(std::uint64_t n, std::uint64_t t, std::uint64_t i,
                                       std::span<const std::uint64_t> pair_slots);

/// Same, with the t pair slots drawn uniformly from a seeded generator.
std::vector<Weight> gen_yz_hard(std::uint64_t n, std::uint64_t t, std::uint64_t i,
                                std::uint64_t seed);

/// Closed-form optimum of a yz_hard instance: 2t - 1 + 2(i - 1).
std::uint64_t yz_hard_optimum(std::uint64_t t, std::uint64_t i);

/// Runs the generator named by spec.kind. Throws DomainError on invalid parameters.
std::vector<Weight> generate(const GeneratorSpec& spec);

}  // namespace streampart

#endif  // STREAMPART_GENERATORS_HPP
