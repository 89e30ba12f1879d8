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
#include "streampart/generators.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <random>

#include "streampart/errors.hpp"

namespace streampart {

std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::uniform: return "uniform";
    case GeneratorKind::constant: return "constant";
    case GeneratorKind::spike: return "spike";
    case GeneratorKind::yz_hard: return "yz";
    case GeneratorKind::index_hard: return "index";
  }
  return "unknown";
}

GeneratorKind parse_generator_kind(std::string_view text) {
  if (text == "uniform") return GeneratorKind::uniform;
  if (text == "constant") return GeneratorKind::constant;
  if (text == "spike") return GeneratorKind::spike;
  if (text == "yz" || text == "yz_hard") return GeneratorKind::yz_hard;
  if (text == "index" || text == "index_hard") return GeneratorKind::index_hard;
  throw UsageError("unknown generator kind '" + std::string(text) + "'");
}

std::vector<Weight> gen_uniform(std::uint64_t n, Weight m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Weight> draw(0, m);
  std::vector<Weight> weights(n);
  for (auto& x : weights) x = draw(rng);
  return weights;
}

std::vector<Weight> gen_constant(std::uint64_t n, Weight m) { return std::vector<Weight>(n, m); }

std::vector<Weight> gen_spike(std::uint64_t n, Weight m, std::uint64_t seed) {
  std::vector<Weight> weights(n, 1);
  if (n == 0) return weights;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> where(0, n - 1);
  weights[where(rng)] = m;
  return weights;
}

bool index_hard_balanced(std::size_t bit_count, std::uint64_t index) {
  return 2 * index >= bit_count + 1;
}

std::vector<Weight> gen_index_hard(std::string_view bits, std::uint64_t index) {
  const std::uint64_t count = bits.size();
  if (count == 0) throw DomainError("index_hard needs at least one bit");
  if (!std::all_of(bits.begin(), bits.end(), [](char c) { return c == '0' || c == '1'; })) {
    throw DomainError("index_hard bits must be a string over {0,1}");
  }
  if (index < (count + 1) / 2 || index > count) {
    throw DomainError("index_hard needs ceil(N/2) <= I <= N, got I = " + std::to_string(index) +
                      " with N = " + std::to_string(count));
  }
  std::vector<Weight> weights(2 * count);
  for (std::uint64_t k = 1; k <= count; ++k) {
    const Weight even = bits[k - 1] == '1' ? 3 : 1;  // Y_{2k} = 2 bits_k + 1
    weights[2 * k - 1] = even;
    weights[2 * k - 2] = 4 - even;                   // Y_{2k-1} = 4 - Y_{2k}
  }
  const std::uint64_t fours = index_hard_balanced(count, index) ? 2 * index - count - 1 : 0;
  weights.insert(weights.end(), fours, 4);
  weights.push_back(2);
  return weights;
}

std::vector<Weight> yz_hard_from_slots(std::uint64_t n, std::uint64_t t, std::uint64_t i,
                                       std::span<const std::uint64_t> pair_slots) {
  if (t < 1) throw DomainError("yz_hard needs t >= 1");
  if (n + 2 < 4 * t) throw DomainError("yz_hard needs n >= 4t - 2");
  if (i < 1 || i > t) throw DomainError("yz_hard needs 1 <= i <= t");
  if (pair_slots.size() != t) throw DomainError("yz_hard needs exactly t pair slots");
  const std::uint64_t symbols = n + 2 - 3 * t;
  for (std::size_t k = 0; k < pair_slots.size(); ++k) {
    if (pair_slots[k] >= symbols || (k > 0 && pair_slots[k] <= pair_slots[k - 1])) {
      throw DomainError("yz_hard pair slots must be strictly increasing and below n - 3t + 2");
    }
  }

  std::vector<Weight> weights;
  weights.reserve(2 * n);
  weights.insert(weights.end(), 2 * (t - 1), 1);
  std::size_t next_pair = 0;
  for (std::uint64_t slot = 0; slot < symbols; ++slot) {
    if (next_pair < pair_slots.size() && pair_slots[next_pair] == slot) {
      weights.push_back(1);
      weights.push_back(1);
      ++next_pair;
    } else {
      weights.push_back(0);
    }
  }
  const std::uint64_t ones = 4 * (i - 1);
  weights.insert(weights.end(), ones, 1);
  weights.insert(weights.end(), n - ones, 0);
  return weights;
}

std::vector<Weight> gen_yz_hard(std::uint64_t n, std::uint64_t t, std::uint64_t i,
                                std::uint64_t seed) {
  if (t < 1 || n + 2 < 4 * t) throw DomainError("yz_hard needs t >= 1 and n >= 4t - 2");
  const std::uint64_t symbols = n + 2 - 3 * t;
  std::vector<std::uint64_t> all(symbols);
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::uint64_t> slots;
  slots.reserve(t);
  std::mt19937_64 rng(seed);
  std::sample(all.begin(), all.end(), std::back_inserter(slots), t, rng);
  return yz_hard_from_slots(n, t, i, slots);
}

std::uint64_t yz_hard_optimum(std::uint64_t t, std::uint64_t i) { return 2 * t - 1 + 2 * (i - 1); }

std::vector<Weight> generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::uniform: return gen_uniform(spec.n, spec.m, spec.seed);
    case GeneratorKind::constant: return gen_constant(spec.n, spec.m);
    case GeneratorKind::spike: return gen_spike(spec.n, spec.m, spec.seed);
    case GeneratorKind::yz_hard: return gen_yz_hard(spec.n, spec.t, spec.index, spec.seed);
    case GeneratorKind::index_hard: return gen_index_hard(spec.bits, spec.index);
  }
  throw DomainError("unknown generator kind");
}

}  // namespace streampart
