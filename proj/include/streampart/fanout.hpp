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
#ifndef STREAMPART_FANOUT_HPP
#define STREAMPART_FANOUT_HPP

#include <cstddef>
#include <span>
#include <string_view>

#include "streampart/types.hpp"

namespace streampart {

/// How a chunk of elements is delivered to a set of independent instances.
enum class Execution {
  serial,  ///< reference: one instance after another on the calling thread
  openmp,  ///< instances distributed over OpenMP threads
};

std::string_view to_string(Execution execution);

/// Serial reference kernel. Every instance receives the whole chunk in order.
template <class Instance>
void fan_out_serial(std::span<Instance> instances, std::span<const Weight> chunk) {
  for (auto& instance : instances) instance.feed(chunk);
}

/// Parallel kernel. Instances share no state, so each one is owned by exactly
/// one thread for the duration of the chunk. Instance::feed(span) must not throw.
template <class Instance>
void fan_out_openmp(std::span<Instance> instances, std::span<const Weight> chunk) {
  const auto count = static_cast<std::ptrdiff_t>(instances.size());
#pragma omp parallel for schedule(dynamic, 4) if (count > 1)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    instances[static_cast<std::size_t>(k)].feed(chunk);
  }
}

template <class Instance>
void fan_out(std::span<Instance> instances, std::span<const Weight> chunk, Execution execution) {
  if (execution == Execution::openmp) {
    fan_out_openmp(instances, chunk);
  } else {
    fan_out_serial(instances, chunk);
  }
}

}  // namespace streampart

#endif  // STREAMPART_FANOUT_HPP
