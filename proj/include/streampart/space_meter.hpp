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
#ifndef STREAMPART_SPACE_METER_HPP
#define STREAMPART_SPACE_METER_HPP

#include <cstddef>

namespace streampart {

/**
 * Word-RAM space accounting for streaming algorithms.
 *
 * This is a model, not a measurement of process memory. Every live integer
 * variable of an algorithm instance (index, weight accumulator, threshold,
 * counter) costs one word and every stored separator costs one word; a word is
 * assumed wide enough for any value up to max(n+1, S). Buffers used to move
 * elements from the input to the instances are not algorithm state and are not
 * charged.
 *
 * Not thread-safe. Charges happen while instances are set up or torn down,
 * never inside a parallel fan-out.
 */
class SpaceMeter {
 public:
  void charge(std::size_t words);

  /// Throws ContractViolation when releasing more than is live.
  void release(std::size_t words);

  std::size_t live_words() const { return live_; }
  std::size_t peak_words() const { return peak_; }

 private:
  std::size_t live_ = 0;
  std::size_t peak_ = 0;
};

/// Holds a charge on a meter for its lifetime. A null meter makes it a no-op.
class MeterCharge {
 public:
  MeterCharge() = default;
  MeterCharge(SpaceMeter* meter, std::size_t words);
  MeterCharge(const MeterCharge&) = delete;
  MeterCharge& operator=(const MeterCharge&) = delete;
  MeterCharge(MeterCharge&& other) noexcept;
  MeterCharge& operator=(MeterCharge&& other) noexcept;
  ~MeterCharge();

  std::size_t words() const { return words_; }

 private:
  void reset() noexcept;

  SpaceMeter* meter_ = nullptr;
  std::size_t words_ = 0;
};

}  // namespace streampart

#endif  // STREAMPART_SPACE_METER_HPP
