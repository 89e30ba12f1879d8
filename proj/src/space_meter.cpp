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
#include "streampart/space_meter.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "streampart/errors.hpp"

namespace streampart {

void SpaceMeter::charge(std::size_t words) {
  live_ += words;
  peak_ = std::max(peak_, live_);
}

void SpaceMeter::release(std::size_t words) {
  if (words > live_) {
    throw ContractViolation("releasing " + std::to_string(words) + " words with only " +
                            std::to_string(live_) + " live");
  }
  live_ -= words;
}

MeterCharge::MeterCharge(SpaceMeter* meter, std::size_t words) : meter_(meter), words_(words) {
  if (meter_ != nullptr) meter_->charge(words_);
}

MeterCharge::MeterCharge(MeterCharge&& other) noexcept
    : meter_(std::exchange(other.meter_, nullptr)), words_(std::exchange(other.words_, 0)) {}

MeterCharge& MeterCharge::operator=(MeterCharge&& other) noexcept {
  if (this != &other) {
    reset();
    meter_ = std::exchange(other.meter_, nullptr);
    words_ = std::exchange(other.words_, 0);
  }
  return *this;
}

MeterCharge::~MeterCharge() { reset(); }

void MeterCharge::reset() noexcept {
  if (meter_ != nullptr) {
    // Cannot underflow: the charge was added on construction.
    meter_->release(words_);
    meter_ = nullptr;
  }
  words_ = 0;
}

}  // namespace streampart
