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
#ifndef STREAMPART_RATIONAL_HPP
#define STREAMPART_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "streampart/types.hpp"

namespace streampart {

/// Arbitrary-precision integer. Grid thresholds such as 2^i (1+eps)^j m
/// have numerators far beyond 128 bits.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, always kept in lowest terms with a positive denominator.
/// Comparisons are exact; no floating point is involved.
using Rational = boost::multiprecision::cpp_rational;

BigInt to_big(Wide value);
Rational to_rational(Wide value);

/// Converts a non-negative BigInt to Wide. Throws DomainError if it does not fit.
Wide to_wide(const BigInt& value);

/// floor(value) for value >= 0, saturated at the largest Wide. Saturation is
/// harmless for thresholds: no stream weight can reach it.
Wide floor_to_wide(const Rational& value);

/// ceil(value) for value >= 0. Throws DomainError on overflow.
Wide ceil_to_wide(const Rational& value);

Rational power(const Rational& base, unsigned exponent);

/// Smallest c >= 0 with ratio^c >= target. Requires ratio > 1.
unsigned min_exponent_reaching(const Rational& ratio, const Rational& target);

/// Accepts "7", "1/64" and exact decimals such as "0.015625" or "1e-2".
Rational parse_rational(std::string_view text);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

}  // namespace streampart

#endif  // STREAMPART_RATIONAL_HPP
