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
#include "streampart/rational.hpp"

#include <cctype>
#include <limits>

#include "streampart/errors.hpp"

namespace streampart {

namespace {

const BigInt& wide_max() {
  static const BigInt max = (BigInt(1) << 128) - 1;
  return max;
}

BigInt parse_big(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw ParseError("invalid number '" + std::string(whole) + "'");
  BigInt value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("invalid number '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

BigInt to_big(Wide value) {
  const auto high = static_cast<std::uint64_t>(value >> 64);
  const auto low = static_cast<std::uint64_t>(value);
  return (BigInt(high) << 64) | BigInt(low);
}

Rational to_rational(Wide value) { return Rational(to_big(value)); }

Wide to_wide(const BigInt& value) {
  if (value < 0 || value > wide_max()) throw DomainError("value does not fit in 128 bits");
  const BigInt mask = (BigInt(1) << 64) - 1;
  const auto low = static_cast<std::uint64_t>(value & mask);
  const auto high = static_cast<std::uint64_t>(value >> 64);
  return (static_cast<Wide>(high) << 64) | low;
}

Wide floor_to_wide(const Rational& value) {
  if (value < 0) throw DomainError("negative bound");
  const BigInt q = boost::multiprecision::numerator(value) / boost::multiprecision::denominator(value);
  if (q > wide_max()) return std::numeric_limits<Wide>::max();
  return to_wide(q);
}

Wide ceil_to_wide(const Rational& value) {
  if (value < 0) throw DomainError("negative bound");
  const BigInt& num = boost::multiprecision::numerator(value);
  const BigInt& den = boost::multiprecision::denominator(value);
  return to_wide((num + den - 1) / den);
}

Rational power(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational factor = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= factor;
    exponent >>= 1U;
    if (exponent != 0) factor *= factor;
  }
  return result;
}

unsigned min_exponent_reaching(const Rational& ratio, const Rational& target) {
  if (ratio <= 1) throw DomainError("ratio must exceed 1");
  unsigned exponent = 0;
  Rational reached = 1;
  while (reached < target) {
    reached *= ratio;
    ++exponent;
  }
  return exponent;
}

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty number");

  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational value;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt num = parse_big(text.substr(0, slash), whole);
    const BigInt den = parse_big(text.substr(slash + 1), whole);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(whole) + "'");
    value = Rational(num, den);
  } else {
    std::string_view mantissa = text;
    long long exponent = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      mantissa = text.substr(0, e);
      std::string_view exp_text = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (exp_text.size() > 6) throw ParseError("exponent too large in '" + std::string(whole) + "'");
      exponent = static_cast<long long>(parse_big(exp_text, whole));
      if (exp_negative) exponent = -exponent;
    }
    std::string digits;
    if (const auto dot = mantissa.find('.'); dot != std::string_view::npos) {
      const auto int_part = mantissa.substr(0, dot);
      const auto frac_part = mantissa.substr(dot + 1);
      if (int_part.empty() && frac_part.empty()) throw ParseError("invalid number '" + std::string(whole) + "'");
      digits = std::string(int_part) + std::string(frac_part);
      exponent -= static_cast<long long>(frac_part.size());
    } else {
      digits = std::string(mantissa);
    }
    const BigInt mant = parse_big(digits, whole);
    value = Rational(mant);
    if (exponent > 0) {
      value *= power(Rational(10), static_cast<unsigned>(exponent));
    } else if (exponent < 0) {
      value /= power(Rational(10), static_cast<unsigned>(-exponent));
    }
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  const BigInt& den = boost::multiprecision::denominator(value);
  if (den == 1) return boost::multiprecision::numerator(value).str();
  return boost::multiprecision::numerator(value).str() + "/" + den.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace streampart
