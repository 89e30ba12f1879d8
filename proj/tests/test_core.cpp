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
#include <doctest.h>

#include <sstream>

#include "streampart/errors.hpp"
#include "streampart/partitioning.hpp"
#include "streampart/rational.hpp"
#include "streampart/space_meter.hpp"
#include "streampart/stream.hpp"
#include "support/test_support.hpp"

using namespace streampart;
using streampart::testing::InstanceGen;

namespace {
const std::vector<Weight> one_to_five{1, 2, 3, 4, 5};
}

TEST_CASE("bottleneck_of sums blocks") {
  CHECK(bottleneck_of(one_to_five, Partitioning{{1, 4, 6}}) == 9);
  CHECK(bottleneck_of(std::vector<Weight>{0, 0, 0}, Partitioning{{1, 2, 4}}) == 0);
  CHECK(bottleneck_of(one_to_five, Partitioning{{1, 6, 6}}) == 15);
  CHECK_THROWS_AS(bottleneck_of(one_to_five, Partitioning{{1, 7, 6}}), ValidationError);
}

TEST_CASE("validate_partitioning") {
  const std::vector<Index> ok{1, 4, 6};
  const std::vector<Index> unordered{1, 7, 6};
  const std::vector<Index> bad_start{2, 4, 6};
  const std::vector<Index> bad_end{1, 4, 5};
  const std::vector<Index> short_list{1, 6};
  CHECK_FALSE(validate_partitioning(5, 2, ok).has_value());
  CHECK(validate_partitioning(5, 2, unordered).has_value());
  CHECK(validate_partitioning(5, 2, bad_start).has_value());
  CHECK(validate_partitioning(5, 2, bad_end).has_value());
  CHECK(validate_partitioning(5, 2, short_list).has_value());
  CHECK(validate_partitioning(5, 1, std::vector<Index>{1, 6}).has_value());
  CHECK(single_block_partitioning(5, 3) == Partitioning{{1, 6, 6, 6}});
}

TEST_CASE("partitioning properties on random instances") {
  InstanceGen gen(11);
  for (int round = 0; round < 300; ++round) {
    const auto w = gen.stream(30, 9);
    const std::size_t p = gen.uniform(2, 5);
    std::vector<Index> seps{1};
    for (std::size_t j = 1; j < p; ++j) seps.push_back(gen.uniform(seps.back(), w.size() + 1));
    seps.push_back(w.size() + 1);
    const Partitioning part{seps};
    REQUIRE_FALSE(validate_partitioning(w.size(), p, seps).has_value());

    Wide sum = 0;
    for (Wide b : block_weights(w, part)) sum += b;
    CHECK(sum == streampart::testing::total_of(w));
    CHECK(bottleneck_of(w, part) == streampart::testing::brute_bottleneck_of(w, seps));

    // Duplicating a separator inserts an empty block and keeps the bottleneck.
    auto doubled = seps;
    const std::size_t at = gen.uniform(0, doubled.size() - 1);
    doubled.insert(doubled.begin() + static_cast<std::ptrdiff_t>(at), doubled[at]);
    CHECK(bottleneck_of(w, Partitioning{doubled}) == bottleneck_of(w, part));
  }
}

TEST_CASE("space meter") {
  SpaceMeter meter;
  meter.charge(4);
  meter.charge(2);
  CHECK(meter.live_words() == 6);
  CHECK(meter.peak_words() == 6);

  SpaceMeter second;
  second.charge(4);
  second.release(4);
  second.charge(3);
  CHECK(second.live_words() == 3);
  CHECK(second.peak_words() == 4);
  CHECK_THROWS_AS(second.release(5), ContractViolation);

  SpaceMeter scoped;
  {
    MeterCharge a(&scoped, 5);
    MeterCharge b(std::move(a));
    CHECK(scoped.live_words() == 5);
    MeterCharge none(nullptr, 100);
    CHECK(none.words() == 100);
  }
  CHECK(scoped.live_words() == 0);
  CHECK(scoped.peak_words() == 5);
}

TEST_CASE("rationals") {
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("1/64") == Rational(1, 64));
  CHECK(parse_rational("0.015625") == Rational(1, 64));
  CHECK(parse_rational("1e-2") == Rational(1, 100));
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK(to_string(Rational(45, 4)) == "45/4");
  CHECK(to_string(Rational(3)) == "3");
  CHECK(floor_to_wide(Rational(45, 4)) == 11);
  CHECK(ceil_to_wide(Rational(45, 4)) == 12);
  CHECK(power(Rational(3, 2), 3) == Rational(27, 8));
  CHECK(min_exponent_reaching(Rational(65, 64), Rational(3, 2)) == 27);
  CHECK(min_exponent_reaching(Rational(2), Rational(1)) == 0);
  CHECK(min_exponent_reaching(Rational(2), Rational(4)) == 2);
  CHECK(to_string(parse_wide("340282366920938463463374607431768211455")) ==
        "340282366920938463463374607431768211455");
  CHECK_THROWS_AS(parse_wide("340282366920938463463374607431768211456"), ParseError);
}

TEST_CASE("text stream") {
  std::istringstream in(" 1 2\n3\t18446744073709551615 ");
  TextStream stream(in);
  CHECK(read_all(stream) == std::vector<Weight>{1, 2, 3, 18446744073709551615ULL});
  CHECK(parse_weights("") == std::vector<Weight>{});
  CHECK_THROWS_AS(parse_weights("1 -2"), ParseError);
  CHECK_THROWS_AS(parse_weights("1 2x"), ParseError);
  CHECK_THROWS_AS(parse_weights("18446744073709551616"), ParseError);
  std::ostringstream out;
  write_weights(out, one_to_five);
  CHECK(out.str() == "1 2 3 4 5\n");
}

TEST_CASE("counting stream") {
  SpanStream inner(one_to_five);
  CountingStream counting(inner);
  while (counting.next()) {
  }
  CHECK(counting.elements_read() == 5);
  CHECK(counting.exhausted());
  CHECK(counting.pulls_past_end() == 0);
  CHECK_FALSE(counting.next().has_value());
  CHECK(counting.pulls_past_end() == 1);
}
