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

#include "streampart/errors.hpp"
#include "streampart/generators.hpp"
#include "streampart/oracle.hpp"
#include "support/test_support.hpp"

using namespace streampart;
using streampart::testing::InstanceGen;

namespace {
const std::vector<Weight> one_to_five{1, 2, 3, 4, 5};
}

TEST_CASE("oracle examples") {
  CHECK(opt_bottleneck_binsearch(one_to_five, 2).optimum == 9);
  CHECK(opt_bottleneck_dp(one_to_five, 2).optimum == 9);
  CHECK(opt_bottleneck_binsearch(std::vector<Weight>(6, 0), 4).optimum == 0);
  CHECK(opt_bottleneck_dp(std::vector<Weight>{5, 5}, 2).optimum == 5);
  CHECK(opt_bottleneck_dp(std::vector<Weight>{4, 4}, 2).optimum == 4);
  CHECK(opt_bottleneck_dp(std::vector<Weight>{}, 3).optimum == 0);

  const std::vector<std::uint64_t> slots{2, 4};
  const auto yz = yz_hard_from_slots(10, 2, 1, slots);
  CHECK(opt_bottleneck_binsearch(yz, 2).optimum == 3);

  CHECK_THROWS_AS(opt_bottleneck_binsearch(one_to_five, 1), DomainError);
  CHECK_THROWS_AS(opt_bottleneck_dp(std::vector<Weight>(100000, 1), 2), DomainError);
  CHECK(parse_oracle_method("dp") == OracleMethod::dp);
  CHECK_THROWS_AS(parse_oracle_method("greedy"), UsageError);
}

TEST_CASE("realize_partition") {
  CHECK(realize_partition(one_to_five, 2, Rational(9)) == Partitioning{{1, 4, 6}});
  CHECK(realize_partition(one_to_five, 2, Rational(25, 2)) == Partitioning{{1, 5, 6}});
  CHECK_FALSE(realize_partition(one_to_five, 2, Rational(8)).has_value());
}

TEST_CASE("oracles agree with exhaustive enumeration") {
  InstanceGen gen(8);
  for (int round = 0; round < 400; ++round) {
    const auto w = gen.stream(10, 9);
    const std::size_t p = gen.uniform(2, 4);
    const Wide brute = streampart::testing::brute_optimum(w, p);
    const Wide bs = opt_bottleneck_binsearch(w, p).optimum;
    CHECK(bs == brute);
    CHECK(opt_bottleneck_dp(w, p).optimum == brute);
    CHECK(greedy_feasible(w, p, brute));
    if (brute > 0) CHECK_FALSE(greedy_feasible(w, p, brute - 1));

    const auto bounds = bottleneck_bounds(w, p);
    CHECK(bounds.lower <= brute);
    CHECK(brute <= bounds.upper);

    const auto realized = realize_partition(w, p, to_rational(brute));
    REQUIRE(realized.has_value());
    CHECK(bottleneck_of(w, *realized) <= brute);
  }
}

TEST_CASE("the strict form of the upper sandwich bound fails on a single element") {
  // floor((S + (p-1) m) / p) < floor(n m / p + m) does not hold for (1), p = 2:
  // both sides are 1.
  const std::vector<Weight> w{1};
  const auto bounds = bottleneck_bounds(w, 2);
  CHECK(bounds.upper == 1);
  const Rational loose = Rational(1 * 1, 2) + 1;
  CHECK(floor_to_wide(loose) == 1);
  CHECK_FALSE(bounds.upper < floor_to_wide(loose));
}
