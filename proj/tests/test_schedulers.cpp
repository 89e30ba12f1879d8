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

#include <array>
#include <cmath>

#include "streampart/errors.hpp"
#include "streampart/oracle.hpp"
#include "streampart/probe.hpp"
#include "streampart/probe_ext.hpp"
#include "streampart/schedulers.hpp"
#include "support/test_support.hpp"

using namespace streampart;
using streampart::testing::InstanceGen;

namespace {

const std::vector<Weight> one_to_five{1, 2, 3, 4, 5};

template <class Solve>
SolveResult on(const std::vector<Weight>& w, Solve&& solve) {
  SpanStream stream(w);
  return solve(stream);
}

// Independent grid search: the least listed threshold whose floor reaches B*.
Rational first_reaching(const std::vector<Rational>& grid, Wide optimum) {
  for (const auto& t : grid) {
    if (floor_to_wide(t) >= optimum) return t;
  }
  FAIL("grid never reaches the optimum");
  return 0;
}

}  // namespace

TEST_CASE("known-S") {
  const auto r = on(one_to_five, [](auto& s) { return solve_known_s(s, 2, Rational(1, 2), 15); });
  CHECK(r.algorithm == "known-S");
  CHECK(r.bottleneck == Rational(45, 4));
  CHECK(r.bottleneck_ceil == 12);
  CHECK(r.instance_count == 3);  // 15/2, 45/4, 135/8
  REQUIRE(r.separators.has_value());
  CHECK(bottleneck_of(one_to_five, *r.separators) <= 11);

  const std::vector<Weight> twos{2, 2};
  CHECK(on(twos, [](auto& s) { return solve_known_s(s, 2, Rational(1, 3), 4); }).bottleneck == 2);
  const std::vector<Weight> zeros{0, 0, 0};
  CHECK(on(zeros, [](auto& s) { return solve_known_s(s, 2, Rational(1, 2), 0); }).bottleneck == 0);

  CHECK_THROWS_AS(on(one_to_five, [](auto& s) { return solve_known_s(s, 2, Rational(1, 2), 14); }),
                  KnowledgeMismatch);
  CHECK_THROWS_AS(on(one_to_five, [](auto& s) { return solve_known_s(s, 1, Rational(1, 2), 15); }),
                  DomainError);
  CHECK_THROWS_AS(on(one_to_five, [](auto& s) { return solve_known_s(s, 2, Rational(0), 15); }),
                  DomainError);
}

TEST_CASE("known-mn") {
  const auto r = on(one_to_five,
                    [](auto& s) { return solve_known_mn(s, 2, Rational(1, 2), 5, 5); });
  CHECK(r.algorithm == "known-mn");
  CHECK(r.bottleneck == Rational(45, 4));

  const std::vector<Weight> seven{7};
  CHECK(on(seven, [](auto& s) { return solve_known_mn(s, 2, Rational(1, 5), 7, 1); }).bottleneck ==
        7);

  const std::vector<Weight> ones(4, 1);
  const auto q = on(ones, [](auto& s) { return solve_known_mn(s, 2, Rational(1), 1, 4); });
  CHECK(q.bottleneck == 2);
  CHECK(q.instance_count == 3);  // 1, 2, 4

  CHECK_THROWS_AS(on(ones, [](auto& s) { return solve_known_mn(s, 2, Rational(1), 1, 5); }),
                  KnowledgeMismatch);
  CHECK_THROWS_AS(on(one_to_five, [](auto& s) { return solve_known_mn(s, 2, Rational(1), 4, 5); }),
                  DeclaredBoundViolation);
  CHECK_THROWS_AS(on(one_to_five, [](auto& s) { return solve_known_mn(s, 2, Rational(1), 6, 5); }),
                  KnowledgeMismatch);
}

TEST_CASE("known-m") {
  const std::vector<Weight> seven{7};
  const auto single = on(seven, [](auto& s) { return solve_known_m(s, 2, Rational(1, 100), 7); });
  CHECK(single.bottleneck == 7);
  CHECK_FALSE(single.merges.has_value());

  const std::vector<Weight> five_ones(5, 1);
  const auto r = on(five_ones, [](auto& s) { return solve_known_m(s, 2, Rational(1, 64), 1); });
  REQUIRE(r.grid.has_value());
  CHECK(r.grid->probe_instances == 644);
  CHECK(r.grid->probe_ext_instances == 91);
  CHECK(r.instance_count == 735);
  CHECK(r.grid->probe_best == 2 * power(Rational(65, 64), 27));
  // The ProbeExt copy with the least alpha >= 1/2 doubles once to a threshold
  // of 3 and undercuts the Probe grid: 2 (129/128)^53 < 2 (65/64)^27.
  CHECK(r.grid->probe_ext_best == 2 * power(Rational(129, 128), 53));
  CHECK(r.bottleneck == 2 * power(Rational(129, 128), 53));
  CHECK(r.merges == 1u);
  CHECK(r.bottleneck <= Rational(65, 64) * 3);
  CHECK(r.warning_flags == std::vector<std::string>{"epsilon-outside-guarantee"});
  // 644 Probe copies at 4 + (p-1) words, 91 ProbeExt copies at 7 + p, 3 driver words.
  CHECK(r.space_peak_words == 644 * 5 + 91 * 9 + 3);

  const auto fine = on(five_ones, [](auto& s) { return solve_known_m(s, 2, Rational(1, 128), 1); });
  CHECK(fine.grid->probe_instances == 16 * 91);
  CHECK(fine.grid->probe_ext_instances == 179);
  CHECK(fine.warning_flags.empty());
  CHECK(fine.bottleneck >= 3);
  CHECK(fine.bottleneck <= Rational(129, 128) * 3);

  const auto partb = on(five_ones, [](auto& s) {
    return solve_known_m(s, 2, Rational(1, 64), 1, OutputMode::partb);
  });
  CHECK(partb.bottleneck == r.bottleneck);
  CHECK_FALSE(partb.separators.has_value());
  CHECK(partb.space_peak_words == 644 * 4 + 91 * 7 + 3);

  CHECK_THROWS_AS(on(five_ones, [](auto& s) { return solve_known_m(s, 2, Rational(1, 64), 2); }),
                  KnowledgeMismatch);
}

TEST_CASE("known-m ties prefer Probe") {
  // With m = 4 and stream (4, 4), the i = j = 0 Probe copy at 4 and the alpha = 0
  // ProbeExt copy both report 4.
  const std::vector<Weight> w{4, 4};
  const auto r = on(w, [](auto& s) { return solve_known_m(s, 2, Rational(1, 100), 4); });
  CHECK(r.bottleneck == 4);
  CHECK(r.grid->probe_best == 4);
  CHECK(r.grid->probe_ext_best == 4);
  CHECK_FALSE(r.merges.has_value());
}

TEST_CASE("grid searches agree with an independent grid walk") {
  InstanceGen gen(5150);
  const std::array<Rational, 3> epsilons{Rational(1, 2), Rational(1, 10), Rational(1, 100)};
  for (int round = 0; round < 120; ++round) {
    const auto w = gen.stream(10, 7);
    const std::size_t p = gen.uniform(2, 4);
    const Rational eps = gen.pick<Rational>(epsilons);
    const Wide optimum = streampart::testing::brute_optimum(w, p);
    const Wide total = streampart::testing::total_of(w);
    const Weight m = streampart::testing::max_of(w);

    std::vector<Rational> s_grid;
    const auto s_steps = static_cast<unsigned>(std::ceil(std::log(double(p)) / std::log1p(to_double(eps))));
    for (unsigned i = 0; i <= s_steps; ++i) s_grid.push_back(to_rational(total) / p * power(1 + eps, i));
    const auto ks = on(w, [&](auto& s) { return solve_known_s(s, p, eps, total); });
    CHECK(ks.bottleneck == first_reaching(s_grid, optimum));
    CHECK(ks.instance_count == s_grid.size());

    std::vector<Rational> mn_grid;
    const double n = std::max<double>(1.0, double(w.size()));
    const auto mn_steps = static_cast<unsigned>(std::ceil(std::log(n) / std::log1p(to_double(eps))));
    for (unsigned i = 0; i <= mn_steps; ++i) mn_grid.push_back(Rational(m) * power(1 + eps, i));
    const auto kmn = on(w, [&](auto& s) { return solve_known_mn(s, p, eps, m, w.size()); });
    CHECK(kmn.bottleneck == first_reaching(mn_grid, optimum));
    CHECK(kmn.instance_count == mn_grid.size());
  }
}

TEST_CASE("unknown part") {
  const auto r = on(one_to_five, [](auto& s) { return solve_unknown_part(s, 2); });
  CHECK(r.algorithm == "unknown-2approx");
  CHECK(r.bottleneck == 15);
  CHECK(r.separators == Partitioning{{1, 6, 6}});

  const std::vector<Weight> fours{4, 4};
  const auto tight = on(fours, [](auto& s) { return solve_unknown_part(s, 2); });
  CHECK(tight.bottleneck == 8);
  CHECK(tight.bottleneck / opt_bottleneck_binsearch(fours, 2).optimum == 2);

  const std::vector<Weight> zeros{0, 0};
  CHECK(on(zeros, [](auto& s) { return solve_unknown_part(s, 2); }).bottleneck == 0);

  // Summaries: 3 driver words, 2p block words, 2(p+1) scratch words.
  CHECK(r.space_peak_words == 3 + 4 + 6);
}

TEST_CASE("unknown part prefix invariant") {
  InstanceGen gen(77);
  for (int round = 0; round < 200; ++round) {
    const auto w = gen.stream(40, 9);
    const std::size_t p = gen.uniform(2, 6);
    std::uint64_t calls = 0;
    auto observer = [&](const PrefixState& state) {
      ++calls;
      CHECK(state.elements == calls);
      REQUIRE(!state.blocks.empty());
      REQUIRE(state.blocks.size() <= p);
      CHECK(state.blocks[0].start == 1);
      Wide sum = 0;
      for (std::size_t k = 0; k < state.blocks.size(); ++k) {
        if (k > 0) CHECK(state.blocks[k].start >= state.blocks[k - 1].start);
        CHECK(state.blocks[k].start <= state.elements + 1);
        // Each summary matches the prefix slice it describes.
        const Index end = k + 1 < state.blocks.size() ? state.blocks[k + 1].start : state.elements + 1;
        Wide slice = 0;
        for (Index i = state.blocks[k].start; i < end; ++i) slice += w[i - 1];
        CHECK(slice == state.blocks[k].weight);
        CHECK(to_rational(state.blocks[k].weight) <= state.bound);
        sum += state.blocks[k].weight;
      }
      CHECK(sum == state.total);
    };
    SpanStream stream(w);
    const auto r = solve_unknown_part(stream, p, observer);
    CHECK(calls == w.size());
    REQUIRE(r.separators.has_value());
    CHECK_FALSE(validate_partitioning(w.size(), p, r.separators->separators));
    CHECK(to_rational(bottleneck_of(w, *r.separators)) <= r.bottleneck);
  }
}

TEST_CASE("unknown partb") {
  const auto r = on(one_to_five, [](auto& s) { return solve_unknown_partb(s, 2); });
  CHECK(r.bottleneck == Rational(25, 2));
  CHECK(r.space_peak_words == 3);
  CHECK(r.instance_count == 0);
  const std::vector<Weight> fours{4, 4};
  CHECK(on(fours, [](auto& s) { return solve_unknown_partb(s, 2); }).bottleneck == 8);
  const std::vector<Weight> zeros{0, 0, 0};
  CHECK(on(zeros, [](auto& s) { return solve_unknown_partb(s, 2); }).bottleneck == 0);
}

TEST_CASE("dispatch") {
  const Rational eps(1, 10);
  auto tag = [&](const KnowledgeProfile& profile, std::optional<Rational> e) {
    SpanStream stream(one_to_five);
    return dispatch(stream, 2, e, profile, OutputMode::part).algorithm;
  };
  CHECK(tag({std::nullopt, std::nullopt, Wide{15}}, eps) == "known-S");
  CHECK(tag({Weight{5}, std::nullopt, std::nullopt}, eps) == "known-m");
  CHECK(tag({Weight{5}, std::uint64_t{5}, std::nullopt}, eps) == "known-m");
  CHECK(tag({}, std::nullopt) == "unknown-2approx");
  CHECK_THROWS_AS(tag({Weight{5}, std::nullopt, std::nullopt}, std::nullopt), UsageError);
  CHECK_THROWS_AS(tag({Weight{5}, std::uint64_t{4}, std::nullopt}, eps), KnowledgeMismatch);
  CHECK_THROWS_AS(tag({Weight{5}, std::nullopt, Wide{16}}, eps), KnowledgeMismatch);
}

TEST_CASE("serial and OpenMP kernels agree") {
  InstanceGen gen(31337);
  for (int round = 0; round < 20; ++round) {
    const auto w = gen.stream(3000, 50);
    const std::size_t p = gen.uniform(2, 9);
    const Weight m = streampart::testing::max_of(w);
    const Wide total = streampart::testing::total_of(w);
    for (std::size_t chunk : {std::size_t{1}, std::size_t{7}, std::size_t{4096}}) {
      const PassOptions serial{Execution::serial, chunk};
      const PassOptions parallel{Execution::openmp, chunk};
      auto a = on(w, [&](auto& s) { return solve_known_m(s, p, Rational(1, 100), m, OutputMode::part, serial); });
      auto b = on(w, [&](auto& s) { return solve_known_m(s, p, Rational(1, 100), m, OutputMode::part, parallel); });
      CHECK(to_json(a) == to_json(b));
      auto c = on(w, [&](auto& s) { return solve_known_s(s, p, Rational(1, 10), total, OutputMode::part, serial); });
      auto d = on(w, [&](auto& s) { return solve_known_s(s, p, Rational(1, 10), total, OutputMode::part, parallel); });
      CHECK(to_json(c) == to_json(d));
    }
  }
}

TEST_CASE("json surface") {
  const auto r = on(one_to_five, [](auto& s) { return solve_unknown_partb(s, 2); });
  CHECK(to_json(r) ==
        "{\"mode\": \"partb\", \"algorithm\": \"unknown-2approx\", \"bottleneck_num\": 25, "
        "\"bottleneck_den\": 2, \"bottleneck_ceil\": 13, \"separators\": null, \"merges\": null, "
        "\"instance_count\": 0, \"space_peak_words\": 3, \"elements_read\": 5, \"epsilon\": null, "
        "\"warning_flags\": []}");
  const auto k = on(one_to_five, [](auto& s) { return solve_known_s(s, 2, Rational(1, 2), 15); });
  const auto json = to_json(k);
  CHECK(json.find("\"separators\": [1, 5, 6]") != std::string::npos);
  CHECK(json.find("\"epsilon\": 0.5") != std::string::npos);
}
