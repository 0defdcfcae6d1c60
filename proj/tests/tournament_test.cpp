// Copyright 2026 The tourney Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "test_support.hpp"

using namespace tourney;
using tourney::testing::Q;
using tourney::testing::scores;
using tourney::testing::small_graph_family;

namespace {

constexpr auto L = Winner::kLower;
constexpr auto U = Winner::kUpper;

}  // namespace

TEST_CASE("score_sequence examples", "[tournament]") {
  const Graph k3 = Graph::complete(3);  // edges 12, 13, 23
  // 1 beats 2, 3 beats 1, 2 beats 3.
  CHECK(score_sequence(Tournament(k3, {L, U, L})) == scores({"1", "1", "1"}));
  // 1 beats 2 and 3, 2 beats 3.
  CHECK(score_sequence(Tournament(k3, {L, L, L})) == scores({"2", "1", "0"}));
  // Path with 2 winning both.
  CHECK(score_sequence(Tournament(Graph::path(3), {U, L})) == scores({"0", "2", "0"}));
  CHECK_THROWS_AS(Tournament(k3, {L, L}), InvalidInput);
}

TEST_CASE("mean_score_sequence examples", "[tournament]") {
  const Graph k3 = Graph::complete(3);
  CHECK(mean_score_sequence(RandomTournament(k3, {Q("1/2"), Q("1/2"), Q("1/2")})) ==
        scores({"1", "1", "1"}));
  // x1 = p12 = 1/2, x2 = (1 - p12) + p23 = 1, x3 = 1 - p23 = 1/2.
  CHECK(mean_score_sequence(RandomTournament(Graph::path(3), {Q("1/2"), Q("1/2")})) ==
        scores({"1/2", "1", "1/2"}));
  CHECK(mean_score_sequence(RandomTournament(k3, {Q("1"), Q("0"), Q("1")})) ==
        score_sequence(Tournament(k3, {L, U, L})));
}

TEST_CASE("probabilities are validated exactly", "[tournament]") {
  const Graph g(2, {{1, 2}});
  CHECK_NOTHROW(RandomTournament(g, {Q("0")}));
  CHECK_NOTHROW(RandomTournament(g, {Q("1")}));
  CHECK_THROWS_AS(RandomTournament(g, {Q("-1/1000000000000")}), InvalidInput);
  CHECK_THROWS_AS(RandomTournament(g, {Q("1000000000001/1000000000000")}), InvalidInput);
  CHECK_THROWS_AS(RandomTournament(g, {Q("1/2"), Q("1/2")}), InvalidInput);
}

TEST_CASE("as_deterministic", "[tournament]") {
  const Graph k3 = Graph::complete(3);
  const RandomTournament rt(k3, {Q("1"), Q("0"), Q("1")});
  const Tournament t = as_deterministic(rt);
  CHECK(t.winners() == std::vector<Winner>{L, U, L});
  CHECK(score_sequence(t) == mean_score_sequence(rt));
  CHECK(to_random(t) == rt);
  CHECK_THROWS_WITH(as_deterministic(RandomTournament(k3, {Q("1"), Q("1/3"), Q("0")})),
                    Catch::Matchers::ContainsSubstring("(1,3)"));
}

TEST_CASE("mean score map: conservation, embedding, linearity and bounds",
          "[tournament][property]") {
  std::uint64_t seed = 0;
  for (const auto& g : small_graph_family(80, 500, 7, 15)) {
    const auto p = sample_random_tournament(g, ++seed);
    const auto q = sample_random_tournament(g, ++seed, 9);
    const auto xp = mean_score_sequence(p);
    const auto xq = mean_score_sequence(q);

    CHECK(xp.sum() == Rational(g.edge_count()));
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
      CHECK(xp[i] >= 0);
      CHECK(xp[i] <= Rational(g.degree(i + 1)));
    }

    for (const Rational& lambda : {Q("0"), Q("1/3"), Q("5/7"), Q("1")}) {
      std::vector<Rational> mix;
      for (std::size_t k = 0; k < g.edge_count(); ++k) {
        mix.push_back(lambda * p.prob(k) + (1 - lambda) * q.prob(k));
      }
      const auto xm = mean_score_sequence(RandomTournament(g, mix));
      for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        CHECK(xm[i] == lambda * xp[i] + (1 - lambda) * xq[i]);
      }
    }

    std::vector<Winner> winners;
    SplitMix64 rng(seed);
    for (std::size_t k = 0; k < g.edge_count(); ++k) winners.push_back(rng.below(2) ? L : U);
    const Tournament t(g, winners);
    CHECK(mean_score_sequence(to_random(t)) == score_sequence(t));
    CHECK(as_deterministic(to_random(t)) == t);
  }
}
