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
#include <variant>
#include <vector>

#include "test_support.hpp"

using namespace tourney;
using tourney::testing::in_zonotope_by_definition;
using tourney::testing::Q;
using tourney::testing::scores;
using tourney::testing::small_graph_family;

TEST_CASE("check_subset examples", "[feasibility][subset]") {
  const Graph k3 = Graph::complete(3);
  CHECK(is_feasible(check_subset(k3, scores({"1", "1", "1"}))));

  const auto v = check_subset(k3, scores({"0", "0", "3"}));
  REQUIRE(std::holds_alternative<SubsetViolation>(v));
  CHECK(std::get<SubsetViolation>(v) == SubsetViolation{VertexSubset{1, 2}, Q("0"), 1});

  CHECK(is_feasible(check_subset(Graph::path(3), scores({"1/2", "1", "1/2"}))));

  const auto s = check_subset(k3, scores({"1", "1", "3/2"}));
  REQUIRE(std::holds_alternative<SumMismatch>(s));
  CHECK(std::get<SumMismatch>(s) == SumMismatch{Q("7/2"), 3});
}

TEST_CASE("check_subset reports the first violation in size-then-lex order",
          "[feasibility][subset]") {
  // K4 with x = (3, 3, 0, 0): {3,4} is the first violated subset.
  const auto v = check_subset(Graph::complete(4), scores({"3", "3", "0", "0"}));
  REQUIRE(std::holds_alternative<SubsetViolation>(v));
  CHECK(std::get<SubsetViolation>(v).subset == VertexSubset{3, 4});

  // Negative entries are caught by the singleton.
  const auto neg = check_subset(Graph::path(3), scores({"-1/2", "2", "1/2"}));
  REQUIRE(std::holds_alternative<SubsetViolation>(neg));
  CHECK(std::get<SubsetViolation>(neg) == SubsetViolation{VertexSubset{1}, Q("-1/2"), 0});
}

TEST_CASE("check_subset limits and dimensions", "[feasibility][subset]") {
  const Graph big = Graph::path(21);
  std::vector<Rational> x(21, 0);
  CHECK_THROWS_AS(check_subset(big, ScoreVector(x)), LimitExceeded);
  CHECK_THROWS_AS(check_subset(Graph::complete(3), scores({"1", "2"})), InvalidInput);
  CHECK_THROWS_AS(check_flow(Graph::complete(3), scores({"1", "2"})), InvalidInput);
}

TEST_CASE("check_flow examples", "[feasibility][flow]") {
  const Graph k3 = Graph::complete(3);
  CHECK(is_feasible(check_flow(k3, scores({"1", "1", "1"}))));

  const auto x = scores({"0", "0", "3"});
  const auto v = check_flow(k3, x);
  REQUIRE(std::holds_alternative<SubsetViolation>(v));
  CHECK(verify_witness(k3, x, v));

  CHECK(is_feasible(check_flow(Graph::star(4), scores({"3", "0", "0", "0"}))));
  CHECK(std::holds_alternative<SumMismatch>(check_flow(k3, scores({"1", "1", "3/2"}))));

  const auto neg = check_flow(Graph::path(3), scores({"1", "-1/2", "3/2"}));
  REQUIRE(std::holds_alternative<SubsetViolation>(neg));
  CHECK(std::get<SubsetViolation>(neg) == SubsetViolation{VertexSubset{2}, Q("-1/2"), 0});
}

TEST_CASE("check_flow handles graphs beyond the exhaustive limit", "[feasibility][flow]") {
  // Path on 40 vertices: the all-ones-but-ends vector is feasible, and moving
  // mass onto an endpoint beyond its degree is not.
  const Graph p = Graph::path(40);
  std::vector<Rational> x(40, 1);
  x[0] = 0;
  CHECK(is_feasible(check_flow(p, ScoreVector(x))));
  x[0] = 2;
  x[1] = 0;
  x[2] = 0;
  const auto v = check_flow(p, ScoreVector(x));
  REQUIRE(std::holds_alternative<SubsetViolation>(v));
  CHECK(verify_witness(p, ScoreVector(x), v));
}

TEST_CASE("check_complete_majorization examples", "[feasibility][majorization]") {
  CHECK(check_complete_majorization(scores({"0", "1", "2"})));
  CHECK(check_complete_majorization(scores({"1", "1", "1"})));
  CHECK_FALSE(check_complete_majorization(scores({"0", "1/2", "5/2"})));
  CHECK_FALSE(check_complete_majorization(scores({"1", "1", "3/2"})));
}

TEST_CASE("subset, flow and the definition agree with valid witnesses",
          "[feasibility][property]") {
  std::uint64_t seed = 77;
  std::size_t infeasible = 0;
  for (const auto& g : small_graph_family(150, 4000, 12, 30)) {
    const std::size_t n = g.vertex_count();
    SplitMix64 rng(++seed);
    std::vector<ScoreVector> inputs{sample_zonotope_point(g, seed)};
    // Random vectors on the right total, with small denominators.
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<Rational> x(n, 0);
      const std::uint64_t den = 1 + rng.below(4);
      Rational total = 0;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        x[i] = Rational(BigInt(rng.below(3 * den * (g.degree(i + 1) + 1))), BigInt(den)) -
               Rational(BigInt(rng.below(2)), BigInt(den));
        total += x[i];
      }
      x[n - 1] = Rational(g.edge_count()) - total;
      inputs.emplace_back(std::move(x));
    }
    for (const auto& x : inputs) {
      const auto by_subset = check_subset(g, x);
      const auto by_flow = check_flow(g, x);
      CHECK(same_kind(by_subset, by_flow));
      CHECK(verify_witness(g, x, by_subset));
      CHECK(verify_witness(g, x, by_flow));
      if (n <= 8) CHECK(is_feasible(by_subset) == in_zonotope_by_definition(g, x));
      if (is_feasible(by_subset)) {
        for (std::size_t i = 0; i < n; ++i) {
          CHECK(x[i] >= 0);
          CHECK(x[i] <= Rational(g.degree(i + 1)));
        }
      } else {
        ++infeasible;
      }
    }
  }
  CHECK(infeasible > 100);
}

TEST_CASE("majorization agrees with the subset check on complete graphs",
          "[feasibility][majorization][property]") {
  std::uint64_t seed = 9;
  for (std::size_t n = 1; n <= 8; ++n) {
    const Graph kn = Graph::complete(n);
    for (int trial = 0; trial < 60; ++trial) {
      ScoreVector x = sample_zonotope_point(kn, ++seed, 1 + trial % 5);
      if (trial % 2 && n >= 2) {
        std::vector<Rational> moved = x.entries();
        SplitMix64 rng(seed);
        const auto i = rng.below(n);
        const auto j = (i + 1 + rng.below(n - 1)) % n;
        moved[i] += Rational(BigInt(1 + rng.below(5)), BigInt(3));
        moved[j] -= Rational(BigInt(1 + rng.below(5)), BigInt(3));
        x = ScoreVector(std::move(moved));
      }
      CHECK(check_complete_majorization(x) == is_feasible(check_subset(kn, x)));
    }
  }
}

TEST_CASE("huge denominators take the arbitrary-precision path", "[feasibility]") {
  const Graph k3 = Graph::complete(3);
  const Rational tiny = Q("1/1000000000000000000000000000007");
  const ScoreVector ok{Rational(1) - tiny, Rational(1), Rational(1) + tiny};
  CHECK(is_feasible(check_subset(k3, ok)));
  CHECK(is_feasible(check_flow(k3, ok)));
  const ScoreVector bad{Rational(0), Rational(1) - tiny, Rational(2) + tiny};
  const auto v1 = check_subset(k3, bad);
  const auto v2 = check_flow(k3, bad);
  CHECK(std::holds_alternative<SubsetViolation>(v1));
  CHECK(verify_witness(k3, bad, v1));
  CHECK(verify_witness(k3, bad, v2));
  CHECK(same_kind(v1, v2));
}

TEST_CASE("verify_witness rejects forged witnesses", "[feasibility]") {
  const Graph k3 = Graph::complete(3);
  const auto x = scores({"1", "1", "1"});
  CHECK_FALSE(verify_witness(k3, x, SubsetViolation{VertexSubset{1, 2}, Q("2"), 1}));
  CHECK_FALSE(verify_witness(k3, x, SubsetViolation{VertexSubset{1, 2}, Q("0"), 1}));
  CHECK_FALSE(verify_witness(k3, x, SumMismatch{Q("3"), 3}));
  CHECK_FALSE(verify_witness(k3, x, SubsetViolation{VertexSubset{5}, Q("0"), 0}));
}

TEST_CASE("the min-cut subset is a witness without any fallback", "[feasibility][flow][property]") {
  std::uint64_t seed = 555;
  std::size_t cuts = 0;
  for (const auto& g : small_graph_family(300, 12000, 14, 40)) {
    const std::size_t n = g.vertex_count();
    SplitMix64 rng(++seed);
    for (int trial = 0; trial < 5; ++trial) {
      // Nonnegative entries summing to m, so only the cut can reject.
      std::vector<BigInt> weights(n);
      BigInt total = 0;
      for (auto& w : weights) {
        w = rng.below(5) == 0 ? 0 : 1 + rng.below(20);
        total += w;
      }
      if (total == 0 || g.edge_count() == 0) continue;
      std::vector<Rational> x;
      for (const auto& w : weights) x.emplace_back(w * g.edge_count(), total);
      const ScoreVector v(std::move(x));
      const auto transport = detail::route(g, v);
      if (transport.saturated) {
        CHECK(is_feasible(check_flow(g, v)));
        continue;
      }
      ++cuts;
      const FeasibilityVerdict raw = detail::make_violation(g, v, transport.source_side);
      CHECK(verify_witness(g, v, raw));
      CHECK(check_flow(g, v) == raw);
    }
  }
  CHECK(cuts > 200);
}
