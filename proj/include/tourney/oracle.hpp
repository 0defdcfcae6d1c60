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

// Brute-force ground truth for small graphs.

#ifndef TOURNEY_ORACLE_HPP_
#define TOURNEY_ORACLE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "tourney/errors.hpp"
#include "tourney/feasibility.hpp"
#include "tourney/graph.hpp"
#include "tourney/splitmix.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

inline constexpr std::size_t kDefaultOrientationLimit = 20;
inline constexpr std::uint64_t kDefaultLatticeBudget = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kDefaultSampleDenominator = 64;

struct ScoreSequenceSet {
  Graph graph;
  std::set<ScoreVector> vectors;
};

/// Score sequences of all 2^m orientations of g.
inline ScoreSequenceSet enumerate_score_sequences(const Graph& g,
                                                  std::size_t limit = kDefaultOrientationLimit) {
  const std::size_t m = g.edge_count();
  if (m > limit || m >= 63) {
    throw LimitExceeded("orientation enumeration over " + std::to_string(m) +
                        " edges exceeds the limit of " + std::to_string(limit));
  }
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::int64_t> wins(g.vertex_count());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::fill(wins.begin(), wins.end(), 0);
    // Bit k set: the lower endpoint of edge k wins.
    for (std::size_t k = 0; k < m; ++k) {
      const Edge& e = g.edge(k);
      ++wins[(mask >> k & 1) ? e.u - 1 : e.v - 1];
    }
    seen.insert(wins);
  }
  ScoreSequenceSet out{g, {}};
  for (const auto& s : seen) out.vectors.insert(ScoreVector::from_integers(s));
  return out;
}

/// Integer points of the graphic zonotope: integer vectors with
/// 0 <= x_i <= deg(i) and total m that pass the subset check.
inline std::set<ScoreVector> enumerate_lattice_points(
    const Graph& g, std::uint64_t budget = kDefaultLatticeBudget) {
  const std::size_t n = g.vertex_count();
  std::uint64_t boxes = 1;
  for (std::size_t v = 1; v <= n; ++v) {
    boxes *= g.degree(v) + 1;
    if (boxes > budget) {
      throw LimitExceeded("lattice point box exceeds the budget of " +
                          std::to_string(budget));
    }
  }
  const auto m = static_cast<std::int64_t>(g.edge_count());
  std::set<ScoreVector> points;
  std::vector<std::int64_t> x(n, 0);
  while (true) {
    std::int64_t total = 0;
    for (auto v : x) total += v;
    if (total == m) {
      auto candidate = ScoreVector::from_integers(x);
      if (is_feasible(check_subset(g, candidate))) points.insert(std::move(candidate));
    }
    // Odometer over the box.
    std::size_t i = 0;
    while (i < n && x[i] == static_cast<std::int64_t>(g.degree(i + 1))) x[i++] = 0;
    if (i == n) break;
    ++x[i];
  }
  return points;
}

/// Projects a random cube point a_ij = k / denominator (k uniform in
/// 0..denominator, drawn per edge in edge order) through the mean score map.
inline RandomTournament sample_random_tournament(
    const Graph& g, std::uint64_t seed,
    std::uint64_t denominator = kDefaultSampleDenominator) {
  SplitMix64 rng(seed);
  std::vector<Rational> probs;
  probs.reserve(g.edge_count());
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    probs.emplace_back(BigInt(rng.below(denominator + 1)), BigInt(denominator));
  }
  return RandomTournament(g, std::move(probs));
}

inline ScoreVector sample_zonotope_point(const Graph& g, std::uint64_t seed,
                                         std::uint64_t denominator = kDefaultSampleDenominator) {
  return mean_score_sequence(sample_random_tournament(g, seed, denominator));
}

/// Random simple graph: n uniform in [1, max_vertices], each pair kept with
/// probability 1/2, then uniformly chosen edges dropped until at most
/// max_edges remain.
inline Graph random_graph(std::uint64_t seed, std::size_t max_vertices,
                          std::size_t max_edges) {
  SplitMix64 rng(seed);
  const std::size_t n = 1 + rng.below(max_vertices);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      if (rng.below(2)) edges.push_back({i, j});
    }
  }
  while (edges.size() > max_edges) {
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(rng.below(edges.size())));
  }
  return Graph(n, std::move(edges));
}

}  // namespace tourney

#endif  // TOURNEY_ORACLE_HPP_
