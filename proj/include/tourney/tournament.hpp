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

#ifndef TOURNEY_TOURNAMENT_HPP_
#define TOURNEY_TOURNAMENT_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "tourney/errors.hpp"
#include "tourney/graph.hpp"
#include "tourney/rational.hpp"

namespace tourney {

/// Per-vertex (mean) win counts. Entry k belongs to vertex k + 1.
class ScoreVector {
 public:
  ScoreVector() = default;
  explicit ScoreVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
  ScoreVector(std::initializer_list<Rational> entries) : entries_(entries) {}

  static ScoreVector from_integers(const std::vector<std::int64_t>& values) {
    std::vector<Rational> out(values.begin(), values.end());
    return ScoreVector(std::move(out));
  }

  std::size_t size() const { return entries_.size(); }
  const Rational& operator[](std::size_t k) const { return entries_[k]; }
  const std::vector<Rational>& entries() const { return entries_; }

  Rational sum() const {
    Rational total = 0;
    for (const auto& x : entries_) total += x;
    return total;
  }

  bool is_integral() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Rational& x) { return is_integer(x); });
  }

  /// Throws InvalidInput unless the vector has one entry per vertex of g.
  void expect_length(const Graph& g) const {
    if (entries_.size() != g.vertex_count()) {
      throw InvalidInput("score vector has " + std::to_string(entries_.size()) +
                         " entries but the graph has " +
                         std::to_string(g.vertex_count()) + " vertices");
    }
  }

  friend bool operator==(const ScoreVector&, const ScoreVector&) = default;
  friend bool operator<(const ScoreVector& a, const ScoreVector& b) {
    return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(),
                                        b.entries_.begin(), b.entries_.end());
  }

 private:
  std::vector<Rational> entries_;
};

enum class Winner : std::uint8_t { kLower, kUpper };

/// An orientation of every edge of a graph.
class Tournament {
 public:
  Tournament(Graph graph, std::vector<Winner> winners)
      : graph_(std::move(graph)), winners_(std::move(winners)) {
    if (winners_.size() != graph_.edge_count()) {
      throw InvalidInput("tournament has " + std::to_string(winners_.size()) +
                         " winners for " + std::to_string(graph_.edge_count()) +
                         " edges");
    }
  }

  const Graph& graph() const { return graph_; }
  const std::vector<Winner>& winners() const { return winners_; }

  /// 1-based label of the winner of edge k.
  std::size_t winner_vertex(std::size_t k) const {
    const Edge& e = graph_.edge(k);
    return winners_.at(k) == Winner::kLower ? e.u : e.v;
  }

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  Graph graph_;
  std::vector<Winner> winners_;
};

/// Per-edge win probability of the lower endpoint, each in [0, 1].
class RandomTournament {
 public:
  RandomTournament(Graph graph, std::vector<Rational> probs)
      : graph_(std::move(graph)), probs_(std::move(probs)) {
    if (probs_.size() != graph_.edge_count()) {
      throw InvalidInput("random tournament has " + std::to_string(probs_.size()) +
                         " probabilities for " + std::to_string(graph_.edge_count()) +
                         " edges");
    }
    for (std::size_t k = 0; k < probs_.size(); ++k) {
      if (probs_[k] < 0 || probs_[k] > 1) {
        const Edge& e = graph_.edge(k);
        throw InvalidInput("probability " + to_string(probs_[k]) + " on edge (" +
                           std::to_string(e.u) + "," + std::to_string(e.v) +
                           ") is outside [0,1]");
      }
    }
  }

  const Graph& graph() const { return graph_; }
  const std::vector<Rational>& probs() const { return probs_; }
  const Rational& prob(std::size_t k) const { return probs_.at(k); }

  /// Edge indices with 0 < p < 1, ascending.
  std::vector<std::size_t> fractional_support() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < probs_.size(); ++k) {
      if (probs_[k] > 0 && probs_[k] < 1) out.push_back(k);
    }
    return out;
  }

  friend bool operator==(const RandomTournament&, const RandomTournament&) = default;

 private:
  Graph graph_;
  std::vector<Rational> probs_;
};

inline ScoreVector score_sequence(const Tournament& t) {
  std::vector<Rational> wins(t.graph().vertex_count(), 0);
  for (std::size_t k = 0; k < t.graph().edge_count(); ++k) {
    wins[t.winner_vertex(k) - 1] += 1;
  }
  return ScoreVector(std::move(wins));
}

/// x_i = sum of p_ij over edges where i is the lower endpoint plus
/// sum of (1 - p_ji) over edges where i is the upper endpoint.
inline ScoreVector mean_score_sequence(const RandomTournament& rt) {
  const Graph& g = rt.graph();
  std::vector<Rational> x(g.vertex_count(), 0);
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edge(k);
    x[e.u - 1] += rt.prob(k);
    x[e.v - 1] += 1 - rt.prob(k);
  }
  return ScoreVector(std::move(x));
}

/// The degenerate random tournament placing probability 1 on t's outcomes.
inline RandomTournament to_random(const Tournament& t) {
  std::vector<Rational> probs;
  probs.reserve(t.winners().size());
  for (auto w : t.winners()) probs.emplace_back(w == Winner::kLower ? 1 : 0);
  return RandomTournament(t.graph(), std::move(probs));
}

inline Tournament as_deterministic(const RandomTournament& rt) {
  std::vector<Winner> winners;
  winners.reserve(rt.probs().size());
  for (std::size_t k = 0; k < rt.probs().size(); ++k) {
    const Rational& p = rt.prob(k);
    if (p == 1) {
      winners.push_back(Winner::kLower);
    } else if (p == 0) {
      winners.push_back(Winner::kUpper);
    } else {
      const Edge& e = rt.graph().edge(k);
      throw NotDeterministic("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             ") has fractional probability " + to_string(p));
    }
  }
  return Tournament(rt.graph(), std::move(winners));
}

}  // namespace tourney

#endif  // TOURNEY_TOURNAMENT_HPP_
