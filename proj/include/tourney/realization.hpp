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

// Constructing tournaments with a prescribed (mean) score sequence.
//
// A feasible x is first realized by any random tournament (read off the
// transportation flow), then cycles in the fractional support are cancelled
// until the fractional edges form a forest. For integral x the forest is
// necessarily empty: a leaf of a nonempty fractional forest would have an
// integer score equal to an integer plus a strictly fractional number.

#ifndef TOURNEY_REALIZATION_HPP_
#define TOURNEY_REALIZATION_HPP_

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tourney/feasibility.hpp"
#include "tourney/graph.hpp"
#include "tourney/rational.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

/// Edges split by outcome: `upper_wins` (p = 0), `lower_wins` (p = 1) and
/// `fractional` (0 < p < 1). Each list holds ascending edge indices.
struct EdgePartition {
  std::vector<std::size_t> upper_wins;
  std::vector<std::size_t> lower_wins;
  std::vector<std::size_t> fractional;

  friend bool operator==(const EdgePartition&, const EdgePartition&) = default;
};

struct RealizationResult {
  RandomTournament tournament;
  std::vector<std::size_t> fractional_support;
  EdgePartition partition;
  std::size_t cancellations = 0;  // cycles cancelled by forest_reduce
};

inline EdgePartition partition_edges(const RandomTournament& rt) {
  EdgePartition out;
  for (std::size_t k = 0; k < rt.probs().size(); ++k) {
    const Rational& p = rt.prob(k);
    if (p == 0) {
      out.upper_wins.push_back(k);
    } else if (p == 1) {
      out.lower_wins.push_back(k);
    } else {
      out.fractional.push_back(k);
    }
  }
  return out;
}

/// Some random tournament with mean score sequence exactly x. Throws
/// Infeasible (carrying the flow decider's witness) when none exists.
inline RandomTournament fractional_realization(const Graph& g, const ScoreVector& x) {
  x.expect_length(g);
  if (detail::sum_mismatch(g, x) || detail::first_negative(x)) {
    throw Infeasible(check_flow(g, x));
  }
  auto transport = detail::route(g, x);
  if (!transport.saturated) throw Infeasible(check_flow(g, x));
  return RandomTournament(g, std::move(transport.lower_share));
}

namespace detail {

// Which way to push around a cycle: +1 raises p on forward steps and lowers
// it on backward steps, -1 does the opposite.
struct Push {
  int direction;
  Rational delta;
};

inline Rational distance_to_bound(const Rational& p, int sign) {
  return sign > 0 ? Rational(1 - p) : p;
}

// Chooses the push whose maximal step drives the lowest-indexed cycle edge to
// a bound. If both pushes do, the one sending that edge to 0 wins. If neither
// does, that edge is still moved toward 0.
inline Push choose_push(const Cycle& cycle, const std::vector<Rational>& probs) {
  const CycleStep* lowest = &cycle.front();
  for (const auto& step : cycle) {
    if (step.edge < lowest->edge) lowest = &step;
  }
  Push pushes[2] = {{+1, 0}, {-1, 0}};
  bool hits_lowest[2] = {false, false};
  for (int d = 0; d < 2; ++d) {
    bool first = true;
    for (const auto& step : cycle) {
      const int sign = step.forward() ? pushes[d].direction : -pushes[d].direction;
      Rational dist = distance_to_bound(probs[step.edge], sign);
      if (first || dist < pushes[d].delta) pushes[d].delta = std::move(dist);
      first = false;
    }
    const int sign = lowest->forward() ? pushes[d].direction : -pushes[d].direction;
    hits_lowest[d] = distance_to_bound(probs[lowest->edge], sign) == pushes[d].delta;
  }
  // Direction under which the lowest edge decreases.
  const int toward_zero = lowest->forward() ? 1 : 0;
  if (hits_lowest[0] != hits_lowest[1]) return hits_lowest[0] ? pushes[0] : pushes[1];
  return pushes[toward_zero];
}

}  // namespace detail

/// Cancels cycles of the fractional support until it is a forest, keeping
/// the mean score sequence fixed. Edges already at 0 or 1 are never touched.
///
/// Walking a cycle, a step u -> v along edge (i, j) changes p_ij by +delta
/// when u = i and by -delta when u = j; either way x_u gains delta and x_v
/// loses delta, so every vertex on the cycle nets zero.
inline RealizationResult forest_reduce(const RandomTournament& rt) {
  const Graph& g = rt.graph();
  std::vector<Rational> probs = rt.probs();
  const ScoreVector target = mean_score_sequence(rt);
  std::size_t cancellations = 0;

  while (true) {
    std::vector<std::size_t> support;
    for (std::size_t k = 0; k < probs.size(); ++k) {
      if (probs[k] > 0 && probs[k] < 1) support.push_back(k);
    }
    auto cycle = find_cycle_in_edge_subset(g, support);
    if (!cycle) break;

    const auto push = detail::choose_push(*cycle, probs);
    for (const auto& step : *cycle) {
      const int sign = step.forward() ? push.direction : -push.direction;
      if (sign > 0) {
        probs[step.edge] += push.delta;
      } else {
        probs[step.edge] -= push.delta;
      }
    }
    ++cancellations;
    if (mean_score_sequence(RandomTournament(g, probs)) != target) {
      throw std::logic_error("cycle cancellation changed the mean score sequence");
    }
    if (cancellations > g.edge_count()) {
      throw std::logic_error("cycle cancellation did not terminate within m steps");
    }
  }

  RandomTournament reduced(g, std::move(probs));
  auto partition = partition_edges(reduced);
  auto support = partition.fractional;
  return RealizationResult{std::move(reduced), std::move(support), std::move(partition),
                           cancellations};
}

/// A random tournament with mean score sequence x whose fractional edges
/// form a forest. Throws Infeasible when x is not a mean score sequence.
inline RealizationResult realize(const Graph& g, const ScoreVector& x) {
  return forest_reduce(fractional_realization(g, x));
}

/// A deterministic tournament with score sequence s. Throws InvalidInput for
/// non-integer entries and Infeasible when s is not a score sequence.
inline Tournament realize_integral(const Graph& g, const ScoreVector& s) {
  s.expect_length(g);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!is_integer(s[i])) {
      throw InvalidInput("score of vertex " + std::to_string(i + 1) + " is " +
                         to_string(s[i]) + ", not an integer");
    }
  }
  auto result = realize(g, s);
  if (!result.fractional_support.empty()) {
    throw std::logic_error("integral score vector left a fractional edge after reduction");
  }
  return as_deterministic(result.tournament);
}

}  // namespace tourney

#endif  // TOURNEY_REALIZATION_HPP_
