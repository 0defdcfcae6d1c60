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

// JSON encodings.
//
//   graph:             {"n": 3, "edges": [[1,2],[1,3],[2,3]]}
//   random tournament: {"graph": <graph>, "probs": ["1/2", "0", ...]}
//   tournament:        {"graph": <graph>, "winners": [1, 3, ...]}
//   score vector:      ["1/2", "1", 2, "0.25"]
//
// Rationals are written as "p/q" strings in lowest terms ("p" when integral)
// and read from such strings, decimal strings or JSON integers. JSON
// floating-point numbers are rejected since they are not exact.
// nlohmann::json keeps object keys sorted, so dump() output is canonical.

#ifndef TOURNEY_JSON_IO_HPP_
#define TOURNEY_JSON_IO_HPP_

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "tourney/errors.hpp"
#include "tourney/feasibility.hpp"
#include "tourney/graph.hpp"
#include "tourney/rational.hpp"
#include "tourney/realization.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

using Json = nlohmann::json;

inline Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_unsigned()) return Rational(BigInt(j.get<unsigned long long>()));
  throw InvalidInput("non-rational entry " + j.dump() +
                     ": expected an integer or a string such as \"1/2\" or \"0.25\"");
}

inline Json to_json(const Rational& r) { return to_string(r); }

inline Graph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw InvalidInput("malformed graph JSON: expected {\"n\": <int>, \"edges\": [[i,j], ...]}");
  }
  const Json& n = j.at("n");
  if (!n.is_number_integer() || n.get<long long>() <= 0) {
    throw InvalidInput("malformed graph JSON: \"n\" must be a positive integer");
  }
  const Json& list = j.at("edges");
  if (!list.is_array()) throw InvalidInput("malformed graph JSON: \"edges\" must be an array");
  std::vector<Edge> edges;
  for (const auto& pair : list) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      throw InvalidInput("malformed graph JSON: edge " + pair.dump() +
                         " is not a pair of integers");
    }
    const long long a = pair[0].get<long long>();
    const long long b = pair[1].get<long long>();
    if (a <= 0 || b <= 0 || a > n.get<long long>() || b > n.get<long long>()) {
      throw InvalidGraph("edge " + pair.dump() + " has an endpoint outside 1.." +
                         std::to_string(n.get<long long>()));
    }
    edges.push_back({static_cast<std::size_t>(a), static_cast<std::size_t>(b)});
  }
  return Graph(static_cast<std::size_t>(n.get<long long>()), std::move(edges));
}

inline Json edge_json(const Graph& g, std::size_t k) {
  return Json::array({g.edge(k).u, g.edge(k).v});
}

inline Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (std::size_t k = 0; k < g.edge_count(); ++k) edges.push_back(edge_json(g, k));
  return Json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

inline ScoreVector score_vector_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("score vector JSON must be an array");
  std::vector<Rational> entries;
  for (const auto& e : j) entries.push_back(rational_from_json(e));
  return ScoreVector(std::move(entries));
}

inline Json to_json(const ScoreVector& x) {
  Json out = Json::array();
  for (const auto& r : x.entries()) out.push_back(to_json(r));
  return out;
}

inline RandomTournament random_tournament_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("graph") || !j.contains("probs") ||
      !j.at("probs").is_array()) {
    throw InvalidInput("malformed random tournament JSON: expected {\"graph\", \"probs\"}");
  }
  std::vector<Rational> probs;
  for (const auto& p : j.at("probs")) probs.push_back(rational_from_json(p));
  return RandomTournament(graph_from_json(j.at("graph")), std::move(probs));
}

inline Json to_json(const RandomTournament& rt) {
  Json probs = Json::array();
  for (const auto& p : rt.probs()) probs.push_back(to_json(p));
  return Json{{"graph", to_json(rt.graph())}, {"probs", std::move(probs)}};
}

inline Tournament tournament_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("graph") || !j.contains("winners") ||
      !j.at("winners").is_array()) {
    throw InvalidInput("malformed tournament JSON: expected {\"graph\", \"winners\"}");
  }
  Graph g = graph_from_json(j.at("graph"));
  const Json& list = j.at("winners");
  if (list.size() != g.edge_count()) {
    throw InvalidInput("tournament JSON lists " + std::to_string(list.size()) +
                       " winners for " + std::to_string(g.edge_count()) + " edges");
  }
  std::vector<Winner> winners;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const Edge& e = g.edge(k);
    if (!list[k].is_number_integer()) {
      throw InvalidInput("winner " + list[k].dump() + " is not a vertex label");
    }
    const auto w = list[k].get<long long>();
    if (w == static_cast<long long>(e.u)) {
      winners.push_back(Winner::kLower);
    } else if (w == static_cast<long long>(e.v)) {
      winners.push_back(Winner::kUpper);
    } else {
      throw InvalidInput("winner " + std::to_string(w) + " is not an endpoint of edge (" +
                         std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
  }
  return Tournament(std::move(g), std::move(winners));
}

inline Json to_json(const Tournament& t) {
  Json winners = Json::array();
  for (std::size_t k = 0; k < t.winners().size(); ++k) winners.push_back(t.winner_vertex(k));
  return Json{{"graph", to_json(t.graph())}, {"winners", std::move(winners)}};
}

inline Json to_json(const FeasibilityVerdict& verdict) {
  if (std::holds_alternative<Feasible>(verdict)) return Json{{"feasible", true}};
  Json witness;
  if (const auto* sum = std::get_if<SumMismatch>(&verdict)) {
    witness = {{"kind", "sum"}, {"sum", to_json(sum->actual)}, {"expected", sum->expected}};
  } else {
    const auto& sub = std::get<SubsetViolation>(verdict);
    witness = {{"kind", "subset"},
               {"A", sub.subset.members()},
               {"sum", to_json(sub.subset_sum)},
               {"phi", sub.phi}};
  }
  return Json{{"feasible", false}, {"witness", std::move(witness)}};
}

inline Json to_json(const RealizationResult& r) {
  const Graph& g = r.tournament.graph();
  auto edge_list = [&](const std::vector<std::size_t>& ids) {
    Json out = Json::array();
    for (auto k : ids) out.push_back(edge_json(g, k));
    return out;
  };
  Json probs = Json::array();
  for (const auto& p : r.tournament.probs()) probs.push_back(to_json(p));
  return Json{{"probs", std::move(probs)},
              {"fractional_support", edge_list(r.fractional_support)},
              {"partition",
               {{"A", edge_list(r.partition.upper_wins)},
                {"B", edge_list(r.partition.lower_wins)},
                {"F", edge_list(r.partition.fractional)}}}};
}

/// Integer score vectors as a sorted array of integer arrays.
inline Json to_json(const std::set<ScoreVector>& vectors) {
  Json out = Json::array();
  for (const auto& v : vectors) {
    Json row = Json::array();
    for (const auto& r : v.entries()) {
      if (auto i = to_int64(r)) {
        row.push_back(*i);
      } else {
        row.push_back(to_json(r));
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace tourney

#endif  // TOURNEY_JSON_IO_HPP_
