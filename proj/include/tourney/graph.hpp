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

// Simple undirected graphs on vertices 1..n.
//
// Every public interface in this header speaks 1-based vertex labels.
// Edges are stored canonically as (u, v) with u < v and sorted
// lexicographically; an edge index is a position in that sorted list.

#ifndef TOURNEY_GRAPH_HPP_
#define TOURNEY_GRAPH_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tourney/errors.hpp"

namespace tourney {

struct Edge {
  std::size_t u = 0;  // lower endpoint
  std::size_t v = 0;  // upper endpoint

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  /// Canonicalizes each pair to u < v and sorts. Throws InvalidGraph on
  /// n == 0, self-loops, endpoints outside 1..n and duplicate edges.
  Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ == 0) throw InvalidGraph("graph must have at least one vertex");
    for (auto& e : edges_) {
      if (e.u == 0 || e.v == 0 || e.u > n_ || e.v > n_) {
        throw InvalidGraph("edge (" + std::to_string(e.u) + "," +
                           std::to_string(e.v) + ") has an endpoint outside 1.." +
                           std::to_string(n_));
      }
      if (e.u == e.v) {
        throw InvalidGraph("self-loop at vertex " + std::to_string(e.u));
      }
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end());
        dup != edges_.end()) {
      throw InvalidGraph("duplicate edge (" + std::to_string(dup->u) + "," +
                         std::to_string(dup->v) + ")");
    }
    adjacency_.resize(n_);
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      adjacency_[edges_[k].u - 1].push_back({edges_[k].v, k});
      adjacency_[edges_[k].v - 1].push_back({edges_[k].u, k});
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
  }

  Graph(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> edges)
      : Graph(n, to_edges(edges)) {}

  static Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) edges.push_back({i, j});
    }
    return Graph(n, std::move(edges));
  }

  /// Path 1-2-...-n.
  static Graph path(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
  }

  /// Star K_{1,n-1} centered at vertex 1.
  static Graph star(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 2; i <= n; ++i) edges.push_back({1, i});
    return Graph(n, std::move(edges));
  }

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_.at(index); }

  std::size_t degree(std::size_t vertex) const {
    return adjacency_.at(vertex - 1).size();
  }

  struct Neighbor {
    std::size_t vertex;  // 1-based
    std::size_t edge;    // edge index

    friend auto operator<=>(const Neighbor&, const Neighbor&) = default;
  };

  /// Neighbors of `vertex` in ascending vertex order.
  std::span<const Neighbor> neighbors(std::size_t vertex) const {
    return adjacency_.at(vertex - 1);
  }

  std::optional<std::size_t> find_edge(std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{a, b});
    if (it == edges_.end() || *it != Edge{a, b}) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  bool is_complete() const { return edges_.size() == n_ * (n_ - 1) / 2; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  static std::vector<Edge> to_edges(
      std::initializer_list<std::pair<std::size_t, std::size_t>> pairs) {
    std::vector<Edge> out;
    out.reserve(pairs.size());
    for (auto [a, b] : pairs) out.push_back({a, b});
    return out;
  }

  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

/// A set of 1-based vertex labels, kept sorted and unique. Range against a
/// particular graph is checked where the subset is used.
class VertexSubset {
 public:
  VertexSubset() = default;
  explicit VertexSubset(std::vector<std::size_t> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }
  VertexSubset(std::initializer_list<std::size_t> members)
      : VertexSubset(std::vector<std::size_t>(members)) {}

  const std::vector<std::size_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(std::size_t vertex) const {
    return std::binary_search(members_.begin(), members_.end(), vertex);
  }

  void validate(std::size_t n) const {
    for (auto v : members_) {
      if (v == 0 || v > n) {
        throw InvalidSubset("vertex " + std::to_string(v) + " is outside 1.." +
                            std::to_string(n));
      }
    }
  }

  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;

 private:
  std::vector<std::size_t> members_;
};

/// phi(A): number of edges with both endpoints in `a`.
inline std::size_t induced_edge_count(const Graph& g, const VertexSubset& a) {
  a.validate(g.vertex_count());
  std::vector<char> in(g.vertex_count() + 1, 0);
  for (auto v : a.members()) in[v] = 1;
  std::size_t count = 0;
  for (const auto& e : g.edges()) {
    if (in[e.u] && in[e.v]) ++count;
  }
  return count;
}

/// One traversed edge of a cycle. The edge is "forward" when walked from its
/// lower endpoint to its upper endpoint.
struct CycleStep {
  std::size_t edge;
  std::size_t from;
  std::size_t to;

  bool forward() const { return from < to; }
  friend bool operator==(const CycleStep&, const CycleStep&) = default;
};

using Cycle = std::vector<CycleStep>;

/// Returns a simple cycle inside the given edge subset, or nullopt when the
/// subset is a forest.
///
/// The search is a depth-first search started from the lowest-numbered
/// vertex not yet visited, exploring neighbors in ascending vertex order.
/// The first back edge closes the cycle; the cycle is reported starting at
/// the ancestor end of that back edge, following tree edges down and
/// returning along the back edge.
inline std::optional<Cycle> find_cycle_in_edge_subset(const Graph& g,
                                                      std::span<const std::size_t> subset) {
  const std::size_t n = g.vertex_count();
  std::vector<char> selected(g.edge_count(), 0);
  for (auto k : subset) {
    if (k >= g.edge_count()) {
      throw InvalidInput("edge index " + std::to_string(k) + " out of range");
    }
    selected[k] = 1;
  }

  enum class State : std::uint8_t { kUnseen, kOnStack, kDone };
  std::vector<State> state(n + 1, State::kUnseen);
  std::vector<std::size_t> parent_edge(n + 1, SIZE_MAX);

  struct Frame {
    std::size_t vertex;
    std::size_t next = 0;  // position in neighbors(vertex)
  };
  std::vector<Frame> stack;

  for (std::size_t root = 1; root <= n; ++root) {
    if (state[root] != State::kUnseen) continue;
    stack.push_back({root});
    state[root] = State::kOnStack;
    while (!stack.empty()) {
      Frame& top = stack.back();
      const auto nbrs = g.neighbors(top.vertex);
      if (top.next == nbrs.size()) {
        state[top.vertex] = State::kDone;
        stack.pop_back();
        continue;
      }
      const auto [w, e] = nbrs[top.next++];
      if (!selected[e] || e == parent_edge[top.vertex]) continue;
      if (state[w] == State::kUnseen) {
        parent_edge[w] = e;
        state[w] = State::kOnStack;
        stack.push_back({w});
        continue;
      }
      if (state[w] != State::kOnStack) continue;

      // Back edge top.vertex -> w closes a cycle along the stack.
      const std::size_t u = top.vertex;
      auto pos = std::find_if(stack.begin(), stack.end(),
                              [w = w](const Frame& f) { return f.vertex == w; });
      Cycle cycle;
      for (auto it = pos; std::next(it) != stack.end(); ++it) {
        const std::size_t child = std::next(it)->vertex;
        cycle.push_back({parent_edge[child], it->vertex, child});
      }
      cycle.push_back({e, u, w});
      return cycle;
    }
  }
  return std::nullopt;
}

inline constexpr std::size_t kDefaultForestLimit = 20;

/// All acyclic edge subsets of g (including the empty set), each as a sorted
/// list of edge indices, ordered by the bitmask of the subset.
inline std::vector<std::vector<std::size_t>> enumerate_forests(
    const Graph& g, std::size_t limit = kDefaultForestLimit) {
  const std::size_t m = g.edge_count();
  if (m > limit || m >= 63) {
    throw LimitExceeded("forest enumeration over " + std::to_string(m) +
                        " edges exceeds the limit of " + std::to_string(limit));
  }
  std::vector<std::vector<std::size_t>> forests;
  std::vector<std::size_t> root(g.vertex_count() + 1);
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::iota(root.begin(), root.end(), std::size_t{0});
    bool acyclic = true;
    std::vector<std::size_t> members;
    for (std::size_t k = 0; k < m && acyclic; ++k) {
      if (!(mask >> k & 1)) continue;
      const auto a = find(g.edge(k).u);
      const auto b = find(g.edge(k).v);
      if (a == b) {
        acyclic = false;
      } else {
        root[a] = b;
        members.push_back(k);
      }
    }
    if (acyclic) forests.push_back(std::move(members));
  }
  return forests;
}

}  // namespace tourney

#endif  // TOURNEY_GRAPH_HPP_
