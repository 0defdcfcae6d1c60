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

// Dinic's max-flow over an integral capacity type (int64 or BigInt).

#ifndef TOURNEY_DETAIL_MAX_FLOW_HPP_
#define TOURNEY_DETAIL_MAX_FLOW_HPP_

#include <algorithm>
#include <cstddef>
#include <queue>
#include <vector>

namespace tourney::detail {

template <typename Cap>
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t nodes) : out_(nodes), level_(nodes), cursor_(nodes) {}

  /// Adds a directed arc and returns its id. The reverse residual arc is
  /// id ^ 1.
  std::size_t add_arc(std::size_t from, std::size_t to, Cap capacity) {
    const std::size_t id = arcs_.size();
    arcs_.push_back({to, capacity, Cap(0)});
    out_[from].push_back(id);
    arcs_.push_back({from, Cap(0), Cap(0)});
    out_[to].push_back(id + 1);
    return id;
  }

  Cap solve(std::size_t source, std::size_t sink) {
    Cap total = 0;
    while (build_levels(source, sink)) {
      std::fill(cursor_.begin(), cursor_.end(), 0);
      while (true) {
        Cap pushed = augment(source, sink, Cap(-1));
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

  const Cap& flow(std::size_t arc) const { return arcs_[arc].flow; }

  /// Nodes reachable from `source` in the residual network, found by BFS in
  /// arc insertion order.
  std::vector<char> source_side(std::size_t source) const {
    std::vector<char> seen(out_.size(), 0);
    std::queue<std::size_t> queue;
    seen[source] = 1;
    queue.push(source);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop();
      for (auto id : out_[u]) {
        const Arc& a = arcs_[id];
        if (!seen[a.to] && a.capacity - a.flow > 0) {
          seen[a.to] = 1;
          queue.push(a.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    std::size_t to;
    Cap capacity;
    Cap flow;
  };

  bool build_levels(std::size_t source, std::size_t sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> queue;
    level_[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop();
      for (auto id : out_[u]) {
        const Arc& a = arcs_[id];
        if (level_[a.to] < 0 && a.capacity - a.flow > 0) {
          level_[a.to] = level_[u] + 1;
          queue.push(a.to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  // `limit` < 0 means unbounded.
  Cap augment(std::size_t u, std::size_t sink, Cap limit) {
    if (u == sink) return limit;
    for (auto& i = cursor_[u]; i < out_[u].size(); ++i) {
      const std::size_t id = out_[u][i];
      Arc& a = arcs_[id];
      const Cap residual = a.capacity - a.flow;
      if (residual <= 0 || level_[a.to] != level_[u] + 1) continue;
      const Cap want = (limit < 0 || residual < limit) ? residual : limit;
      Cap got = augment(a.to, sink, want);
      if (got > 0) {
        a.flow += got;
        arcs_[id ^ 1].flow -= got;
        return got;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace tourney::detail

#endif  // TOURNEY_DETAIL_MAX_FLOW_HPP_
