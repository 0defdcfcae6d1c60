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

// Walks through the library on the Petersen graph: decide a few score
// vectors, realize a fractional one with a forest of random matches, and
// realize an integral one as an ordinary tournament.

#include <iostream>

#include "tourney/tourney.hpp"

using namespace tourney;

int main() {
  const Graph petersen(10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5},
                            {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10},
                            {6, 8}, {8, 10}, {7, 10}, {7, 9}, {6, 9}});

  // 3-regular with 15 edges: everyone winning 3/2 on average is feasible.
  std::vector<Rational> even(10, Rational(BigInt(3), BigInt(2)));
  const ScoreVector x(even);
  std::cout << "x = 3/2 everywhere: " << describe(check_flow(petersen, x)) << "\n";

  const auto result = realize(petersen, x);
  std::cout << "realization: " << to_json(result).dump() << "\n";
  std::cout << "random matches: " << result.fractional_support.size() << " (a forest)\n";

  // The inner pentagram 6..10 has five matches among its own vertices, so
  // those vertices cannot all finish with zero wins.
  const auto bad = ScoreVector::from_integers({3, 3, 3, 3, 3, 0, 0, 0, 0, 0});
  std::cout << "x = (3,3,3,3,3,0,...): " << describe(check_flow(petersen, bad)) << "\n";

  const auto s = ScoreVector::from_integers({2, 1, 2, 1, 2, 1, 2, 1, 2, 1});
  const auto t = realize_integral(petersen, s);
  std::cout << "tournament for " << to_json(s).dump() << ": " << to_json(t).dump() << "\n";
}
