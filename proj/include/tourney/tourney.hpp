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

#ifndef TOURNEY_TOURNEY_HPP_
#define TOURNEY_TOURNEY_HPP_

#include "tourney/errors.hpp"
#include "tourney/feasibility.hpp"
#include "tourney/graph.hpp"
#include "tourney/json_io.hpp"
#include "tourney/oracle.hpp"
#include "tourney/rational.hpp"
#include "tourney/realization.hpp"
#include "tourney/splitmix.hpp"
#include "tourney/tournament.hpp"

#endif  // TOURNEY_TOURNEY_HPP_
