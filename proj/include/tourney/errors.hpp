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

#ifndef TOURNEY_ERRORS_HPP_
#define TOURNEY_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace tourney {

/// Base class of every domain error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph: self-loop, duplicate edge, endpoint out of range.
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

/// Vertex subset referencing a vertex outside 1..n.
class InvalidSubset : public Error {
 public:
  using Error::Error;
};

/// Bad user-supplied data: unparsable rational, wrong vector length,
/// non-integer score where an integer one is required.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An exhaustive routine was asked to run beyond its configured limit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// A random tournament with a fractional probability was treated as
/// deterministic.
class NotDeterministic : public Error {
 public:
  using Error::Error;
};

}  // namespace tourney

#endif  // TOURNEY_ERRORS_HPP_
