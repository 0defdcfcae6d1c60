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

// Command-line front end:
//
//   tourney check     <graph> --scores 1,1,1 [--method subset|flow|auto] [--limit N]
//   tourney realize   <graph> --scores 1/2,1,3/2 [--integral]
//   tourney enumerate <graph> [--limit N]
//   tourney compare   <graph> [--seed S] [--count C] [--limit N]
//   tourney sample    <graph> [--seed S] [--denominator D]
//
// <graph> is a JSON file or the literal K<n>. Exit status: 0 success or
// feasible, 1 infeasible (or a disagreement in compare), 2 usage or input
// error.

#ifndef TOURNEY_TOOLS_CLI_HPP_
#define TOURNEY_TOOLS_CLI_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tourney/tourney.hpp"

namespace tourney::cli {

enum ExitCode : int { kOk = 0, kInfeasible = 1, kUsage = 2 };

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline Graph load_graph(const std::string& spec) {
  if (spec.size() > 1 && spec[0] == 'K' &&
      std::all_of(spec.begin() + 1, spec.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    const auto n = std::stoul(spec.substr(1));
    if (n == 0 || n > 1000) throw InvalidInput("complete graph size out of range: " + spec);
    return Graph::complete(n);
  }
  return graph_from_json(parse_json(read_file(spec)));
}

inline ScoreVector parse_scores(const std::string& text) {
  std::vector<Rational> entries;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) entries.push_back(parse_rational(item));
  if (entries.empty()) throw InvalidInput("--scores is empty");
  return ScoreVector(std::move(entries));
}

struct Options {
  std::string verb;
  std::string graph;
  std::string scores;
  std::string scores_file;
  std::string method = "auto";
  std::string output;
  bool integral = false;
  std::uint64_t seed = 0;
  std::size_t limit = 0;  // 0: library default
  std::size_t count = 100;
  std::uint64_t denominator = kDefaultSampleDenominator;
};

namespace detail {

inline FeasibilityVerdict check_with(const Graph& g, const ScoreVector& x,
                                     const Options& opt) {
  if (opt.method == "subset") {
    return check_subset(g, x, opt.limit ? opt.limit : kDefaultSubsetLimit);
  }
  if (opt.method == "auto" && g.is_complete()) {
    x.expect_length(g);
    if (check_complete_majorization(x)) return Feasible{};
  }
  return check_flow(g, x);
}

// Subset vs flow vs majorization on seeded samples and their perturbations,
// plus the orientation/lattice oracle when the graph is small enough.
inline Json compare(const Graph& g, const Options& opt, bool& agreed) {
  const std::size_t n = g.vertex_count();
  const bool use_subset = n <= 12;
  std::size_t instances = 0;
  std::size_t disagreements = 0;
  std::size_t invalid_witnesses = 0;
  auto judge = [&](const ScoreVector& x) {
    ++instances;
    const auto flow = check_flow(g, x);
    bool ok = verify_witness(g, x, flow);
    if (!ok) ++invalid_witnesses;
    if (use_subset) {
      const auto subset = check_subset(g, x);
      if (!verify_witness(g, x, subset)) {
        ++invalid_witnesses;
        ok = false;
      }
      if (!same_kind(subset, flow)) ok = false;
    }
    if (g.is_complete() && check_complete_majorization(x) != is_feasible(flow)) ok = false;
    if (!ok) ++disagreements;
  };
  const Rational step(BigInt(1), BigInt(7));
  for (std::size_t c = 0; c < opt.count; ++c) {
    const std::uint64_t seed = opt.seed + c;
    const auto x = sample_zonotope_point(g, seed, opt.denominator);
    judge(x);
    if (n >= 2) {
      SplitMix64 rng(~seed);
      const auto i = rng.below(n);
      const auto j = (i + 1 + rng.below(n - 1)) % n;
      std::vector<Rational> moved = x.entries();
      moved[i] += step;
      moved[j] -= step;
      judge(ScoreVector(std::move(moved)));
    }
  }

  Json report{{"instances", instances},
              {"disagreements", disagreements},
              {"invalid_witnesses", invalid_witnesses},
              {"subset_checked", use_subset}};
  agreed = disagreements == 0 && invalid_witnesses == 0;

  const std::size_t limit = opt.limit ? opt.limit : 12;
  if (g.edge_count() <= limit && use_subset) {
    const auto scores = enumerate_score_sequences(g, limit);
    const auto lattice = enumerate_lattice_points(g);
    const bool equal = scores.vectors == lattice;
    report["oracle"] = {{"score_sequences", scores.vectors.size()},
                        {"lattice_points", lattice.size()},
                        {"equal", equal}};
    agreed = agreed && equal;
  }
  return report;
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Score sequences of tournaments on arbitrary graphs", "tourney"};
  app.add_option("verb", opt.verb, "check | realize | enumerate | compare | sample")
      ->required()
      ->check(CLI::IsMember({"check", "realize", "enumerate", "compare", "sample"}));
  app.add_option("graph", opt.graph, "graph JSON file, or K<n> for the complete graph")
      ->required();
  app.add_option("--scores", opt.scores, "comma-separated rationals, e.g. 1/2,1,3/2");
  app.add_option("--scores-file", opt.scores_file, "JSON array of rationals");
  app.add_option("--method", opt.method, "feasibility method")
      ->check(CLI::IsMember({"subset", "flow", "auto"}));
  app.add_flag("--integral", opt.integral, "realize a deterministic tournament");
  app.add_option("--seed", opt.seed, "seed for sampling");
  app.add_option("--limit", opt.limit, "override the exhaustive enumeration limit");
  app.add_option("--count", opt.count, "number of seeds in compare");
  app.add_option("--denominator", opt.denominator, "denominator of sampled probabilities")
      ->check(CLI::PositiveNumber);
  app.add_option("--output", opt.output, "write JSON here instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const bool wants_scores = opt.verb == "check" || opt.verb == "realize";
  if (wants_scores && opt.scores.empty() == opt.scores_file.empty()) {
    err << "error: " << opt.verb << " needs exactly one of --scores or --scores-file\n";
    return kUsage;
  }
  if (!wants_scores && (!opt.scores.empty() || !opt.scores_file.empty())) {
    err << "error: " << opt.verb << " does not take a score vector\n";
    return kUsage;
  }
  if (opt.integral && opt.verb != "realize") {
    err << "error: --integral only applies to realize\n";
    return kUsage;
  }

  Json result;
  int status = kOk;
  try {
    const Graph g = load_graph(opt.graph);
    ScoreVector x;
    if (wants_scores) {
      x = opt.scores.empty() ? score_vector_from_json(parse_json(read_file(opt.scores_file)))
                             : parse_scores(opt.scores);
      x.expect_length(g);
    }

    if (opt.verb == "check") {
      const auto verdict = detail::check_with(g, x, opt);
      result = to_json(verdict);
      status = is_feasible(verdict) ? kOk : kInfeasible;
    } else if (opt.verb == "realize") {
      try {
        result = opt.integral ? to_json(realize_integral(g, x)) : to_json(realize(g, x));
      } catch (const Infeasible& e) {
        result = to_json(e.verdict());
        status = kInfeasible;
      }
    } else if (opt.verb == "enumerate") {
      result = to_json(
          enumerate_score_sequences(g, opt.limit ? opt.limit : kDefaultOrientationLimit)
              .vectors);
    } else if (opt.verb == "compare") {
      bool agreed = true;
      result = detail::compare(g, opt, agreed);
      status = agreed ? kOk : kInfeasible;
    } else {
      result = to_json(sample_zonotope_point(g, opt.seed, opt.denominator));
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const std::string text = result.dump() + "\n";
  if (opt.output.empty()) {
    out << text;
  } else {
    std::ofstream file(opt.output, std::ios::binary);
    if (!file || !(file << text)) {
      err << "error: cannot write '" << opt.output << "'\n";
      return kUsage;
    }
  }
  return status;
}

}  // namespace tourney::cli

#endif  // TOURNEY_TOOLS_CLI_HPP_
