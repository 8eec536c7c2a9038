#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rebel/generators.hpp"
#include "rebel/runner.hpp"

namespace rebel {

// One graph source: a generator with parameters, or an edge-list file.
struct GraphSource {
  std::optional<gen::Params> generator;
  std::filesystem::path file;
};

struct ExperimentSpec {
  std::vector<GraphSource> graphs;
  std::vector<Algorithm> algorithms;
  std::size_t repetitions = 1;
  bool timing = true;
};

// JSON document:
//   {"seed": 1, "repetitions": 1, "algorithms": ["alg1", ...], "timing": true,
//    "graphs": [{"generator": "star", "size": 10},
//               {"generator": "random", "sizes": [30, 40], "p": 0.1, "seeds": [1, 2]},
//               {"file": "g.el"}]}
// "size"/"sizes" and "seed"/"seeds" expand to every combination. Relative
// files resolve against base_dir. An empty document is an empty spec.
ExperimentSpec parse_experiment_spec(std::istream& in, const std::filesystem::path& base_dir = {});
ExperimentSpec load_experiment_spec(const std::filesystem::path& path);

struct ExperimentRow {
  std::string graph;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::string alg;
  std::size_t count_y = 0;
  std::size_t count_n = 0;
  std::size_t bound_required = 0;
  bool bound_met = false;
  bool regret_proof = false;
  double runtime_ms = 0.0;
};

// One row per (graph, algorithm, repetition), in spec order. Repetition r of
// a random graph uses seed + r.
std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec);

void write_experiment_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);

}  // namespace rebel
