#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mceif/types.hpp"

#include "json.hpp"

namespace mceif {

/// Experiment runner configuration. Counts left at zero fall back to the
/// per-experiment defaults recorded in metadata.json.
struct ExperimentSpec {
  std::string name;  // density-compare | mc-decay | dim-scaling |
                     // estimator-parity | estimator-mse | markowitz
  std::uint64_t seed = 0;
  Index monte_carlo_samples = 0;  // M
  Index data_points = 0;          // N
  Index confounders = 0;          // F (causal GLM experiments)
  Index assets = 0;               // D (markowitz)
  Index replicates = 0;
  std::vector<Index> m_grid;  // mc-decay
  std::vector<Index> p_grid;  // dim-scaling
  std::string output_dir;     // empty -> no files written
};

struct ResultRow {
  Index replicate;
  std::string estimator;
  std::string metric;
  double value;
};

struct ExperimentResult {
  std::vector<ResultRow> rows;
  nlohmann::json summary;
  nlohmann::json metadata;
};

/// Runs one experiment; when output_dir is set, writes results.csv (long
/// format), metadata.json (spec plus every defaulted numeric choice) and
/// summary.json. Throws std::invalid_argument for a bad spec and
/// std::runtime_error for numerical failures.
ExperimentResult run_experiment(const ExperimentSpec& spec);

}  // namespace mceif
