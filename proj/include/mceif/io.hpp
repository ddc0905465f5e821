#pragma once

#include <string>
#include <vector>

#include "mceif/types.hpp"

namespace mceif {

/// Observation batch as CSV with a one-line header, full double precision.
void write_batch_csv(const ObservationBatch& batch, const std::vector<std::string>& columns,
                     const std::string& path);

struct CsvBatch {
  std::vector<std::string> columns;
  ObservationBatch rows;
};

CsvBatch read_batch_csv(const std::string& path);

/// Column names for the bundled model layouts.
std::vector<std::string> causal_glm_columns(Index confounders);  // c1..cF, t, y
std::vector<std::string> generic_columns(Index obs_dim);         // x1..xD

}  // namespace mceif
