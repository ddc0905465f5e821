#include "mceif/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace mceif {

void write_batch_csv(const ObservationBatch& batch, const std::vector<std::string>& columns,
                     const std::string& path) {
  if (static_cast<Index>(columns.size()) != batch.cols())
    throw std::invalid_argument("write_batch_csv: header/column count mismatch");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_batch_csv: cannot open " + path);
  for (std::size_t j = 0; j < columns.size(); ++j)
    out << (j ? "," : "") << columns[j];
  out << '\n';
  out << std::setprecision(17);
  for (Index i = 0; i < batch.rows(); ++i) {
    for (Index j = 0; j < batch.cols(); ++j) out << (j ? "," : "") << batch(i, j);
    out << '\n';
  }
}

CsvBatch read_batch_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_batch_csv: cannot open " + path);

  CsvBatch result;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("read_batch_csv: empty file");
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) result.columns.push_back(cell);
  }

  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<double> row;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    if (row.size() != result.columns.size())
      throw std::runtime_error("read_batch_csv: ragged row");
    rows.push_back(std::move(row));
  }

  result.rows.resize(static_cast<Index>(rows.size()), static_cast<Index>(result.columns.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      result.rows(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
  return result;
}

std::vector<std::string> causal_glm_columns(Index confounders) {
  std::vector<std::string> cols;
  for (Index i = 1; i <= confounders; ++i) cols.push_back("c" + std::to_string(i));
  cols.push_back("t");
  cols.push_back("y");
  return cols;
}

std::vector<std::string> generic_columns(Index obs_dim) {
  std::vector<std::string> cols;
  for (Index i = 1; i <= obs_dim; ++i) cols.push_back("x" + std::to_string(i));
  return cols;
}

}  // namespace mceif
