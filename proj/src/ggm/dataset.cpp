#include "ggm/dataset.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ggm/error.hpp"
#include "ggm/util.hpp"

namespace ggm {

Dataset::Dataset(Eigen::MatrixXd y) : y_(std::move(y)) {
  require(y_.rows() >= 1, ErrorCode::InvalidArgument, "Dataset: n >= 1 required");
  require(y_.cols() >= 2, ErrorCode::InvalidArgument, "Dataset: p >= 2 required");
  require(y_.allFinite(), ErrorCode::InvalidArgument,
          "Dataset: non-finite entries in Y");
  s_ = y_.transpose() * y_;
}

uint64_t Dataset::hash() const {
  int64_t dims[2] = {y_.rows(), y_.cols()};
  uint64_t h = fnv1a(dims, sizeof(dims));
  return fnv1a(y_.data(), sizeof(double) * y_.size(), h);
}

Dataset standardize(const Eigen::MatrixXd& y_raw) {
  const auto n = y_raw.rows();
  const auto p = y_raw.cols();
  require(p >= 2, ErrorCode::InvalidArgument, "standardize: p >= 2 required");
  require(n >= 2, ErrorCode::InvalidArgument, "standardize: n >= 2 required");
  Eigen::MatrixXd y = y_raw;
  for (Eigen::Index j = 0; j < p; ++j) {
    double mean = y.col(j).mean();
    y.col(j).array() -= mean;
    double var = y.col(j).squaredNorm() / static_cast<double>(n - 1);
    require(var > 0.0, ErrorCode::DegenerateData,
            "standardize: column " + std::to_string(j + 1) +
                " has zero sample variance");
    y.col(j) /= std::sqrt(var);
  }
  return Dataset(std::move(y));
}

Eigen::MatrixXd read_csv_matrix(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::Io, "cannot open " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  size_t width = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw Error(ErrorCode::Io, "non-numeric cell '" + cell + "' in " + path);
      }
    }
    if (width == 0) width = row.size();
    require(row.size() == width, ErrorCode::Io,
            "ragged row in " + path + " at line " + std::to_string(rows.size() + 1));
    rows.push_back(std::move(row));
  }
  require(!rows.empty() && width > 0, ErrorCode::Io, "empty CSV: " + path);
  Eigen::MatrixXd m(rows.size(), width);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < width; ++j) m(i, j) = rows[i][j];
  return m;
}

void write_csv_matrix(const Eigen::MatrixXd& m, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  require(f != nullptr, ErrorCode::Io, "cannot write " + path);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::fprintf(f, j + 1 < m.cols() ? "%.17g," : "%.17g\n", m(i, j));
    }
  }
  std::fclose(f);
}

}  // namespace ggm
