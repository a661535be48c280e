#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>

namespace ggm {

// Observations plus the Gram matrix S = Y'Y that all posterior formulas
// consume. Immutable after construction.
class Dataset {
 public:
  // Takes Y as given (no centering/scaling) and computes S.
  explicit Dataset(Eigen::MatrixXd y);

  const Eigen::MatrixXd& y() const { return y_; }
  const Eigen::MatrixXd& s() const { return s_; }
  int n() const { return static_cast<int>(y_.rows()); }
  int p() const { return static_cast<int>(y_.cols()); }

  // FNV-1a over dims and the raw matrix bytes; keys manifests and the
  // proposal-table sidecar.
  uint64_t hash() const;

 private:
  Eigen::MatrixXd y_;
  Eigen::MatrixXd s_;
};

// Centers each column to mean 0 and scales to unit sample variance
// (denominator n-1). Errors on constant columns, naming the offender.
Dataset standardize(const Eigen::MatrixXd& y_raw);

// Headerless numeric CSV; rows = observations, columns = variables.
Eigen::MatrixXd read_csv_matrix(const std::string& path);
void write_csv_matrix(const Eigen::MatrixXd& m, const std::string& path);

}  // namespace ggm
