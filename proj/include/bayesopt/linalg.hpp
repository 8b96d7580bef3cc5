// Copyright 2026 The bayesopt-cpp Authors. All Rights Reserved.
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
// =============================================================================

#ifndef BAYESOPT_LINALG_HPP
#define BAYESOPT_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace bayesopt::linalg {

/// Lower-triangular Cholesky factor L of a symmetric positive definite matrix
/// A = L * L^T.
///
/// Rows are stored contiguously in packed row-major order (row i holds i + 1
/// entries starting at offset i * (i + 1) / 2), so growing the factor by one
/// row only appends to the buffer. A factor is a value: add_row returns a new
/// factor and never modifies one that someone else may be reading.
class CholeskyFactor {
 public:
  CholeskyFactor() = default;

  std::size_t size() const { return n_; }
  bool empty() const { return n_ == 0; }

  /// L(i, j); zero above the diagonal.
  double operator()(std::size_t i, std::size_t j) const {
    return j > i ? 0.0 : packed_[offset(i) + j];
  }

  std::span<const double> row(std::size_t i) const {
    return {packed_.data() + offset(i), i + 1};
  }

  /// log |A| = 2 * sum(log L_ii).
  double log_determinant() const;

  Eigen::MatrixXd lower() const;
  /// L * L^T.
  Eigen::MatrixXd reconstruct() const;

  /// Solves L z = b.
  Eigen::VectorXd forward_solve(const Eigen::Ref<const Eigen::VectorXd>& b) const;
  /// Solves L^T x = z.
  Eigen::VectorXd backward_solve(const Eigen::Ref<const Eigen::VectorXd>& z) const;

 private:
  friend CholeskyFactor factorize(const Eigen::Ref<const Eigen::MatrixXd>& a);
  friend CholeskyFactor add_row(const CholeskyFactor& factor,
                                std::span<const double> new_row);
  friend CholeskyFactor add_row(CholeskyFactor&& factor,
                                std::span<const double> new_row);

  static std::size_t offset(std::size_t i) { return i * (i + 1) / 2; }
  void append_row(std::span<const double> new_row);

  std::size_t n_ = 0;
  std::vector<double> packed_;
};

/// Full O(n^3) factorization. Only the lower triangle of a is read.
/// Throws NotPositiveDefinite on a non-positive pivot and DimensionMismatch if
/// a is not square.
CholeskyFactor factorize(const Eigen::Ref<const Eigen::MatrixXd>& a);

/// Extends the factor of an n x n matrix to the (n + 1) x (n + 1) matrix whose
/// last row is new_row (n off-diagonal entries followed by the diagonal). One
/// forward substitution, O(n^2).
CholeskyFactor add_row(const CholeskyFactor& factor, std::span<const double> new_row);
CholeskyFactor add_row(CholeskyFactor&& factor, std::span<const double> new_row);

/// Solves A x = b by forward then backward substitution.
Eigen::VectorXd solve(const CholeskyFactor& factor, const Eigen::VectorXd& b);
/// Column-wise solve of A X = B.
Eigen::MatrixXd solve(const CholeskyFactor& factor, const Eigen::MatrixXd& b);

}  // namespace bayesopt::linalg

#endif  // BAYESOPT_LINALG_HPP
