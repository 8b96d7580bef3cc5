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

#include "bayesopt/linalg.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "bayesopt/errors.hpp"

namespace bayesopt::linalg {

namespace {

void check_size(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    throw DimensionMismatch(std::string(what) + ": expected length " +
                            std::to_string(expected) + ", got " + std::to_string(got));
  }
}

}  // namespace

double CholeskyFactor::log_determinant() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < n_; ++i) sum += std::log(packed_[offset(i) + i]);
  return 2.0 * sum;
}

Eigen::MatrixXd CholeskyFactor::lower() const {
  const auto n = static_cast<Eigen::Index>(n_);
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      l(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          packed_[offset(i) + j];
    }
  }
  return l;
}

Eigen::MatrixXd CholeskyFactor::reconstruct() const {
  const Eigen::MatrixXd l = lower();
  return l * l.transpose();
}

Eigen::VectorXd CholeskyFactor::forward_solve(
    const Eigen::Ref<const Eigen::VectorXd>& b) const {
  check_size(n_, static_cast<std::size_t>(b.size()), "forward_solve");
  Eigen::VectorXd z(b.size());
  for (std::size_t i = 0; i < n_; ++i) {
    const double* li = packed_.data() + offset(i);
    double acc = b(static_cast<Eigen::Index>(i));
    for (std::size_t j = 0; j < i; ++j) acc -= li[j] * z(static_cast<Eigen::Index>(j));
    z(static_cast<Eigen::Index>(i)) = acc / li[i];
  }
  return z;
}

Eigen::VectorXd CholeskyFactor::backward_solve(
    const Eigen::Ref<const Eigen::VectorXd>& z) const {
  check_size(n_, static_cast<std::size_t>(z.size()), "backward_solve");
  // Column sweep so that each step reads one contiguous packed row.
  Eigen::VectorXd x = z;
  for (std::size_t k = n_; k-- > 0;) {
    const double* lk = packed_.data() + offset(k);
    const double xk = x(static_cast<Eigen::Index>(k)) / lk[k];
    x(static_cast<Eigen::Index>(k)) = xk;
    for (std::size_t j = 0; j < k; ++j) x(static_cast<Eigen::Index>(j)) -= lk[j] * xk;
  }
  return x;
}

void CholeskyFactor::append_row(std::span<const double> new_row) {
  check_size(n_ + 1, new_row.size(), "add_row");
  const std::size_t start = packed_.size();
  packed_.resize(start + n_ + 1);
  double* out = packed_.data() + start;
  double diag = new_row[n_];
  for (std::size_t j = 0; j < n_; ++j) {
    const double* lj = packed_.data() + offset(j);
    double acc = new_row[j];
    for (std::size_t k = 0; k < j; ++k) acc -= lj[k] * out[k];
    out[j] = acc / lj[j];
    diag -= out[j] * out[j];
  }
  if (!(diag > 0.0)) {
    packed_.resize(start);
    throw NotPositiveDefinite(n_, diag);
  }
  out[n_] = std::sqrt(diag);
  ++n_;
}

CholeskyFactor factorize(const Eigen::Ref<const Eigen::MatrixXd>& a) {
  if (a.rows() != a.cols()) {
    throw DimensionMismatch("factorize: matrix is " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()));
  }
  const auto n = static_cast<std::size_t>(a.rows());
  CholeskyFactor factor;
  factor.packed_.reserve(n * (n + 1) / 2);
  std::vector<double> row(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      row[j] = a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
    factor.append_row(std::span<const double>(row.data(), i + 1));
  }
  return factor;
}

CholeskyFactor add_row(const CholeskyFactor& factor, std::span<const double> new_row) {
  CholeskyFactor extended = factor;
  extended.append_row(new_row);
  return extended;
}

CholeskyFactor add_row(CholeskyFactor&& factor, std::span<const double> new_row) {
  CholeskyFactor extended = std::move(factor);
  extended.append_row(new_row);
  return extended;
}

Eigen::VectorXd solve(const CholeskyFactor& factor, const Eigen::VectorXd& b) {
  return factor.backward_solve(factor.forward_solve(b));
}

Eigen::MatrixXd solve(const CholeskyFactor& factor, const Eigen::MatrixXd& b) {
  check_size(factor.size(), static_cast<std::size_t>(b.rows()), "solve");
  Eigen::MatrixXd x(b.rows(), b.cols());
  for (Eigen::Index c = 0; c < b.cols(); ++c) x.col(c) = factor.backward_solve(factor.forward_solve(b.col(c)));
  return x;
}

}  // namespace bayesopt::linalg
