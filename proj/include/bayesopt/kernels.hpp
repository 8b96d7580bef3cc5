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

#ifndef BAYESOPT_KERNELS_HPP
#define BAYESOPT_KERNELS_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bayesopt/types.hpp"

namespace bayesopt::kernels {

enum class KernelKind { SEIso, SEArd, MaternIso1, MaternIso3, MaternIso5, Const, Sum, Prod };

/// Covariance expression tree.
///
/// Leaves own their hyperparameters in natural (positive) space: one
/// length-scale for the isotropic kernels, one per input dimension for SEArd,
/// and the constant value c for Const (which contributes c^2). A freshly parsed
/// spec has empty theta vectors; bind() fills them.
struct KernelSpec {
  KernelKind kind = KernelKind::SEIso;
  std::vector<KernelSpec> children;
  std::vector<double> theta;
  /// Input dimension this spec was bound for; 0 when unbound.
  std::size_t dim = 0;
};

/// Parses kSEISO, kSEARD, kMaternISO1/3/5, kConst, kSum(...), kProd(...).
/// Whitespace between tokens is ignored. Throws ParseError.
KernelSpec parse_kernel(std::string_view expr);

/// Canonical string form, parse_kernel(to_string(k)) reproduces the tree.
std::string to_string(const KernelSpec& spec);

/// Number of hyperparameters of the tree for inputs of dimension dim.
std::size_t n_hyperparameters(const KernelSpec& spec, std::size_t dim);

/// Returns a copy of spec with theta assigned in tree (pre-order) order.
/// Throws InvalidParams on a count mismatch or a non-positive entry.
KernelSpec bind(const KernelSpec& spec, std::span<const double> theta, std::size_t dim);

/// Concatenated hyperparameters in the order bind() consumes them.
std::vector<double> hyperparameters(const KernelSpec& spec);

double kernel_eval(const KernelSpec& spec, const Point& x1, const Point& x2);

/// K_ij = k(x_i, x_j) + nugget * [i == j].
Eigen::MatrixXd gram(const KernelSpec& spec, std::span<const Point> points, double nugget);

/// Entry i is k(x_i, query).
Eigen::VectorXd cross_vector(const KernelSpec& spec, std::span<const Point> points,
                             const Point& query);

}  // namespace bayesopt::kernels

#endif  // BAYESOPT_KERNELS_HPP
