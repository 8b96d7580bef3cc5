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

#ifndef BAYESOPT_MEANS_HPP
#define BAYESOPT_MEANS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "bayesopt/types.hpp"

namespace bayesopt::means {

enum class MeanKind { Zero, Const, Linear, LinearConst, Radial };

/// Parametric trend phi(x) of the surrogate. Radial places Gaussian bumps of
/// unit width at fixed centers chosen by a Latin hypercube with a fixed seed
/// when the spec is bound to a dimension.
struct MeanSpec {
  MeanKind kind = MeanKind::Const;
  std::size_t radial_count = 0;
  std::size_t dim = 0;
  Points centers;
};

inline constexpr double kRadialWidth = 1.0;
inline constexpr std::uint64_t kRadialCenterSeed = 0x5eed;

/// mZero, mConst, mLinear, mLinearConst or mRadial(k). Throws ParseError.
MeanSpec parse_mean(std::string_view expr);

std::string to_string(const MeanSpec& spec);

/// Number of features m for inputs of dimension dim.
std::size_t n_features(const MeanSpec& spec, std::size_t dim);

/// Copy of spec bound to dimension dim (places radial centers).
MeanSpec bind(const MeanSpec& spec, std::size_t dim);

/// Feature vector of length n_features(spec, spec.dim).
Eigen::VectorXd features(const MeanSpec& spec, const Point& x);

/// m x n feature matrix, column i is features(x_i).
Eigen::MatrixXd feature_matrix(const MeanSpec& spec, std::span<const Point> points);

}  // namespace bayesopt::means

#endif  // BAYESOPT_MEANS_HPP
