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

#ifndef BAYESOPT_TYPES_HPP
#define BAYESOPT_TYPES_HPP

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Core>

namespace bayesopt {

using Point = Eigen::VectorXd;
using Points = std::vector<Point>;
using Rng = std::mt19937_64;

}  // namespace bayesopt

#endif  // BAYESOPT_TYPES_HPP
