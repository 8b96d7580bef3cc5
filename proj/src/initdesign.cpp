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

#include "bayesopt/initdesign.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "bayesopt/errors.hpp"

namespace bayesopt::initdesign {

Points latin_hypercube(std::size_t n, std::size_t d, Rng& rng) {
  if (n == 0) throw InvalidParams("latin_hypercube needs n >= 1");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Points points(n, Point::Zero(static_cast<Eigen::Index>(d)));
  std::vector<std::size_t> perm(n);
  const double width = 1.0 / static_cast<double>(n);
  for (std::size_t j = 0; j < d; ++j) {
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t i = 0; i < n; ++i) {
      double v = (static_cast<double>(perm[i]) + unit(rng)) * width;
      // Rounding can land exactly on the upper bin edge.
      v = std::min(v, std::nextafter((static_cast<double>(perm[i]) + 1.0) * width, 0.0));
      points[i](static_cast<Eigen::Index>(j)) = v;
    }
  }
  return points;
}

Points uniform(std::size_t n, std::size_t d, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Points points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Point p(static_cast<Eigen::Index>(d));
    for (auto& v : p) v = unit(rng);
    points.push_back(std::move(p));
  }
  return points;
}

std::size_t default_size(std::size_t d, std::size_t n_features) {
  return std::max(2 * d + 2, n_features + 2);
}

}  // namespace bayesopt::initdesign
