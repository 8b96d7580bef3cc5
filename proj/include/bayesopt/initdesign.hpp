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

#ifndef BAYESOPT_INITDESIGN_HPP
#define BAYESOPT_INITDESIGN_HPP

#include <cstddef>

#include "bayesopt/types.hpp"

namespace bayesopt::initdesign {

/// Latin hypercube sample of n points in [0, 1)^d: along every dimension each
/// of the n bins [i/n, (i+1)/n) holds exactly one point, with a uniform offset
/// inside the bin and an independent permutation per dimension.
Points latin_hypercube(std::size_t n, std::size_t d, Rng& rng);

/// n i.i.d. uniform points in [0, 1)^d.
Points uniform(std::size_t n, std::size_t d, Rng& rng);

/// Default initial design size: max(2d + 2, n_features + 2).
std::size_t default_size(std::size_t d, std::size_t n_features);

}  // namespace bayesopt::initdesign

#endif  // BAYESOPT_INITDESIGN_HPP
