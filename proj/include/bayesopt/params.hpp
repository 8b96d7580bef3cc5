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

#ifndef BAYESOPT_PARAMS_HPP
#define BAYESOPT_PARAMS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace bayesopt {

struct KernelParams {
  std::string name = "kMaternISO5";
  /// Initial hyperparameters (natural space), also the median of the
  /// log-normal hyperprior. Empty means 1.0 for every hyperparameter.
  std::vector<double> hp_mean;
  /// Standard deviation of log theta. Empty means 10 for every hyperparameter.
  std::vector<double> hp_std;
  /// 0 means "infer from name".
  std::size_t n_hp = 0;
};

struct MeanParams {
  std::string name = "mConst";
};

struct BoundsParams {
  std::vector<double> lower;
  std::vector<double> upper;
};

/// Run configuration. Field names double as the configuration-file keys.
struct BoptParams {
  std::size_t n_iterations = 200;
  /// 0 means max(2d + 2, m + 2).
  std::size_t n_init = 0;
  KernelParams kernel;
  MeanParams mean;
  std::string surr_name = "S_GAUSSIAN_PROCESS";
  std::string crit_name = "cEI";
  std::vector<double> crit_params = {1.0};
  std::size_t n_crit_params = 1;
  std::string l_type = "L_POSTERIOR_ML";
  std::size_t l_update_every = 25;
  double sigma_n2 = 1e-4;
  double sigma_s2 = 1.0;
  std::uint64_t seed = 0;
  BoundsParams bounds;
  int verbose_level = 0;
};

inline constexpr double kDefaultHpMean = 1.0;
inline constexpr double kDefaultHpStd = 10.0;

BoptParams initialize_parameters_to_default();

/// Reads a key tree with the BoptParams field names. Missing keys keep their
/// defaults; when crit_params is given without n_crit_params the count is
/// taken from the list. Unknown keys and wrongly typed values throw
/// InvalidParams.
BoptParams params_from_json(const nlohmann::json& j);

nlohmann::json params_to_json(const BoptParams& params);

}  // namespace bayesopt

#endif  // BAYESOPT_PARAMS_HPP
