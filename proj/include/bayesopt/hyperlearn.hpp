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

#ifndef BAYESOPT_HYPERLEARN_HPP
#define BAYESOPT_HYPERLEARN_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bayesopt/inneropt.hpp"
#include "bayesopt/surrogate.hpp"

namespace bayesopt::hyperlearn {

enum class LearnMethod { ML, PosteriorML, LOO, MAP };

LearnMethod parse_learn_type(std::string_view name);
std::string to_string(LearnMethod method);

inline constexpr double kDefaultLogLower = -4.605170185988091;  // log 0.01
inline constexpr double kDefaultLogUpper = 4.605170185988091;   // log 100
inline constexpr std::size_t kDefaultUpdateEvery = 25;

/// Kernel hyperparameter learning setup. All vectors live in log-theta space.
/// update_every == 0 freezes theta after the first learn.
struct LearnConfig {
  LearnMethod method = LearnMethod::PosteriorML;
  std::size_t update_every = kDefaultUpdateEvery;
  std::vector<double> log_prior_mean;
  std::vector<double> log_prior_std;
  std::vector<double> log_lower;
  std::vector<double> log_upper;
};

/// Scores are negative log objectives (lower is better) of the natural-space
/// hyperparameters theta; base supplies the kernel structure, mean, nugget and
/// model kind. Factorization failures score +inf.

/// Profiled Gaussian likelihood: (n - m)/2 log s2(theta) + 1/2 log|K(theta)|
/// with s2 the degrees-of-freedom corrected GLS residual variance.
double score_ml(std::span<const double> theta, const surrogate::Dataset& data,
                const surrogate::SurrogateConfig& base);

/// Marginal likelihood with w (and sigma_s^2 unless fixed) integrated out
/// under the prior of base.kind.
double score_posterior_ml(std::span<const double> theta, const surrogate::Dataset& data,
                          const surrogate::SurrogateConfig& base);

/// Negative mean leave-one-out predictive log density, refitting n times.
double score_loo(std::span<const double> theta, const surrogate::Dataset& data,
                 const surrogate::SurrogateConfig& base);

/// score_posterior_ml plus a log-normal penalty on theta.
double score_map(std::span<const double> theta, const surrogate::Dataset& data,
                 const surrogate::SurrogateConfig& base, std::span<const double> log_prior_mean,
                 std::span<const double> log_prior_std);

double score(const LearnConfig& config, std::span<const double> theta,
             const surrogate::Dataset& data, const surrogate::SurrogateConfig& base);

/// Minimizes the configured score over the log-theta box and returns theta in
/// natural space. Never throws for a bad landscape: when every candidate
/// scores +inf the current kernel hyperparameters (clamped to the box) are
/// returned.
std::vector<double> learn(const LearnConfig& config, const surrogate::Dataset& data,
                          const surrogate::SurrogateConfig& base,
                          const inneropt::InnerOptimizer& inner);

}  // namespace bayesopt::hyperlearn

#endif  // BAYESOPT_HYPERLEARN_HPP
