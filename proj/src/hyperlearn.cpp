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

#include "bayesopt/hyperlearn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "bayesopt/errors.hpp"

namespace bayesopt::hyperlearn {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::optional<surrogate::PosteriorState> try_fit(std::span<const double> theta,
                                                 const surrogate::Dataset& data,
                                                 surrogate::SurrogateConfig config) {
  try {
    config.kernel = kernels::bind(config.kernel, theta, data.dim());
    return surrogate::fit(config, data, surrogate::NuggetPolicy::NoRetry);
  } catch (const NotPositiveDefinite&) {
    return std::nullopt;
  } catch (const InsufficientData&) {
    return std::nullopt;
  } catch (const InvalidParams&) {
    return std::nullopt;
  }
}

double finite_or_inf(double v) { return std::isfinite(v) ? v : kInf; }

}  // namespace

LearnMethod parse_learn_type(std::string_view name) {
  if (name == "L_ML") return LearnMethod::ML;
  if (name == "L_POSTERIOR_ML") return LearnMethod::PosteriorML;
  if (name == "L_LOO") return LearnMethod::LOO;
  if (name == "L_MAP") return LearnMethod::MAP;
  throw InvalidParams("unknown learning type '" + std::string(name) + "'");
}

std::string to_string(LearnMethod method) {
  switch (method) {
    case LearnMethod::ML:
      return "L_ML";
    case LearnMethod::PosteriorML:
      return "L_POSTERIOR_ML";
    case LearnMethod::LOO:
      return "L_LOO";
    case LearnMethod::MAP:
      return "L_MAP";
  }
  return {};
}

double score_ml(std::span<const double> theta, const surrogate::Dataset& data,
                const surrogate::SurrogateConfig& base) {
  surrogate::SurrogateConfig config = base;
  config.kind = surrogate::SurrogateKind::StudentTJeffreys;
  const auto state = try_fit(theta, data, config);
  if (!state) return kInf;
  const double dof = state->dof();
  return finite_or_inf(0.5 * dof * std::log(state->sigma2_hat()) +
                       0.5 * state->log_det_correlation());
}

double score_posterior_ml(std::span<const double> theta, const surrogate::Dataset& data,
                          const surrogate::SurrogateConfig& base) {
  const auto state = try_fit(theta, data, base);
  if (!state) return kInf;
  const auto n = static_cast<double>(data.size());
  const auto m = static_cast<double>(state->n_features());
  const double log_det_k = state->log_det_correlation();
  const double log_det_a = state->log_det_gram_w();

  switch (base.kind) {
    case surrogate::SurrogateKind::StudentTJeffreys:
      return finite_or_inf(0.5 * (n - m) * std::log(state->sigma2_hat()) + 0.5 * log_det_k +
                           0.5 * log_det_a);
    case surrogate::SurrogateKind::GaussianFixed: {
      const double s2 = base.sigma_s2;
      return finite_or_inf(0.5 * (n - m) * std::log(2.0 * std::numbers::pi * s2) +
                           0.5 * log_det_k + 0.5 * log_det_a +
                           0.5 * state->residual_quadratic() / s2);
    }
    case surrogate::SurrogateKind::GaussianNIG: {
      const auto prior = base.prior ? *base.prior
                                    : surrogate::NIGPrior::flat(state->n_features());
      double log_det_w = 0.0;
      if (prior.W.size() > 0) log_det_w = linalg::factorize(prior.W).log_determinant();
      const double alpha = prior.alpha;
      const double beta = prior.beta;
      const double alpha_n = state->alpha_n();
      const double beta_n = state->beta_n();
      return finite_or_inf(0.5 * n * std::log(2.0 * std::numbers::pi) + 0.5 * log_det_k +
                           0.5 * log_det_w + 0.5 * log_det_a + alpha_n * std::log(beta_n) -
                           alpha * std::log(beta) - std::lgamma(alpha_n) + std::lgamma(alpha));
    }
  }
  return kInf;
}

double score_loo(std::span<const double> theta, const surrogate::Dataset& data,
                 const surrogate::SurrogateConfig& base) {
  const std::size_t n = data.size();
  if (n < 2) return kInf;
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    surrogate::Dataset fold;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) fold.add(data.x()[j], data.y()[j]);
    }
    const auto state = try_fit(theta, fold, base);
    if (!state) return kInf;
    total += surrogate::log_density(surrogate::predict(*state, data.x()[i]), data.y()[i]);
  }
  return finite_or_inf(-total / static_cast<double>(n));
}

double score_map(std::span<const double> theta, const surrogate::Dataset& data,
                 const surrogate::SurrogateConfig& base, std::span<const double> log_prior_mean,
                 std::span<const double> log_prior_std) {
  if (log_prior_mean.size() != theta.size() || log_prior_std.size() != theta.size()) {
    throw InvalidParams("MAP prior must have one mean and std per hyperparameter");
  }
  double penalty = 0.0;
  for (std::size_t j = 0; j < theta.size(); ++j) {
    if (!(log_prior_std[j] > 0.0)) throw InvalidParams("MAP prior std must be positive");
    if (std::isinf(log_prior_std[j])) continue;
    const double u = (std::log(theta[j]) - log_prior_mean[j]) / log_prior_std[j];
    penalty += 0.5 * u * u;
  }
  return score_posterior_ml(theta, data, base) + penalty;
}

double score(const LearnConfig& config, std::span<const double> theta,
             const surrogate::Dataset& data, const surrogate::SurrogateConfig& base) {
  switch (config.method) {
    case LearnMethod::ML:
      return score_ml(theta, data, base);
    case LearnMethod::PosteriorML:
      return score_posterior_ml(theta, data, base);
    case LearnMethod::LOO:
      return score_loo(theta, data, base);
    case LearnMethod::MAP:
      return score_map(theta, data, base, config.log_prior_mean, config.log_prior_std);
  }
  return kInf;
}

std::vector<double> learn(const LearnConfig& config, const surrogate::Dataset& data,
                          const surrogate::SurrogateConfig& base,
                          const inneropt::InnerOptimizer& inner) {
  const std::size_t n_theta = kernels::n_hyperparameters(base.kernel, data.dim());
  std::vector<double> lower = config.log_lower;
  std::vector<double> upper = config.log_upper;
  if (lower.empty()) lower.assign(n_theta, kDefaultLogLower);
  if (upper.empty()) upper.assign(n_theta, kDefaultLogUpper);
  if (lower.size() != n_theta || upper.size() != n_theta) {
    throw InvalidParams("learning bounds must have one entry per hyperparameter");
  }

  inneropt::Box box{Eigen::Map<const Eigen::VectorXd>(lower.data(), static_cast<Eigen::Index>(n_theta)),
                    Eigen::Map<const Eigen::VectorXd>(upper.data(), static_cast<Eigen::Index>(n_theta))};

  std::vector<double> theta(n_theta);
  const auto objective = [&](const Point& log_theta) {
    for (std::size_t j = 0; j < n_theta; ++j) {
      theta[j] = std::exp(log_theta(static_cast<Eigen::Index>(j)));
    }
    return -score(config, theta, data, base);
  };

  Point best;
  try {
    best = inneropt::maximize(objective, box, inner).point;
  } catch (const NoFeasiblePoint&) {
    std::vector<double> current = kernels::hyperparameters(base.kernel);
    if (current.size() != n_theta) current.assign(n_theta, 1.0);
    best = Point(static_cast<Eigen::Index>(n_theta));
    for (std::size_t j = 0; j < n_theta; ++j) {
      best(static_cast<Eigen::Index>(j)) = std::clamp(std::log(current[j]), lower[j], upper[j]);
    }
  }
  for (std::size_t j = 0; j < n_theta; ++j) {
    theta[j] = std::exp(best(static_cast<Eigen::Index>(j)));
  }
  return theta;
}

}  // namespace bayesopt::hyperlearn
