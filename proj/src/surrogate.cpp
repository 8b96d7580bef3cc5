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

#include "bayesopt/surrogate.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "bayesopt/errors.hpp"

namespace bayesopt::surrogate {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double retry_nugget(double nugget) { return std::max(10.0 * nugget, kMinRetryNugget); }

Eigen::MatrixXd symmetrized(const Eigen::MatrixXd& a) {
  return 0.5 * (a + a.transpose());
}

linalg::CholeskyFactor factorize_features(const Eigen::MatrixXd& a) {
  try {
    return linalg::factorize(symmetrized(a));
  } catch (const NotPositiveDefinite&) {
    throw InsufficientData("trend features are not identifiable from the data");
  }
}

}  // namespace

SurrogateKind parse_surrogate(std::string_view name) {
  if (name == "S_GAUSSIAN_PROCESS") return SurrogateKind::GaussianFixed;
  if (name == "S_GAUSSIAN_PROCESS_NORMAL") return SurrogateKind::GaussianNIG;
  if (name == "S_STUDENT_T_PROCESS_JEFFREYS") return SurrogateKind::StudentTJeffreys;
  throw InvalidParams("unknown surrogate '" + std::string(name) + "'");
}

std::string to_string(SurrogateKind kind) {
  switch (kind) {
    case SurrogateKind::GaussianFixed:
      return "S_GAUSSIAN_PROCESS";
    case SurrogateKind::GaussianNIG:
      return "S_GAUSSIAN_PROCESS_NORMAL";
    case SurrogateKind::StudentTJeffreys:
      return "S_STUDENT_T_PROCESS_JEFFREYS";
  }
  return {};
}

NIGPrior NIGPrior::flat(std::size_t m, double eps) {
  const auto mm = static_cast<Eigen::Index>(m);
  NIGPrior prior;
  prior.w0 = Eigen::VectorXd::Zero(mm);
  prior.W = Eigen::MatrixXd::Identity(mm, mm) / eps;
  prior.alpha = eps;
  prior.beta = eps;
  return prior;
}

NIGPrior NIGPrior::scaled_inv_chi2(Eigen::VectorXd w0, Eigen::MatrixXd W, double nu,
                                   double s0_sq) {
  NIGPrior prior;
  prior.w0 = std::move(w0);
  prior.W = std::move(W);
  prior.alpha = 0.5 * nu;
  prior.beta = 0.5 * nu * s0_sq;
  return prior;
}

Dataset::Dataset(Points x, std::vector<double> y) {
  if (x.size() != y.size()) {
    throw DimensionMismatch("dataset has " + std::to_string(x.size()) + " points and " +
                            std::to_string(y.size()) + " responses");
  }
  for (std::size_t i = 0; i < x.size(); ++i) add(std::move(x[i]), y[i]);
}

void Dataset::add(Point x, double y) {
  if (!x_.empty() && x.size() != x_.front().size()) {
    throw DimensionMismatch("dataset point has dimension " + std::to_string(x.size()) +
                            ", expected " + std::to_string(x_.front().size()));
  }
  x_.push_back(std::move(x));
  y_.push_back(y);
  if (y < y_[incumbent_]) incumbent_ = y_.size() - 1;
}

void PosteriorState::estimate() {
  const auto n = static_cast<Eigen::Index>(data_.size());
  const Eigen::Index m = phi_.rows();
  const auto y = data_.y_vector();
  const auto kind = config_.kind;

  if (kind == SurrogateKind::StudentTJeffreys && n <= m) {
    throw InsufficientData("Student-t/Jeffreys needs more observations (" +
                           std::to_string(n) + ") than trend features (" +
                           std::to_string(m) + ")");
  }
  if (n == 0) throw InsufficientData("no observations");

  const Eigen::VectorXd kinv_y = linalg::solve(factor_, Eigen::VectorXd(y));
  y_kinv_y_ = y.dot(kinv_y);
  kinv_phit_ = m > 0 ? linalg::solve(factor_, Eigen::MatrixXd(phi_.transpose()))
                     : Eigen::MatrixXd(n, 0);
  const Eigen::MatrixXd a = phi_ * kinv_phit_;
  const Eigen::VectorXd phi_kinv_y = phi_ * kinv_y;

  if (kind == SurrogateKind::GaussianNIG) {
    const NIGPrior prior = config_.prior ? *config_.prior : NIGPrior::flat(m);
    if (prior.w0.size() != m || prior.W.rows() != m || prior.W.cols() != m) {
      throw DimensionMismatch("NIG prior does not match the " + std::to_string(m) +
                              " trend features");
    }
    if (!(prior.alpha > 0.0) || !(prior.beta > 0.0)) {
      throw InvalidParams("NIG prior needs alpha > 0 and beta > 0");
    }
    Eigen::MatrixXd w_inv(m, m);
    if (m > 0) {
      const auto w_factor = linalg::factorize(symmetrized(prior.W));
      w_inv = linalg::solve(w_factor, Eigen::MatrixXd(Eigen::MatrixXd::Identity(m, m)));
    }
    const Eigen::MatrixXd wn_inv = symmetrized(w_inv + a);
    gram_w_ = m > 0 ? factorize_features(wn_inv) : linalg::CholeskyFactor();
    const Eigen::VectorXd w0_term = w_inv * prior.w0;
    w_hat_ = m > 0 ? linalg::solve(gram_w_, Eigen::VectorXd(w0_term + phi_kinv_y))
                   : Eigen::VectorXd(0);
    alpha_n_ = prior.alpha + 0.5 * static_cast<double>(n);
    beta_n_ = prior.beta + 0.5 * (y_kinv_y_ + prior.w0.dot(w0_term) -
                                  w_hat_.dot(wn_inv * w_hat_));
    beta_n_ = std::max(beta_n_, prior.beta);
    sigma2_hat_ = beta_n_ / alpha_n_;
    dof_ = 2.0 * alpha_n_;
  } else {
    gram_w_ = m > 0 ? factorize_features(a) : linalg::CholeskyFactor();
    w_hat_ = m > 0 ? linalg::solve(gram_w_, phi_kinv_y) : Eigen::VectorXd(0);
  }

  kinv_y_resid_ = m > 0 ? Eigen::VectorXd(kinv_y - kinv_phit_ * w_hat_) : kinv_y;
  residual_quadratic_ = std::max(0.0, (y - phi_.transpose() * w_hat_).dot(kinv_y_resid_));

  switch (kind) {
    case SurrogateKind::GaussianFixed:
      sigma2_hat_ = config_.sigma_s2;
      dof_ = kInf;
      break;
    case SurrogateKind::StudentTJeffreys:
      dof_ = static_cast<double>(n - m);
      sigma2_hat_ = std::max(residual_quadratic_ / dof_, kVarianceFloor);
      break;
    case SurrogateKind::GaussianNIG:
      break;
  }
}

PosteriorState fit(const SurrogateConfig& config, const Dataset& data, NuggetPolicy policy) {
  if (config.sigma_n2 < 0.0) throw InvalidParams("sigma_n2 must be non-negative");
  PosteriorState state;
  state.config_ = config;
  state.data_ = data;
  state.nugget_ = config.sigma_n2;
  const Eigen::MatrixXd k = kernels::gram(config.kernel, data.x(), 0.0);
  const auto factor_with = [&](double nugget) {
    Eigen::MatrixXd kn = k;
    kn.diagonal().array() += nugget;
    return linalg::factorize(kn);
  };
  try {
    state.factor_ = factor_with(state.nugget_);
  } catch (const NotPositiveDefinite&) {
    if (policy == NuggetPolicy::NoRetry) throw;
    state.nugget_ = retry_nugget(state.nugget_);
    state.factor_ = factor_with(state.nugget_);
  }
  state.phi_ = means::feature_matrix(config.mean, data.x());
  state.estimate();
  return state;
}

PosteriorState update(PosteriorState&& state, const Point& x_new, double y_new) {
  const Eigen::VectorXd k_star = kernels::cross_vector(state.config_.kernel, state.data_.x(), x_new);
  std::vector<double> row(k_star.data(), k_star.data() + k_star.size());
  row.push_back(kernels::kernel_eval(state.config_.kernel, x_new, x_new) + state.nugget_);

  state.data_.add(x_new, y_new);
  try {
    state.factor_ = linalg::add_row(std::move(state.factor_), row);
  } catch (const NotPositiveDefinite&) {
    SurrogateConfig bumped = state.config_;
    bumped.sigma_n2 = retry_nugget(state.nugget_);
    PosteriorState refit = fit(bumped, state.data_, NuggetPolicy::NoRetry);
    refit.config_.sigma_n2 = state.config_.sigma_n2;
    return refit;
  }
  const Eigen::Index n = state.phi_.cols();
  state.phi_.conservativeResize(Eigen::NoChange, n + 1);
  state.phi_.col(n) = means::features(state.config_.mean, x_new);
  state.estimate();
  return std::move(state);
}

PosteriorState update(const PosteriorState& state, const Point& x_new, double y_new) {
  return update(PosteriorState(state), x_new, y_new);
}

Prediction predict(const PosteriorState& state, const Point& query) {
  const auto& cfg = state.config();
  const Eigen::VectorXd k_star = kernels::cross_vector(cfg.kernel, state.data().x(), query);
  const Eigen::VectorXd phi_q = means::features(cfg.mean, query);

  Prediction pred;
  pred.dof = state.dof();
  pred.mean = phi_q.dot(state.w_hat()) + k_star.dot(state.kinv_y_resid());

  const Eigen::VectorXd v = state.factor().forward_solve(k_star);
  double c = kernels::kernel_eval(cfg.kernel, query, query) + state.nugget() - v.squaredNorm();
  if (phi_q.size() > 0) {
    const Eigen::VectorXd r = phi_q - state.kinv_phit().transpose() * k_star;
    c += state.gram_w().forward_solve(r).squaredNorm();
  }
  pred.variance = std::max(state.sigma2_hat() * c, kVarianceFloor);
  return pred;
}

double sample_marginal(const PosteriorState& state, const Point& query, Rng& rng) {
  const Prediction pred = predict(state, query);
  const double scale = std::sqrt(pred.variance);
  if (pred.gaussian()) {
    std::normal_distribution<double> normal(0.0, 1.0);
    return pred.mean + scale * normal(rng);
  }
  std::student_t_distribution<double> student(pred.dof);
  return pred.mean + scale * student(rng);
}

double log_density(const Prediction& pred, double y) {
  const double var = pred.variance;
  const double r2 = (y - pred.mean) * (y - pred.mean) / var;
  if (pred.gaussian()) return -0.5 * (std::log(2.0 * M_PI * var) + r2);
  const double nu = pred.dof;
  return std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu) -
         0.5 * std::log(nu * M_PI * var) - 0.5 * (nu + 1.0) * std::log1p(r2 / nu);
}

}  // namespace bayesopt::surrogate
