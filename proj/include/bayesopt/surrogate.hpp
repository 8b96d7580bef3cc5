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

#ifndef BAYESOPT_SURROGATE_HPP
#define BAYESOPT_SURROGATE_HPP

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bayesopt/kernels.hpp"
#include "bayesopt/linalg.hpp"
#include "bayesopt/means.hpp"
#include "bayesopt/types.hpp"

namespace bayesopt::surrogate {

/// Prior treatment of the trend weights w and the signal variance sigma_s^2.
enum class SurrogateKind {
  GaussianFixed,     // S_GAUSSIAN_PROCESS: GLS weights, sigma_s^2 from configuration
  GaussianNIG,       // S_GAUSSIAN_PROCESS_NORMAL: normal inverse-gamma prior
  StudentTJeffreys,  // S_STUDENT_T_PROCESS_JEFFREYS: p(w, sigma_s^2) ~ 1 / sigma_s^2
};

SurrogateKind parse_surrogate(std::string_view name);
std::string to_string(SurrogateKind kind);

/// Normal inverse-gamma prior: w | s2 ~ N(w0, s2 W), s2 ~ IG(alpha, beta).
struct NIGPrior {
  Eigen::VectorXd w0;
  Eigen::MatrixXd W;
  double alpha = 1.0;
  double beta = 1.0;

  /// Vague prior: W^-1 = eps I, alpha = beta = eps.
  static NIGPrior flat(std::size_t m, double eps = 1e-10);
  /// Normal scaled-inverse-chi-squared prior with (nu, s0^2), expressed in the
  /// equivalent inverse-gamma parametrization alpha = nu / 2, beta = nu s0^2 / 2.
  static NIGPrior scaled_inv_chi2(Eigen::VectorXd w0, Eigen::MatrixXd W, double nu,
                                  double s0_sq);
};

/// Everything that defines the model apart from the data.
struct SurrogateConfig {
  SurrogateKind kind = SurrogateKind::GaussianFixed;
  kernels::KernelSpec kernel;  // bound
  means::MeanSpec mean;        // bound
  double sigma_n2 = 1e-4;
  double sigma_s2 = 1.0;  // GaussianFixed only
  std::optional<NIGPrior> prior;  // GaussianNIG only; flat when absent
};

/// Observations in unit-box coordinates plus the running incumbent (minimum).
class Dataset {
 public:
  Dataset() = default;
  Dataset(Points x, std::vector<double> y);

  void add(Point x, double y);

  std::size_t size() const { return y_.size(); }
  bool empty() const { return y_.empty(); }
  std::size_t dim() const { return x_.empty() ? 0 : static_cast<std::size_t>(x_[0].size()); }
  const Points& x() const { return x_; }
  const std::vector<double>& y() const { return y_; }
  Eigen::Map<const Eigen::VectorXd> y_vector() const {
    return {y_.data(), static_cast<Eigen::Index>(y_.size())};
  }
  std::size_t incumbent_index() const { return incumbent_; }
  const Point& best_x() const { return x_[incumbent_]; }
  double best_y() const { return y_[incumbent_]; }

 private:
  Points x_;
  std::vector<double> y_;
  std::size_t incumbent_ = 0;
};

/// Predictive marginal at a query. dof is +inf for a Gaussian marginal,
/// otherwise a Student-t with dof degrees of freedom and squared scale
/// `variance`.
struct Prediction {
  double mean = 0.0;
  double variance = 0.0;
  double dof = std::numeric_limits<double>::infinity();

  bool gaussian() const { return dof == std::numeric_limits<double>::infinity(); }
};

inline constexpr double kVarianceFloor = 1e-12;
/// Nugget used by the automatic retry when the configured nugget is zero.
inline constexpr double kMinRetryNugget = 1e-10;

enum class NuggetPolicy { RetryOnce, NoRetry };

/// Fitted posterior. Immutable; every query-independent product is cached so
/// predict() costs one triangular solve plus O(n m).
class PosteriorState {
 public:
  const SurrogateConfig& config() const { return config_; }
  const Dataset& data() const { return data_; }
  const linalg::CholeskyFactor& factor() const { return factor_; }
  const Eigen::MatrixXd& phi() const { return phi_; }
  const Eigen::VectorXd& w_hat() const { return w_hat_; }
  double sigma2_hat() const { return sigma2_hat_; }
  double dof() const { return dof_; }
  double alpha_n() const { return alpha_n_; }
  double beta_n() const { return beta_n_; }
  /// Nugget actually on the diagonal (after any retry).
  double nugget() const { return nugget_; }
  const Eigen::VectorXd& kinv_y_resid() const { return kinv_y_resid_; }
  const Eigen::MatrixXd& kinv_phit() const { return kinv_phit_; }
  /// Factor of Phi K^-1 Phi^T, or of W^-1 + Phi K^-1 Phi^T under the NIG prior.
  const linalg::CholeskyFactor& gram_w() const { return gram_w_; }

  /// (y - Phi^T w)^T K^-1 (y - Phi^T w) at the GLS (or posterior) weights.
  double residual_quadratic() const { return residual_quadratic_; }
  double y_kinv_y() const { return y_kinv_y_; }
  double log_det_correlation() const { return factor_.log_determinant(); }
  double log_det_gram_w() const { return gram_w_.log_determinant(); }
  std::size_t n_features() const { return static_cast<std::size_t>(phi_.rows()); }

 private:
  friend PosteriorState fit(const SurrogateConfig&, const Dataset&, NuggetPolicy);
  friend PosteriorState update(const PosteriorState&, const Point&, double);
  friend PosteriorState update(PosteriorState&&, const Point&, double);

  // Recomputes the trend and variance estimates from factor_, phi_ and data_.
  void estimate();

  SurrogateConfig config_;
  Dataset data_;
  linalg::CholeskyFactor factor_;
  double nugget_ = 0.0;
  Eigen::MatrixXd phi_;
  Eigen::VectorXd w_hat_;
  double sigma2_hat_ = 1.0;
  double dof_ = std::numeric_limits<double>::infinity();
  double alpha_n_ = 0.0;
  double beta_n_ = 0.0;
  Eigen::VectorXd kinv_y_resid_;
  Eigen::MatrixXd kinv_phit_;
  linalg::CholeskyFactor gram_w_;
  double residual_quadratic_ = 0.0;
  double y_kinv_y_ = 0.0;
};

/// Fits the model to data. Throws InsufficientData when the trend weights are
/// not identifiable (n <= m for Jeffreys, rank-deficient features) and
/// NotPositiveDefinite when the correlation matrix cannot be factorized, after
/// one retry with a tenfold nugget unless policy is NoRetry.
PosteriorState fit(const SurrogateConfig& config, const Dataset& data,
                   NuggetPolicy policy = NuggetPolicy::RetryOnce);

/// Adds one observation. Extends the correlation factor by one row and
/// recomputes the weight and variance estimates from it; equivalent to fit()
/// on the extended data. Falls back to a full refit with a tenfold nugget when
/// the new pivot is not positive.
PosteriorState update(const PosteriorState& state, const Point& x_new, double y_new);
PosteriorState update(PosteriorState&& state, const Point& x_new, double y_new);

Prediction predict(const PosteriorState& state, const Point& query);

/// One draw from the predictive marginal at query.
double sample_marginal(const PosteriorState& state, const Point& query, Rng& rng);

/// Log density of y under a predictive marginal.
double log_density(const Prediction& pred, double y);

}  // namespace bayesopt::surrogate

#endif  // BAYESOPT_SURROGATE_HPP
