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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "bayesopt/errors.hpp"
#include "bayesopt/hyperlearn.hpp"
#include "oracles.hpp"

namespace bayesopt::hyperlearn {
namespace {

using surrogate::Dataset;
using surrogate::SurrogateConfig;
using surrogate::SurrogateKind;

constexpr double kInf = std::numeric_limits<double>::infinity();

SurrogateConfig base_config(SurrogateKind kind, const char* kernel, const char* mean,
                            std::size_t dim, double nugget = 1e-6) {
  SurrogateConfig c;
  c.kind = kind;
  const kernels::KernelSpec k = kernels::parse_kernel(kernel);
  c.kernel = kernels::bind(k, std::vector<double>(kernels::n_hyperparameters(k, dim), 1.0), dim);
  c.mean = means::bind(means::parse_mean(mean), dim);
  c.sigma_n2 = nugget;
  return c;
}

// Draws y ~ N(0, K) with an SEIso kernel of length-scale ell on n random points.
Dataset generative_data(std::size_t n, std::size_t d, double ell, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Points x = oracle::random_points(n, d, rng);
  const Eigen::MatrixXd K = oracle::gram(
      x, [ell](const Point& a, const Point& b) { return oracle::se_iso(a, b, ell); }, 1e-6);
  const Eigen::MatrixXd L = K.llt().matrixL();
  std::normal_distribution<double> g;
  Eigen::VectorXd z(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < z.size(); ++i) z(i) = g(rng);
  const Eigen::VectorXd y = L * z;
  return Dataset(x, std::vector<double>(y.data(), y.data() + y.size()));
}

double at(double ell, const Dataset& d, const SurrogateConfig& c,
          double (*score_fn)(std::span<const double>, const Dataset&, const SurrogateConfig&)) {
  const std::vector<double> theta = {ell};
  return score_fn(theta, d, c);
}

TEST(ParseLearnType, Names) {
  EXPECT_EQ(parse_learn_type("L_ML"), LearnMethod::ML);
  EXPECT_EQ(parse_learn_type("L_POSTERIOR_ML"), LearnMethod::PosteriorML);
  EXPECT_EQ(parse_learn_type("L_LOO"), LearnMethod::LOO);
  EXPECT_EQ(parse_learn_type("L_MAP"), LearnMethod::MAP);
  EXPECT_THROW(parse_learn_type("L_BOGUS"), InvalidParams);
  for (auto m : {LearnMethod::ML, LearnMethod::PosteriorML, LearnMethod::LOO, LearnMethod::MAP}) {
    EXPECT_EQ(parse_learn_type(to_string(m)), m);
  }
}

TEST(ScoreMl, TrueLengthScaleBeatsTenfoldErrors) {
  int wins = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Dataset d = generative_data(20, 2, 0.3, seed);
    const auto c = base_config(SurrogateKind::GaussianFixed, "kSEISO", "mZero", 2);
    const double s = at(0.3, d, c, score_ml);
    wins += (s < at(3.0, d, c, score_ml) && s < at(0.03, d, c, score_ml)) ? 1 : 0;
  }
  EXPECT_GE(wins, 9);
}

TEST(ScoreMl, SinglePointClosedForm) {
  const double y = 1.7;
  const double nugget = 0.05;
  const Dataset d({Point::Constant(2, 0.4)}, {y});
  const auto c = base_config(SurrogateKind::GaussianFixed, "kSEISO", "mZero", 2, nugget);
  const double s2 = y * y / (1.0 + nugget);
  EXPECT_NEAR(at(0.5, d, c, score_ml), 0.5 * std::log(1.0 + nugget) + 0.5 * std::log(s2), 1e-14);
}

TEST(ScoreMl, SingularGramScoresInfinity) {
  const Dataset d({Point::Constant(2, 0.4), Point::Constant(2, 0.4)}, {1.0, 2.0});
  const auto c = base_config(SurrogateKind::GaussianFixed, "kSEISO", "mZero", 2, 0.0);
  EXPECT_EQ(at(0.5, d, c, score_ml), kInf);
  EXPECT_EQ(at(0.5, d, c, score_posterior_ml), kInf);
}

TEST(ScorePosteriorMl, GenerativeRecovery) {
  for (auto kind : {SurrogateKind::GaussianFixed, SurrogateKind::StudentTJeffreys,
                    SurrogateKind::GaussianNIG}) {
    int wins = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Dataset d = generative_data(20, 2, 0.3, seed);
      const auto c = base_config(kind, "kSEISO", "mConst", 2);
      const double s = at(0.3, d, c, score_posterior_ml);
      wins += (s < at(3.0, d, c, score_posterior_ml) && s < at(0.03, d, c, score_posterior_ml))
                  ? 1
                  : 0;
    }
    EXPECT_GE(wins, 9) << surrogate::to_string(kind);
  }
}

TEST(ScorePosteriorMl, JeffreysMinusMlIsHalfLogDetA) {
  const Dataset d = generative_data(15, 2, 0.3, 3);
  const auto c = base_config(SurrogateKind::StudentTJeffreys, "kMaternISO5", "mLinearConst", 2);
  for (double ell : {0.1, 0.3, 0.8, 2.0}) {
    const std::vector<double> theta = {ell};
    auto bound = c;
    bound.kernel = kernels::bind(c.kernel, theta, 2);
    const Eigen::MatrixXd K = kernels::gram(bound.kernel, d.x(), c.sigma_n2);
    const Eigen::MatrixXd Phi = means::feature_matrix(c.mean, d.x());
    const double log_det_a =
        std::log((Phi * K.fullPivLu().inverse() * Phi.transpose()).determinant());
    EXPECT_NEAR(score_posterior_ml(theta, d, c) - score_ml(theta, d, c), 0.5 * log_det_a, 1e-8);
  }
}

TEST(ScorePosteriorMl, GaussianFixedMatchesDenseLogMarginal) {
  // With a flat prior on w integrated out, the negative log evidence is
  // (n-m)/2 log(2 pi s2) + 1/2 log|K| + 1/2 log|A| + S / (2 s2).
  const Dataset d = generative_data(12, 2, 0.3, 4);
  auto c = base_config(SurrogateKind::GaussianFixed, "kSEISO", "mConst", 2);
  c.sigma_s2 = 0.7;
  const std::vector<double> theta = {0.4};
  const Eigen::MatrixXd K = oracle::gram(
      d.x(), [](const Point& a, const Point& b) { return oracle::se_iso(a, b, 0.4); }, 1e-6);
  const Eigen::MatrixXd Kinv = K.inverse();
  const Eigen::MatrixXd Phi = Eigen::MatrixXd::Ones(1, 12);
  const double a = (Phi * Kinv * Phi.transpose())(0, 0);
  const Eigen::VectorXd y = d.y_vector();
  const double w = (Phi * Kinv * y)(0) / a;
  const Eigen::VectorXd r = y - Phi.transpose() * w;
  const double expected = 0.5 * 11.0 * std::log(2.0 * M_PI * 0.7) +
                          0.5 * std::log(K.determinant()) + 0.5 * std::log(a) +
                          0.5 * r.dot(Kinv * r) / 0.7;
  EXPECT_NEAR(score_posterior_ml(theta, d, c), expected, 1e-8);
}

double loo_oracle(const Dataset& d, double ell, double nugget, double s2) {
  const std::size_t n = d.size();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    Points x;
    std::vector<double> yv;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      x.push_back(d.x()[j]);
      yv.push_back(d.y()[j]);
    }
    const auto k = [ell](const Point& a, const Point& b) { return oracle::se_iso(a, b, ell); };
    const Eigen::MatrixXd K = oracle::gram(x, k, nugget);
    Eigen::VectorXd kstar(static_cast<Eigen::Index>(x.size()));
    for (std::size_t j = 0; j < x.size(); ++j) kstar(static_cast<Eigen::Index>(j)) = k(x[j], d.x()[i]);
    const Eigen::MatrixXd Phi = Eigen::MatrixXd::Ones(1, static_cast<Eigen::Index>(x.size()));
    const Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(yv.data(), static_cast<Eigen::Index>(yv.size()));
    const oracle::Prediction p = oracle::gp_predict(oracle::Model::Fixed, K, Phi, y, kstar,
                                                    1.0 + nugget, Eigen::VectorXd::Ones(1), s2);
    const double z = d.y()[i] - p.mean;
    total += -0.5 * std::log(2.0 * M_PI * p.variance) - 0.5 * z * z / p.variance;
  }
  return -total / static_cast<double>(n);
}

TEST(ScoreLoo, MatchesIndependentRefitLoop) {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const Dataset d = generative_data(10, 2, 0.3, 10 + seed);
    auto c = base_config(SurrogateKind::GaussianFixed, "kSEISO", "mConst", 2, 1e-4);
    c.sigma_s2 = 0.9;
    for (double ell : {0.2, 0.5}) {
      EXPECT_NEAR(at(ell, d, c, score_loo), loo_oracle(d, ell, 1e-4, 0.9),
                  1e-10 * std::abs(loo_oracle(d, ell, 1e-4, 0.9)));
    }
  }
}

TEST(ScoreLoo, SymmetricPairHasEqualTerms) {
  const Dataset d({Point::Constant(1, 0.2), Point::Constant(1, 0.8)}, {1.0, -1.0});
  const auto c = base_config(SurrogateKind::GaussianFixed, "kSEISO", "mZero", 1, 1e-4);
  const std::vector<double> theta = {0.5};
  const Dataset first({Point::Constant(1, 0.8)}, {-1.0});
  const Dataset second({Point::Constant(1, 0.2)}, {1.0});
  auto bound = c;
  bound.kernel = kernels::bind(c.kernel, theta, 1);
  const double t0 = surrogate::log_density(
      surrogate::predict(surrogate::fit(bound, first), Point::Constant(1, 0.2)), 1.0);
  const double t1 = surrogate::log_density(
      surrogate::predict(surrogate::fit(bound, second), Point::Constant(1, 0.8)), -1.0);
  EXPECT_NEAR(t0, t1, 1e-14);
  EXPECT_NEAR(score_loo(theta, d, c), -t0, 1e-12);
}

TEST(ScoreLoo, SingularFoldScoresInfinity) {
  const Dataset d({Point::Constant(1, 0.2), Point::Constant(1, 0.2), Point::Constant(1, 0.9)},
                  {1.0, 1.1, 0.0});
  const auto c = base_config(SurrogateKind::GaussianFixed, "kSEISO", "mZero", 1, 0.0);
  EXPECT_EQ(at(0.5, d, c, score_loo), kInf);
}

TEST(ScoreMap, InfinitePriorStdEqualsPosteriorMl) {
  const Dataset d = generative_data(12, 2, 0.3, 5);
  const auto c = base_config(SurrogateKind::GaussianFixed, "kSEISO", "mConst", 2);
  const std::vector<double> theta = {0.4};
  const std::vector<double> mu = {0.0};
  const std::vector<double> inf = {kInf};
  EXPECT_EQ(score_map(theta, d, c, mu, inf), score_posterior_ml(theta, d, c));
}

TEST(ScoreMap, PenaltyVanishesAtPriorMean) {
  const Dataset d = generative_data(12, 2, 0.3, 6);
  const auto c = base_config(SurrogateKind::GaussianFixed, "kSEISO", "mConst", 2);
  const std::vector<double> theta = {0.4};
  const std::vector<double> mu = {std::log(0.4)};
  const std::vector<double> sd = {0.5};
  EXPECT_DOUBLE_EQ(score_map(theta, d, c, mu, sd), score_posterior_ml(theta, d, c));
  const std::vector<double> off = {0.8};
  const double u = (std::log(0.8) - std::log(0.4)) / 0.5;
  EXPECT_NEAR(score_map(off, d, c, mu, sd) - score_posterior_ml(off, d, c), 0.5 * u * u, 1e-12);
}

TEST(ScoreMap, InvalidPriorThrows) {
  const Dataset d = generative_data(5, 1, 0.3, 7);
  const auto c = base_config(SurrogateKind::GaussianFixed, "kSEISO", "mConst", 1);
  const std::vector<double> theta = {0.4};
  const std::vector<double> mu = {0.0};
  const std::vector<double> zero = {0.0};
  EXPECT_THROW(score_map(theta, d, c, mu, zero), InvalidParams);
  EXPECT_THROW(score_map(theta, d, c, {}, {}), InvalidParams);
}

TEST(Learn, RecoversLengthScaleWithMlAndMap) {
  for (auto method : {LearnMethod::ML, LearnMethod::MAP}) {
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Dataset d = generative_data(25, 2, 0.3, 100 + seed);
      const auto c = base_config(SurrogateKind::GaussianFixed, "kSEISO", "mConst", 2);
      LearnConfig lc;
      lc.method = method;
      lc.log_prior_mean = {0.0};
      lc.log_prior_std = {10.0};
      const auto theta = learn(lc, d, c, {500, 0.8});
      hits += (theta[0] >= 0.1 && theta[0] <= 0.9) ? 1 : 0;
    }
    EXPECT_GE(hits, 8) << to_string(method);
  }
}

TEST(Learn, TightPriorReturnsPriorMean) {
  const Dataset d = generative_data(25, 2, 0.3, 7);
  const auto c = base_config(SurrogateKind::StudentTJeffreys, "kSEISO", "mConst", 2);
  LearnConfig lc;
  lc.method = LearnMethod::MAP;
  lc.log_prior_mean = {std::log(2.0)};
  lc.log_prior_std = {1e-3};
  const auto theta = learn(lc, d, c, {500, 0.8});
  EXPECT_NEAR(theta[0], 2.0, 1e-2);
}

TEST(Learn, DegenerateBoxReturnsItsPoint) {
  const Dataset d = generative_data(10, 2, 0.3, 8);
  const auto c = base_config(SurrogateKind::GaussianFixed, "kSEISO", "mConst", 2);
  LearnConfig lc;
  lc.method = LearnMethod::PosteriorML;
  lc.log_lower = {std::log(0.25)};
  lc.log_upper = {std::log(0.25)};
  EXPECT_NEAR(learn(lc, d, c, {50, 0.8})[0], 0.25, 1e-12);
}

TEST(LearnProperty, ResultStaysInsideBounds) {
  for (auto method : {LearnMethod::ML, LearnMethod::PosteriorML, LearnMethod::LOO,
                      LearnMethod::MAP}) {
    const Dataset d = generative_data(12, 2, 0.05, 9);
    const auto c = base_config(SurrogateKind::StudentTJeffreys, "kSum(kSEISO,kConst)", "mConst", 2);
    LearnConfig lc;
    lc.method = method;
    lc.log_prior_mean = {0.0, 0.0};
    lc.log_prior_std = {1.0, 1.0};
    lc.log_lower = {std::log(0.2), std::log(0.5)};
    lc.log_upper = {std::log(0.6), std::log(2.0)};
    const auto theta = learn(lc, d, c, {200, 0.8});
    ASSERT_EQ(theta.size(), 2u);
    EXPECT_GE(theta[0], 0.2 * (1 - 1e-12));
    EXPECT_LE(theta[0], 0.6 * (1 + 1e-12));
    EXPECT_GE(theta[1], 0.5 * (1 - 1e-12));
    EXPECT_LE(theta[1], 2.0 * (1 + 1e-12));
  }
}

TEST(LearnProperty, ScoresFiniteOnNondegenerateData) {
  const Dataset d = generative_data(15, 2, 0.3, 11);
  for (auto kind : {SurrogateKind::GaussianFixed, SurrogateKind::StudentTJeffreys,
                    SurrogateKind::GaussianNIG}) {
    const auto c = base_config(kind, "kMaternISO5", "mLinearConst", 2);
    for (double ell : {0.01, 0.1, 1.0, 10.0, 100.0}) {
      const std::vector<double> theta = {ell};
      EXPECT_TRUE(std::isfinite(score_ml(theta, d, c)));
      EXPECT_TRUE(std::isfinite(score_posterior_ml(theta, d, c)));
      EXPECT_TRUE(std::isfinite(score_loo(theta, d, c)));
    }
  }
}

}  // namespace
}  // namespace bayesopt::hyperlearn
