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
#include <random>
#include <vector>

#include "bayesopt/errors.hpp"
#include "bayesopt/kernels.hpp"
#include "bayesopt/linalg.hpp"
#include "oracles.hpp"

namespace bayesopt::kernels {
namespace {

KernelSpec bound(const char* expr, std::vector<double> theta, std::size_t dim) {
  return kernels::bind(parse_kernel(expr), theta, dim);
}

Point pt(std::initializer_list<double> v) {
  Point p(static_cast<Eigen::Index>(v.size()));
  std::copy(v.begin(), v.end(), p.data());
  return p;
}

TEST(ParseKernel, SingleSEIso) {
  const KernelSpec k = parse_kernel("kSEISO");
  EXPECT_EQ(k.kind, KernelKind::SEIso);
  EXPECT_EQ(n_hyperparameters(k, 3), 1u);
}

TEST(ParseKernel, SumOfSEIsoAndConstHasTwoHyperparameters) {
  const KernelSpec k = parse_kernel("kSum(kSEISO,kConst)");
  EXPECT_EQ(k.kind, KernelKind::Sum);
  ASSERT_EQ(k.children.size(), 2u);
  EXPECT_EQ(k.children[0].kind, KernelKind::SEIso);
  EXPECT_EQ(k.children[1].kind, KernelKind::Const);
  EXPECT_EQ(n_hyperparameters(k, 2), 2u);
}

TEST(ParseKernel, UnbalancedThrows) {
  EXPECT_THROW(parse_kernel("kSum(kSEISO"), ParseError);
  EXPECT_THROW(parse_kernel("kSEISO)"), ParseError);
}

TEST(ParseKernel, UnknownNameReportsOffset) {
  try {
    parse_kernel("kSum(kSEISO,kBogus)");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 12u);
  }
}

TEST(ParseKernel, EmptyCombinatorAndBadArity) {
  EXPECT_THROW(parse_kernel("kSum()"), ParseError);
  EXPECT_THROW(parse_kernel("kProd"), ParseError);
  EXPECT_THROW(parse_kernel("kSEISO(kConst)"), ParseError);
  EXPECT_THROW(parse_kernel(""), ParseError);
}

TEST(ParseKernel, ArdCarriesOneLengthScalePerDimension) {
  const KernelSpec k = parse_kernel("kProd(kSEARD,kMaternISO3)");
  EXPECT_EQ(n_hyperparameters(k, 4), 5u);
  const KernelSpec b = kernels::bind(k, std::vector<double>{1, 2, 3, 4, 5}, 4);
  EXPECT_EQ(b.children[0].theta.size(), 4u);
  EXPECT_EQ(hyperparameters(b), (std::vector<double>{1, 2, 3, 4, 5}));
}

TEST(ParseKernel, RoundTripIsFixpoint) {
  for (const char* expr :
       {"kSEISO", "kSEARD", "kMaternISO1", "kMaternISO3", "kMaternISO5", "kConst",
        "kSum(kSEISO,kConst)", "kProd(kSum(kMaternISO5, kConst), kSEARD, kMaternISO1)"}) {
    const KernelSpec once = parse_kernel(expr);
    const std::string printed = to_string(once);
    const KernelSpec twice = parse_kernel(printed);
    EXPECT_EQ(to_string(twice), printed) << expr;
    EXPECT_EQ(n_hyperparameters(twice, 3), n_hyperparameters(once, 3));
  }
}

TEST(Bind, RejectsWrongCountAndNonPositive) {
  const KernelSpec k = parse_kernel("kSum(kSEISO,kConst)");
  EXPECT_THROW(kernels::bind(k, std::vector<double>{1.0}, 2), InvalidParams);
  EXPECT_THROW(kernels::bind(k, std::vector<double>{1.0, 0.0}, 2), InvalidParams);
  EXPECT_THROW(kernels::bind(k, std::vector<double>{-1.0, 1.0}, 2), InvalidParams);
}

TEST(KernelEval, SEIsoAtZeroDistanceIsOne) {
  const KernelSpec k = bound("kSEISO", {0.3}, 2);
  EXPECT_DOUBLE_EQ(kernel_eval(k, pt({0.1, 0.2}), pt({0.1, 0.2})), 1.0);
}

TEST(KernelEval, Matern3AtUnitDistance) {
  const KernelSpec k = bound("kMaternISO3", {1.0}, 1);
  const double expected = (1.0 + std::sqrt(3.0)) * std::exp(-std::sqrt(3.0));
  EXPECT_NEAR(kernel_eval(k, pt({0.0}), pt({1.0})), expected, 1e-15);
  EXPECT_NEAR(expected, 0.4834, 1e-4);
}

TEST(KernelEval, SumOfSEIsoAndConstAtZeroDistance) {
  const KernelSpec k = bound("kSum(kSEISO,kConst)", {1.0, 0.5}, 2);
  EXPECT_DOUBLE_EQ(kernel_eval(k, pt({0.4, 0.4}), pt({0.4, 0.4})), 1.25);
}

TEST(KernelEval, AtomicFormulas) {
  const Point a = pt({0.1, 0.7});
  const Point b = pt({0.6, 0.2});
  const double r = (a - b).norm();
  EXPECT_NEAR(kernel_eval(bound("kMaternISO1", {0.4}, 2), a, b), std::exp(-r / 0.4), 1e-15);
  EXPECT_NEAR(kernel_eval(bound("kMaternISO5", {0.4}, 2), a, b), oracle::matern5(a, b, 0.4),
              1e-15);
  EXPECT_NEAR(kernel_eval(bound("kSEISO", {0.4}, 2), a, b), oracle::se_iso(a, b, 0.4), 1e-15);
  const double ard = std::exp(-0.5 * (std::pow(0.5 / 0.2, 2) + std::pow(0.5 / 0.9, 2)));
  EXPECT_NEAR(kernel_eval(bound("kSEARD", {0.2, 0.9}, 2), a, b), ard, 1e-15);
  EXPECT_DOUBLE_EQ(kernel_eval(bound("kConst", {3.0}, 2), a, b), 9.0);
  EXPECT_NEAR(kernel_eval(bound("kProd(kSEISO,kConst)", {0.4, 2.0}, 2), a, b),
              4.0 * oracle::se_iso(a, b, 0.4), 1e-15);
}

TEST(KernelEval, DimensionMismatchThrows) {
  const KernelSpec k = bound("kSEISO", {1.0}, 2);
  EXPECT_THROW(kernel_eval(k, pt({0.1, 0.2}), pt({0.1})), DimensionMismatch);
  const KernelSpec ard = bound("kSEARD", {1.0, 1.0}, 2);
  EXPECT_THROW(kernel_eval(ard, pt({0.1, 0.2, 0.3}), pt({0.1, 0.2, 0.3})), DimensionMismatch);
}

TEST(KernelEval, AtomicKernelsAreSymmetric) {
  std::mt19937_64 rng(2);
  const Points p = oracle::random_points(40, 3, rng);
  for (const char* expr : {"kSEISO", "kMaternISO1", "kMaternISO3", "kMaternISO5", "kConst"}) {
    const KernelSpec k = bound(expr, {0.37}, 3);
    for (std::size_t i = 0; i + 1 < p.size(); i += 2) {
      EXPECT_EQ(kernel_eval(k, p[i], p[i + 1]), kernel_eval(k, p[i + 1], p[i])) << expr;
    }
  }
  const KernelSpec ard = bound("kSEARD", {0.3, 0.5, 0.7}, 3);
  for (std::size_t i = 0; i + 1 < p.size(); i += 2) {
    EXPECT_EQ(kernel_eval(ard, p[i], p[i + 1]), kernel_eval(ard, p[i + 1], p[i]));
  }
}

TEST(Gram, SinglePointWithNugget) {
  const KernelSpec k = bound("kSEISO", {1.0}, 2);
  const Points x = {pt({0.3, 0.3})};
  const Eigen::MatrixXd K = gram(k, x, 0.01);
  ASSERT_EQ(K.rows(), 1);
  EXPECT_DOUBLE_EQ(K(0, 0), 1.01);
}

TEST(Gram, IdenticalPointsWithoutNuggetIsAllOnes) {
  const KernelSpec k = bound("kSEISO", {1.0}, 2);
  const Points x = {pt({0.3, 0.3}), pt({0.3, 0.3})};
  EXPECT_TRUE(gram(k, x, 0.0).isApprox(Eigen::MatrixXd::Ones(2, 2)));
  EXPECT_THROW(linalg::factorize(gram(k, x, 0.0)), NotPositiveDefinite);
}

TEST(Gram, MatchesPairwiseOracle) {
  std::mt19937_64 rng(4);
  const Points x = oracle::random_points(5, 2, rng);
  const KernelSpec k = bound("kMaternISO5", {0.25}, 2);
  const Eigen::MatrixXd K = gram(k, x, 0.1);
  const Eigen::MatrixXd expected =
      oracle::gram(x, [](const Point& a, const Point& b) { return oracle::matern5(a, b, 0.25); },
                   0.1);
  EXPECT_LE((K - expected).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_TRUE(K.isApprox(K.transpose(), 0.0));
}

TEST(Gram, NuggetedGramsFactorize) {
  std::mt19937_64 rng(6);
  for (const char* expr : {"kSEISO", "kMaternISO1", "kMaternISO3", "kMaternISO5"}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Points x = oracle::random_points(50, 2, rng);
      const KernelSpec k = bound(expr, {1.0}, 2);
      EXPECT_NO_THROW(linalg::factorize(gram(k, x, 1e-8))) << expr;
    }
  }
}

TEST(Gram, CompositeDiagonalDominatesOffDiagonal) {
  std::mt19937_64 rng(8);
  const Points x = oracle::random_points(20, 2, rng);
  const KernelSpec k = bound("kProd(kSum(kSEISO,kMaternISO3),kMaternISO5)", {0.3, 0.6, 0.9}, 2);
  const Eigen::MatrixXd K = gram(k, x, 0.0);
  EXPECT_TRUE(K.isApprox(K.transpose(), 0.0));
  for (Eigen::Index i = 0; i < K.rows(); ++i) {
    for (Eigen::Index j = 0; j < K.cols(); ++j) EXPECT_LE(K(i, j), K(i, i) + 1e-15);
  }
}

TEST(CrossVector, QueryOnTrainingPoint) {
  std::mt19937_64 rng(10);
  const Points x = oracle::random_points(5, 2, rng);
  const KernelSpec k = bound("kSEISO", {0.2}, 2);
  EXPECT_DOUBLE_EQ(cross_vector(k, x, x[3])(3), 1.0);
}

TEST(CrossVector, FarQueryDecays) {
  std::mt19937_64 rng(12);
  const Points x = oracle::random_points(5, 2, rng);
  const KernelSpec k = bound("kSEISO", {0.01}, 2);
  EXPECT_LT(cross_vector(k, x, pt({50.0, 50.0})).maxCoeff(), 1e-10);
}

TEST(CrossVector, MatchesEntrywiseOracle) {
  std::mt19937_64 rng(14);
  const Points x = oracle::random_points(5, 3, rng);
  const Point q = oracle::random_points(1, 3, rng)[0];
  const KernelSpec k = bound("kSEISO", {0.5}, 3);
  const Eigen::VectorXd v = cross_vector(k, x, q);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_NEAR(v(static_cast<Eigen::Index>(i)), oracle::se_iso(x[i], q, 0.5), 1e-15);
  }
  EXPECT_THROW(cross_vector(k, x, pt({0.1})), DimensionMismatch);
}

}  // namespace
}  // namespace bayesopt::kernels
