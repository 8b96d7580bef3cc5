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

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "bayesopt/errors.hpp"
#include "bayesopt/inneropt.hpp"

namespace bayesopt::inneropt {
namespace {

TEST(Maximize, QuadraticOnUnitSquare) {
  const auto obj = [](const Point& x) { return -(x.array() - 0.3).square().sum(); };
  const InnerResult r = maximize(obj, Box::unit(2), {500, 0.8});
  EXPECT_LE((r.point.array() - 0.3).abs().maxCoeff(), 1e-3);
  EXPECT_LE(r.evaluations, 500u);
}

TEST(Maximize, ConstantObjective) {
  const InnerResult r = maximize([](const Point&) { return 4.2; }, Box::unit(3), {100, 0.5});
  EXPECT_TRUE(Box::unit(3).contains(r.point));
  EXPECT_EQ(r.value, 4.2);
}

TEST(Maximize, NothingFeasibleThrows) {
  EXPECT_THROW(maximize([](const Point&) { return 1.0; }, Box::unit(2), {100, 0.8},
                        [](const Point&) { return false; }),
               NoFeasiblePoint);
  EXPECT_THROW(maximize([](const Point&) { return -std::numeric_limits<double>::infinity(); },
                        Box::unit(2), {100, 0.8}),
               NoFeasiblePoint);
}

TEST(Maximize, RespectsFeasibilityPredicate) {
  // Unconstrained optimum at (0.8, 0.8) lies outside the disc around the origin.
  const auto obj = [](const Point& x) { return -(x.array() - 0.8).square().sum(); };
  const auto feasible = [](const Point& x) { return x.norm() <= 0.5; };
  const InnerResult r = maximize(obj, Box::unit(2), {1000, 0.8}, feasible);
  EXPECT_TRUE(feasible(r.point));
  EXPECT_NEAR(r.point(0), r.point(1), 1e-2);
  EXPECT_GT(r.point.norm(), 0.45);
}

TEST(Maximize, GeneralBoxAndDegenerateBox) {
  Box box{Eigen::Vector2d(-5.0, 10.0), Eigen::Vector2d(5.0, 30.0)};
  const auto obj = [](const Point& x) {
    return -std::pow(x(0) - 1.0, 2) - std::pow(x(1) - 12.0, 2);
  };
  const InnerResult r = maximize(obj, box, {1000, 0.8});
  EXPECT_NEAR(r.point(0), 1.0, 1e-3);
  EXPECT_NEAR(r.point(1), 12.0, 1e-3);

  Box point_box{Eigen::Vector2d(0.25, 0.5), Eigen::Vector2d(0.25, 0.5)};
  const InnerResult p = maximize(obj, point_box, {20, 0.5});
  EXPECT_EQ(p.point, Eigen::Vector2d(0.25, 0.5));
}

TEST(Maximize, InvalidSettingsThrow) {
  const auto obj = [](const Point&) { return 0.0; };
  EXPECT_THROW(maximize(obj, Box::unit(2), {9, 0.8}), InvalidParams);
  EXPECT_THROW(maximize(obj, Box::unit(2), {100, 0.0}), InvalidParams);
  EXPECT_THROW(maximize(obj, Box::unit(2), {100, 1.0}), InvalidParams);
  EXPECT_THROW(maximize(obj, Box{Eigen::Vector2d(1, 0), Eigen::Vector2d(0, 1)}, {100, 0.5}),
               InvalidParams);
  EXPECT_THROW(maximize(obj, Box{Eigen::Vector2d(0, 0), Eigen::Vector3d(1, 1, 1)}, {100, 0.5}),
               DimensionMismatch);
}

TEST(InneroptProperty, ResultInsideBoxFeasibleAndDeterministic) {
  const auto obj = [](const Point& x) {
    return std::sin(7.0 * x(0)) * std::cos(5.0 * x(1)) - 0.3 * x.squaredNorm();
  };
  const auto feasible = [](const Point& x) { return x(0) + x(1) <= 1.2; };
  const InnerResult a = maximize(obj, Box::unit(2), {400, 0.8}, feasible);
  const InnerResult b = maximize(obj, Box::unit(2), {400, 0.8}, feasible);
  EXPECT_TRUE(Box::unit(2).contains(a.point));
  EXPECT_TRUE(feasible(a.point));
  EXPECT_EQ(a.point, b.point);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.value, obj(a.point));
}

TEST(InneroptProperty, BestSoFarIsMonotone) {
  std::vector<double> seen;
  const auto obj = [&seen](const Point& x) {
    const double v = std::cos(9.0 * x(0)) + std::sin(4.0 * x(1));
    seen.push_back(v);
    return v;
  };
  const InnerResult r = maximize(obj, Box::unit(2), {300, 0.8});
  double best = -std::numeric_limits<double>::infinity();
  std::vector<double> running;
  for (double v : seen) {
    best = std::max(best, v);
    running.push_back(best);
  }
  for (std::size_t i = 1; i < running.size(); ++i) EXPECT_GE(running[i], running[i - 1]);
  EXPECT_EQ(r.value, best);
}

}  // namespace
}  // namespace bayesopt::inneropt
