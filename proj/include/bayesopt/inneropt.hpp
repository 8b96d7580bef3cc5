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

#ifndef BAYESOPT_INNEROPT_HPP
#define BAYESOPT_INNEROPT_HPP

#include <cstddef>
#include <functional>

#include "bayesopt/types.hpp"

namespace bayesopt::inneropt {

struct Box {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;

  static Box unit(std::size_t dim);
  std::size_t dim() const { return static_cast<std::size_t>(lower.size()); }
  bool contains(const Point& x) const;
};

/// Budgeted box-constrained maximizer: DIRECT for budget * global_frac
/// evaluations, then Nelder-Mead from the best point found.
struct InnerOptimizer {
  std::size_t budget = 1000;
  double global_frac = 0.8;
};

struct InnerResult {
  Point point;
  double value = 0.0;
  std::size_t evaluations = 0;
};

using Objective = std::function<double(const Point&)>;
using Feasibility = std::function<bool(const Point&)>;

/// Maximizes obj over box. Points rejected by feasible (or where obj returns
/// -inf or NaN) never become the result. Deterministic.
/// Throws NoFeasiblePoint when no evaluated point was acceptable and
/// InvalidParams on a malformed box or optimizer setting.
InnerResult maximize(const Objective& obj, const Box& box, const InnerOptimizer& opt,
                     const Feasibility& feasible = {});

}  // namespace bayesopt::inneropt

#endif  // BAYESOPT_INNEROPT_HPP
