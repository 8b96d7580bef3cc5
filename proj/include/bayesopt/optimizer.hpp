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

#ifndef BAYESOPT_OPTIMIZER_HPP
#define BAYESOPT_OPTIMIZER_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "bayesopt/criteria.hpp"
#include "bayesopt/hyperlearn.hpp"
#include "bayesopt/inneropt.hpp"
#include "bayesopt/params.hpp"
#include "bayesopt/surrogate.hpp"
#include "bayesopt/types.hpp"

namespace bayesopt {

/// Known minimizers (problem units) and minimum value. Used for metrics only.
struct KnownOptimum {
  Points x;
  double f = 0.0;
};

/// The function to minimize. evaluate may be stochastic. check_reachability,
/// when set, rejects points that must never be queried. candidates is the
/// finite domain for run_discrete (problem units) and is ignored by
/// run_continuous, which uses BoptParams::bounds.
struct TargetProblem {
  std::function<double(const Point&)> evaluate;
  std::function<bool(const Point&)> check_reachability;
  Points candidates;
  std::optional<KnownOptimum> known_optimum;
};

/// One target evaluation. iteration is 0 for the initial design and
/// 1..n_iterations afterwards. Metrics are NaN until compute_metrics runs with
/// a known optimum.
struct TraceRecord {
  std::size_t iteration = 0;
  Point query;
  double y = 0.0;
  double incumbent = 0.0;
  double gap = 0.0;
  double distance = 0.0;
  double regret = 0.0;
  double t_fit_ms = 0.0;
  double t_crit_ms = 0.0;
  double t_target_ms = 0.0;
  double t_learn_ms = 0.0;
  std::vector<double> theta;
  std::vector<double> hedge_gains;
};

struct RunTrace {
  std::size_t dim = 0;
  std::vector<TraceRecord> records;
};

struct RunResult {
  Point best_x;
  double best_y = 0.0;
  RunTrace trace;
};

/// Everything derived from BoptParams for a problem of dimension dim.
struct RunSetup {
  std::size_t dim = 0;
  std::size_t n_init = 0;
  surrogate::SurrogateConfig surrogate;  // kernel bound to the initial theta
  criteria::CriterionSpec criterion;
  hyperlearn::LearnConfig learn;
  bool normalize_y = false;
  inneropt::InnerOptimizer criterion_search;
  inneropt::InnerOptimizer learn_search;
};

inline constexpr std::size_t kCriterionBudget = 1000;
inline constexpr std::size_t kLearnBudget = 500;
inline constexpr double kGlobalFraction = 0.8;
/// Largest nugget the optimizer escalates to when the Gram matrix keeps
/// failing to factorize.
inline constexpr double kNuggetCap = 1.0;

/// Validates params for a problem of dimension dim. continuous additionally
/// requires bounds of that dimension with lower < upper. Throws InvalidParams,
/// ParseError or ParamCountMismatch.
RunSetup resolve(const BoptParams& params, std::size_t dim, bool continuous);

/// Sequential Bayesian optimization over the box params.bounds.
/// Throws InvalidParams for bad parameters and NoFeasiblePoint when the
/// initial design cannot find n_init reachable points in 100 * n_init tries.
/// Exceptions thrown by problem.evaluate propagate unchanged.
RunResult run_continuous(const TargetProblem& problem, const BoptParams& params);

/// Same loop over the finite set problem.candidates; the criterion is
/// maximized by exhaustive search over untested candidates and the run stops
/// early once every candidate has been evaluated.
RunResult run_discrete(const TargetProblem& problem, const BoptParams& params);

/// Fills gap (incumbent - f*), distance (incumbent location to the nearest
/// known minimizer) and average regret (sum of y - N f*) / N. Without a known
/// optimum the fields are set to NaN.
void compute_metrics(RunTrace& trace, const std::optional<KnownOptimum>& known);

}  // namespace bayesopt

#endif  // BAYESOPT_OPTIMIZER_HPP
