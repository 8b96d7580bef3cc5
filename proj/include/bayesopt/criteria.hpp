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

#ifndef BAYESOPT_CRITERIA_HPP
#define BAYESOPT_CRITERIA_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bayesopt/surrogate.hpp"
#include "bayesopt/types.hpp"

namespace bayesopt::criteria {

enum class CriterionKind { EI, LCB, POI, ThompsonSampling, Hedge, LinearComb };

inline constexpr double kDefaultEIExponent = 1.0;
inline constexpr double kDefaultLCBBeta = 1.0;
inline constexpr double kDefaultPOIEpsilon = 0.01;
inline constexpr double kDefaultHedgeEta = 1.0;

/// Acquisition tree. Scores are "higher is better" under the minimization
/// convention. `param` is the EI exponent, the LCB beta or the POI epsilon.
struct CriterionSpec {
  CriterionKind kind = CriterionKind::EI;
  std::vector<CriterionSpec> children;
  double param = 0.0;
  std::vector<double> weights;  // LinearComb
  double eta = kDefaultHedgeEta;  // Hedge
};

/// Parses cEI, cLCB, cPOI, cThompsonSampling, cHedge(...), cLinearComb(...).
/// params are consumed in pre-order: a cLinearComb takes one weight per child
/// before its children, atomic criteria take one value each, and atomic
/// criteria fall back to their defaults once params run out. cHedge is only
/// valid at the root.
/// Throws ParseError, ParamCountMismatch (too many params, or missing
/// cLinearComb weights) and InvalidParams (e.g. non-integer EI exponent).
CriterionSpec parse_criterion(std::string_view expr, std::span<const double> params);

std::string to_string(const CriterionSpec& spec);

/// Number of params the tree can consume.
std::size_t n_param_slots(const CriterionSpec& spec);

/// Criterion value for a predictive marginal. rng is consumed only by
/// Thompson sampling. Must not be called on a Hedge node.
double evaluate(const CriterionSpec& spec, const surrogate::Prediction& pred,
                double incumbent_y, Rng& rng);

/// Generalized expected improvement E[max(0, incumbent - Y)^g] for
/// Y ~ N(mean, sigma^2), integer g >= 1.
double expected_improvement(double mean, double sigma, double incumbent_y, int exponent);

double normal_cdf(double z);
double normal_pdf(double z);

/// GP-Hedge portfolio state: one cumulative gain and one nominee per child.
struct HedgeState {
  std::vector<double> gains;
  Points last_nominees;
  double eta = kDefaultHedgeEta;
};

HedgeState make_hedge_state(const CriterionSpec& hedge);

/// Softmax selection probabilities exp(eta * gain_i) / sum_j exp(eta * gain_j).
std::vector<double> hedge_probabilities(const HedgeState& state);

/// Draws a child with hedge_probabilities and returns its nominee and index.
/// Records nominees in state.
std::pair<Point, std::size_t> hedge_select(HedgeState& state, const Points& nominees,
                                           Rng& rng);

/// gain_i -= posterior mean at nominee_i.
void hedge_update(HedgeState& state, const surrogate::PosteriorState& posterior);

}  // namespace bayesopt::criteria

#endif  // BAYESOPT_CRITERIA_HPP
