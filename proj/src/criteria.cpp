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

#include "bayesopt/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bayesopt/errors.hpp"
#include "detail/expression.hpp"

namespace bayesopt::criteria {

namespace {

class Binder {
 public:
  explicit Binder(std::span<const double> params) : params_(params) {}

  CriterionSpec bind(const detail::Expression& e, bool root) {
    CriterionSpec spec;
    if (e.name == "cHedge" || e.name == "cLinearComb") {
      if (!e.has_arguments) throw ParseError("'" + e.name + "' needs arguments", e.offset);
      if (e.name == "cHedge") {
        if (!root) throw ParseError("cHedge is only allowed at the top level", e.offset);
        spec.kind = CriterionKind::Hedge;
      } else {
        spec.kind = CriterionKind::LinearComb;
        for (std::size_t i = 0; i < e.arguments.size(); ++i) {
          if (pos_ >= params_.size()) {
            throw ParamCountMismatch("cLinearComb needs " + std::to_string(e.arguments.size()) +
                                     " weights, params ran out");
          }
          spec.weights.push_back(params_[pos_++]);
        }
      }
      for (const auto& arg : e.arguments) spec.children.push_back(bind(arg, false));
      return spec;
    }
    if (e.has_arguments) throw ParseError("'" + e.name + "' takes no arguments", e.offset);
    if (e.name == "cEI") {
      spec.kind = CriterionKind::EI;
      spec.param = next(kDefaultEIExponent);
      if (spec.param < 1.0 || spec.param != std::floor(spec.param)) {
        throw InvalidParams("EI exponent must be a positive integer");
      }
    } else if (e.name == "cLCB") {
      spec.kind = CriterionKind::LCB;
      spec.param = next(kDefaultLCBBeta);
    } else if (e.name == "cPOI") {
      spec.kind = CriterionKind::POI;
      spec.param = next(kDefaultPOIEpsilon);
    } else if (e.name == "cThompsonSampling") {
      spec.kind = CriterionKind::ThompsonSampling;
    } else {
      throw ParseError("unknown criterion '" + e.name + "'", e.offset);
    }
    return spec;
  }

  std::size_t consumed() const { return pos_; }

 private:
  double next(double fallback) { return pos_ < params_.size() ? params_[pos_++] : fallback; }

  std::span<const double> params_;
  std::size_t pos_ = 0;
};

const char* name_of(CriterionKind kind) {
  switch (kind) {
    case CriterionKind::EI:
      return "cEI";
    case CriterionKind::LCB:
      return "cLCB";
    case CriterionKind::POI:
      return "cPOI";
    case CriterionKind::ThompsonSampling:
      return "cThompsonSampling";
    case CriterionKind::Hedge:
      return "cHedge";
    case CriterionKind::LinearComb:
      return "cLinearComb";
  }
  return "";
}

}  // namespace

CriterionSpec parse_criterion(std::string_view expr, std::span<const double> params) {
  const detail::Expression e = detail::parse_expression(expr);
  Binder binder(params);
  CriterionSpec spec = binder.bind(e, true);
  if (binder.consumed() < params.size()) {
    throw ParamCountMismatch("criterion '" + std::string(expr) + "' has " +
                             std::to_string(n_param_slots(spec)) + " parameter slots, got " +
                             std::to_string(params.size()) + " params");
  }
  return spec;
}

std::string to_string(const CriterionSpec& spec) {
  std::string out = name_of(spec.kind);
  if (!spec.children.empty()) {
    out += '(';
    for (std::size_t i = 0; i < spec.children.size(); ++i) {
      if (i > 0) out += ',';
      out += to_string(spec.children[i]);
    }
    out += ')';
  }
  return out;
}

std::size_t n_param_slots(const CriterionSpec& spec) {
  switch (spec.kind) {
    case CriterionKind::EI:
    case CriterionKind::LCB:
    case CriterionKind::POI:
      return 1;
    case CriterionKind::ThompsonSampling:
      return 0;
    case CriterionKind::Hedge:
    case CriterionKind::LinearComb: {
      std::size_t count = spec.kind == CriterionKind::LinearComb ? spec.children.size() : 0;
      for (const auto& child : spec.children) count += n_param_slots(child);
      return count;
    }
  }
  return 0;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double normal_pdf(double z) {
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
}

double expected_improvement(double mean, double sigma, double incumbent_y, int exponent) {
  const double z = (incumbent_y - mean) / sigma;
  const double cdf = normal_cdf(z);
  const double pdf = normal_pdf(z);
  if (exponent == 1) return std::max(0.0, sigma * (z * cdf + pdf));

  // T_k = E[U^k 1{U < z}] for U ~ N(0, 1).
  std::vector<double> t(static_cast<std::size_t>(exponent) + 1);
  t[0] = cdf;
  t[1] = -pdf;
  for (int k = 2; k <= exponent; ++k) {
    t[static_cast<std::size_t>(k)] =
        -std::pow(z, k - 1) * pdf + (k - 1) * t[static_cast<std::size_t>(k - 2)];
  }
  double sum = 0.0;
  double binom = 1.0;
  for (int k = 0; k <= exponent; ++k) {
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    sum += sign * binom * std::pow(z, exponent - k) * t[static_cast<std::size_t>(k)];
    binom = binom * (exponent - k) / (k + 1);
  }
  return std::max(0.0, std::pow(sigma, exponent) * sum);
}

double evaluate(const CriterionSpec& spec, const surrogate::Prediction& pred,
                double incumbent_y, Rng& rng) {
  const double sigma = std::sqrt(pred.variance);
  switch (spec.kind) {
    case CriterionKind::EI:
      return expected_improvement(pred.mean, sigma, incumbent_y, static_cast<int>(spec.param));
    case CriterionKind::LCB:
      return -(pred.mean - spec.param * sigma);
    case CriterionKind::POI:
      return normal_cdf((incumbent_y - spec.param - pred.mean) / sigma);
    case CriterionKind::ThompsonSampling: {
      if (pred.gaussian()) {
        std::normal_distribution<double> normal(0.0, 1.0);
        return -(pred.mean + sigma * normal(rng));
      }
      std::student_t_distribution<double> student(pred.dof);
      return -(pred.mean + sigma * student(rng));
    }
    case CriterionKind::LinearComb: {
      double sum = 0.0;
      for (std::size_t i = 0; i < spec.children.size(); ++i) {
        sum += spec.weights[i] * evaluate(spec.children[i], pred, incumbent_y, rng);
      }
      return sum;
    }
    case CriterionKind::Hedge:
      break;
  }
  throw std::logic_error("cHedge is a portfolio; evaluate its children instead");
}

HedgeState make_hedge_state(const CriterionSpec& hedge) {
  if (hedge.kind != CriterionKind::Hedge) throw InvalidParams("not a cHedge criterion");
  if (!(hedge.eta > 0.0)) throw InvalidParams("hedge eta must be positive");
  HedgeState state;
  state.gains.assign(hedge.children.size(), 0.0);
  state.eta = hedge.eta;
  return state;
}

std::vector<double> hedge_probabilities(const HedgeState& state) {
  std::vector<double> p(state.gains.size());
  if (p.empty()) return p;
  const double top = *std::max_element(state.gains.begin(), state.gains.end());
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = std::exp(state.eta * (state.gains[i] - top));
    total += p[i];
  }
  for (auto& v : p) v /= total;
  return p;
}

std::pair<Point, std::size_t> hedge_select(HedgeState& state, const Points& nominees,
                                           Rng& rng) {
  if (nominees.size() != state.gains.size()) {
    throw DimensionMismatch("hedge_select: one nominee per child is required");
  }
  const std::vector<double> p = hedge_probabilities(state);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double u = unit(rng);
  std::size_t chosen = p.size() - 1;
  double cumulative = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    cumulative += p[i];
    if (u < cumulative) {
      chosen = i;
      break;
    }
  }
  state.last_nominees = nominees;
  return {nominees[chosen], chosen};
}

void hedge_update(HedgeState& state, const surrogate::PosteriorState& posterior) {
  for (std::size_t i = 0; i < state.last_nominees.size(); ++i) {
    state.gains[i] -= surrogate::predict(posterior, state.last_nominees[i]).mean;
  }
}

}  // namespace bayesopt::criteria
