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

#include "bayesopt/optimizer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <limits>
#include <numeric>

#include "bayesopt/errors.hpp"
#include "bayesopt/initdesign.hpp"

namespace bayesopt {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

enum Stream : std::uint32_t { kDesignStream = 0, kCriterionStream = 1, kHedgeStream = 2 };

Rng make_stream(std::uint64_t seed, std::uint32_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    stream};
  return Rng(seq);
}

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

// Affine map between problem units and the internal unit box.
struct UnitMap {
  Eigen::VectorXd lower;
  Eigen::VectorXd width;

  Point to_problem(const Point& u) const {
    return lower.array() + u.array() * width.array();
  }
  Point to_unit(const Point& x) const {
    Point u(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      u(i) = width(i) > 0.0 ? (x(i) - lower(i)) / width(i) : 0.5;
    }
    return u;
  }
};

// State shared by the continuous and discrete loops.
class Engine {
 public:
  Engine(const TargetProblem& problem, const BoptParams& params, RunSetup setup, UnitMap map)
      : problem_(problem),
        params_(params),
        setup_(std::move(setup)),
        map_(std::move(map)),
        design_rng_(make_stream(params.seed, kDesignStream)),
        criterion_rng_(make_stream(params.seed, kCriterionStream)),
        hedge_rng_(make_stream(params.seed, kHedgeStream)) {
    if (setup_.criterion.kind == criteria::CriterionKind::Hedge) {
      hedge_ = criteria::make_hedge_state(setup_.criterion);
    }
    trace_.dim = setup_.dim;
  }

  Rng& design_rng() { return design_rng_; }
  const RunSetup& setup() const { return setup_; }
  std::size_t evaluations() const { return raw_y_.size(); }

  bool reachable_unit(const Point& u) const {
    return !problem_.check_reachability || problem_.check_reachability(map_.to_problem(u));
  }

  // Evaluates the target at u and records the observation.
  double evaluate(const Point& u, std::size_t iteration) {
    TraceRecord rec;
    rec.iteration = iteration;
    rec.query = map_.to_problem(u);
    const auto t0 = Clock::now();
    rec.y = problem_.evaluate(rec.query);
    rec.t_target_ms = elapsed_ms(t0);
    units_.push_back(u);
    raw_y_.push_back(rec.y);
    best_raw_ = std::min(best_raw_, rec.y);
    rec.incumbent = best_raw_;
    trace_.records.push_back(std::move(rec));
    return trace_.records.back().y;
  }

  TraceRecord& last_record() { return trace_.records.back(); }

  // Refreshes the y normalization, learns theta and refits from scratch.
  void learn_and_fit() {
    const auto t0 = Clock::now();
    if (setup_.normalize_y) {
      const auto n = static_cast<double>(raw_y_.size());
      shift_ = std::accumulate(raw_y_.begin(), raw_y_.end(), 0.0) / n;
      double ss = 0.0;
      for (double y : raw_y_) ss += (y - shift_) * (y - shift_);
      scale_ = std::sqrt(ss / n);
      if (!(scale_ > 0.0) || !std::isfinite(scale_)) scale_ = 1.0;
    }
    const surrogate::Dataset data = internal_data();
    const std::vector<double> theta =
        hyperlearn::learn(setup_.learn, data, setup_.surrogate, setup_.learn_search);
    setup_.surrogate.kernel = kernels::bind(setup_.surrogate.kernel, theta, setup_.dim);
    refit(data, setup_.surrogate.sigma_n2);
    last_record().t_learn_ms += elapsed_ms(t0);
  }

  void observe(const Point& u, double y) {
    const auto t0 = Clock::now();
    try {
      state_ = surrogate::update(std::move(*state_), u, internal(y));
    } catch (const NotPositiveDefinite&) {
      refit(internal_data(), 100.0 * setup_.surrogate.sigma_n2);
    }
    last_record().t_fit_ms = elapsed_ms(t0);
    if (hedge_) criteria::hedge_update(*hedge_, *state_);
  }

  double incumbent_internal() const { return state_->data().best_y(); }

  // Criterion objective over the unit box for one (non-Hedge) criterion.
  double score(const criteria::CriterionSpec& crit, const Point& u) {
    const surrogate::Prediction pred = surrogate::predict(*state_, u);
    const double v = criteria::evaluate(crit, pred, incumbent_internal(), criterion_rng_);
    return std::isnan(v) ? -std::numeric_limits<double>::infinity() : v;
  }

  // Picks the next point given a maximizer for a single criterion.
  template <typename Argmax>
  Point propose(Argmax&& argmax) {
    if (!hedge_) return argmax(setup_.criterion);
    Points nominees;
    for (const auto& child : setup_.criterion.children) nominees.push_back(argmax(child));
    return criteria::hedge_select(*hedge_, nominees, hedge_rng_).first;
  }

  void finish_record(std::size_t iteration) {
    auto& rec = last_record();
    rec.theta = kernels::hyperparameters(setup_.surrogate.kernel);
    if (hedge_) rec.hedge_gains = hedge_->gains;
    if (params_.verbose_level > 0) {
      std::clog << "iteration " << iteration << ": y = " << rec.y
                << ", incumbent = " << rec.incumbent << "\n";
    }
  }

  bool relearn_due(std::size_t iteration) const {
    const std::size_t every = setup_.learn.update_every;
    return every > 0 && iteration % every == 0 && iteration < params_.n_iterations;
  }

  RunResult result() {
    compute_metrics(trace_, problem_.known_optimum);
    RunResult r;
    const auto best = static_cast<std::size_t>(
        std::min_element(raw_y_.begin(), raw_y_.end()) - raw_y_.begin());
    r.best_x = trace_.records[best].query;
    r.best_y = raw_y_[best];
    r.trace = std::move(trace_);
    return r;
  }

 private:
  double internal(double y) const { return (y - shift_) / scale_; }

  surrogate::Dataset internal_data() const {
    surrogate::Dataset data;
    for (std::size_t i = 0; i < raw_y_.size(); ++i) data.add(units_[i], internal(raw_y_[i]));
    return data;
  }

  void refit(const surrogate::Dataset& data, double nugget) {
    surrogate::SurrogateConfig config = setup_.surrogate;
    config.sigma_n2 = nugget;
    for (;;) {
      try {
        state_ = surrogate::fit(config, data);
        return;
      } catch (const NotPositiveDefinite&) {
        if (config.sigma_n2 >= kNuggetCap) throw;
        config.sigma_n2 = std::min(kNuggetCap, std::max(100.0 * config.sigma_n2, 1e-8));
      }
    }
  }

  const TargetProblem& problem_;
  const BoptParams& params_;
  RunSetup setup_;
  UnitMap map_;
  Rng design_rng_;
  Rng criterion_rng_;
  Rng hedge_rng_;
  std::optional<criteria::HedgeState> hedge_;
  std::optional<surrogate::PosteriorState> state_;
  Points units_;
  std::vector<double> raw_y_;
  double best_raw_ = std::numeric_limits<double>::infinity();
  double shift_ = 0.0;
  double scale_ = 1.0;
  RunTrace trace_;
};

}  // namespace

RunSetup resolve(const BoptParams& params, std::size_t dim, bool continuous) {
  if (dim == 0) throw InvalidParams("problem dimension must be at least 1");
  if (params.n_iterations < 1) throw InvalidParams("n_iterations must be at least 1");
  if (continuous) {
    const auto& b = params.bounds;
    if (b.lower.size() != dim || b.upper.size() != dim) {
      throw InvalidParams("bounds must have " + std::to_string(dim) + " entries");
    }
    for (std::size_t i = 0; i < dim; ++i) {
      if (!std::isfinite(b.lower[i]) || !std::isfinite(b.upper[i]) || !(b.lower[i] < b.upper[i])) {
        throw InvalidParams("bounds must satisfy lower < upper elementwise");
      }
    }
  }

  RunSetup setup;
  setup.dim = dim;

  const kernels::KernelSpec kernel = kernels::parse_kernel(params.kernel.name);
  const std::size_t n_hp = kernels::n_hyperparameters(kernel, dim);
  if (params.kernel.n_hp != 0 && params.kernel.n_hp != n_hp) {
    throw InvalidParams("kernel.n_hp is " + std::to_string(params.kernel.n_hp) + " but '" +
                        params.kernel.name + "' has " + std::to_string(n_hp) +
                        " hyperparameters");
  }
  std::vector<double> hp_mean = params.kernel.hp_mean;
  std::vector<double> hp_std = params.kernel.hp_std;
  if (hp_mean.empty()) hp_mean.assign(n_hp, kDefaultHpMean);
  if (hp_std.empty()) hp_std.assign(n_hp, kDefaultHpStd);
  if (hp_mean.size() != n_hp || hp_std.size() != n_hp) {
    throw InvalidParams("kernel.hp_mean and kernel.hp_std need " + std::to_string(n_hp) +
                        " entries");
  }
  for (std::size_t i = 0; i < n_hp; ++i) {
    if (!(hp_mean[i] > 0.0) || !(hp_std[i] > 0.0)) {
      throw InvalidParams("kernel.hp_mean and kernel.hp_std must be positive");
    }
  }

  setup.surrogate.kind = surrogate::parse_surrogate(params.surr_name);
  setup.surrogate.mean = means::bind(means::parse_mean(params.mean.name), dim);
  setup.surrogate.kernel = kernels::bind(kernel, hp_mean, dim);
  if (!(params.sigma_n2 >= 0.0) || !std::isfinite(params.sigma_n2)) {
    throw InvalidParams("sigma_n2 must be finite and non-negative");
  }
  if (!(params.sigma_s2 > 0.0) || !std::isfinite(params.sigma_s2)) {
    throw InvalidParams("sigma_s2 must be finite and positive");
  }
  setup.surrogate.sigma_n2 = params.sigma_n2;
  setup.surrogate.sigma_s2 = params.sigma_s2;
  const std::size_t m = means::n_features(setup.surrogate.mean, dim);
  if (setup.surrogate.kind == surrogate::SurrogateKind::GaussianNIG) {
    const auto mm = static_cast<Eigen::Index>(m);
    surrogate::NIGPrior prior;
    prior.w0 = Eigen::VectorXd::Zero(mm);
    prior.W = 100.0 * Eigen::MatrixXd::Identity(mm, mm);
    prior.alpha = 1.0;
    prior.beta = 1.0;
    setup.surrogate.prior = prior;
  }
  setup.normalize_y = setup.surrogate.kind != surrogate::SurrogateKind::StudentTJeffreys;

  if (params.n_crit_params != params.crit_params.size()) {
    throw InvalidParams("n_crit_params is " + std::to_string(params.n_crit_params) +
                        " but crit_params has " + std::to_string(params.crit_params.size()) +
                        " entries");
  }
  setup.criterion = criteria::parse_criterion(params.crit_name, params.crit_params);

  setup.learn.method = hyperlearn::parse_learn_type(params.l_type);
  setup.learn.update_every = params.l_update_every;
  for (std::size_t i = 0; i < n_hp; ++i) {
    setup.learn.log_prior_mean.push_back(std::log(hp_mean[i]));
    setup.learn.log_prior_std.push_back(hp_std[i]);
  }
  setup.learn.log_lower.assign(n_hp, hyperlearn::kDefaultLogLower);
  setup.learn.log_upper.assign(n_hp, hyperlearn::kDefaultLogUpper);

  setup.n_init = params.n_init == 0 ? initdesign::default_size(dim, m) : params.n_init;
  if (setup.surrogate.kind == surrogate::SurrogateKind::StudentTJeffreys && setup.n_init <= m) {
    throw InvalidParams("n_init must exceed the number of mean features for " +
                        params.surr_name);
  }

  setup.criterion_search = {kCriterionBudget, kGlobalFraction};
  setup.learn_search = {kLearnBudget, kGlobalFraction};
  return setup;
}

RunResult run_continuous(const TargetProblem& problem, const BoptParams& params) {
  if (!problem.evaluate) throw InvalidParams("target problem has no evaluate callback");
  const std::size_t dim = params.bounds.lower.size();
  RunSetup setup = resolve(params, dim, true);

  UnitMap map;
  map.lower = Eigen::Map<const Eigen::VectorXd>(params.bounds.lower.data(), static_cast<Eigen::Index>(dim));
  map.width = Eigen::Map<const Eigen::VectorXd>(params.bounds.upper.data(), static_cast<Eigen::Index>(dim)) - map.lower;

  Engine engine(problem, params, std::move(setup), map);
  const std::size_t n_init = engine.setup().n_init;

  // Initial design: LHS, with unreachable points replaced by uniform draws.
  Points design = initdesign::latin_hypercube(n_init, dim, engine.design_rng());
  std::size_t attempts = 0;
  for (auto& u : design) {
    ++attempts;
    while (!engine.reachable_unit(u)) {
      if (++attempts > 100 * n_init) {
        throw NoFeasiblePoint("initial design found no reachable point in " +
                              std::to_string(100 * n_init) + " attempts");
      }
      u = initdesign::uniform(1, dim, engine.design_rng()).front();
    }
  }
  for (const auto& u : design) {
    engine.evaluate(u, 0);
    engine.finish_record(0);
  }
  engine.learn_and_fit();
  engine.last_record().theta = kernels::hyperparameters(engine.setup().surrogate.kernel);

  const inneropt::Box box = inneropt::Box::unit(dim);
  const auto feasible = [&](const Point& u) { return engine.reachable_unit(u); };
  for (std::size_t it = 1; it <= params.n_iterations; ++it) {
    const auto t_crit = Clock::now();
    const Point next = engine.propose([&](const criteria::CriterionSpec& crit) {
      const auto objective = [&](const Point& u) { return engine.score(crit, u); };
      try {
        return inneropt::maximize(objective, box, engine.setup().criterion_search, feasible).point;
      } catch (const NoFeasiblePoint&) {
        for (int tries = 0; tries < 100; ++tries) {
          Point u = initdesign::uniform(1, dim, engine.design_rng()).front();
          if (engine.reachable_unit(u)) return u;
        }
        throw;
      }
    });
    const double crit_ms = elapsed_ms(t_crit);

    const double y = engine.evaluate(next, it);
    engine.last_record().t_crit_ms = crit_ms;
    engine.observe(next, y);
    if (engine.relearn_due(it)) engine.learn_and_fit();
    engine.finish_record(it);
  }
  return engine.result();
}

RunResult run_discrete(const TargetProblem& problem, const BoptParams& params) {
  if (!problem.evaluate) throw InvalidParams("target problem has no evaluate callback");
  if (problem.candidates.empty()) throw InvalidParams("discrete domain has no candidates");
  const auto dim = static_cast<std::size_t>(problem.candidates.front().size());
  for (const auto& c : problem.candidates) {
    if (static_cast<std::size_t>(c.size()) != dim) {
      throw InvalidParams("discrete candidates have mixed dimensions");
    }
  }
  RunSetup setup = resolve(params, dim, false);

  UnitMap map;
  map.lower = problem.candidates.front();
  Eigen::VectorXd upper = problem.candidates.front();
  for (const auto& c : problem.candidates) {
    map.lower = map.lower.cwiseMin(c);
    upper = upper.cwiseMax(c);
  }
  map.width = upper - map.lower;

  // Unit-box image of each reachable candidate.
  Points units;
  for (const auto& c : problem.candidates) {
    if (!problem.check_reachability || problem.check_reachability(c)) {
      units.push_back(map.to_unit(c));
    }
  }
  if (units.empty()) throw NoFeasiblePoint("no reachable candidate");

  Engine engine(problem, params, std::move(setup), map);
  std::vector<bool> tested(units.size(), false);

  std::vector<std::size_t> order(units.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), engine.design_rng());
  const std::size_t n_init = std::min(engine.setup().n_init, units.size());
  for (std::size_t k = 0; k < n_init; ++k) {
    tested[order[k]] = true;
    engine.evaluate(units[order[k]], 0);
    engine.finish_record(0);
  }
  if (n_init == units.size()) return engine.result();
  engine.learn_and_fit();
  engine.last_record().theta = kernels::hyperparameters(engine.setup().surrogate.kernel);

  for (std::size_t it = 1; it <= params.n_iterations; ++it) {
    const auto t_crit = Clock::now();
    std::size_t chosen = units.size();
    const Point next = engine.propose([&](const criteria::CriterionSpec& crit) {
      std::size_t best = units.size();
      double best_value = -std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < units.size(); ++i) {
        if (tested[i]) continue;
        const double v = engine.score(crit, units[i]);
        if (best == units.size() || v > best_value) {
          best = i;
          best_value = v;
        }
      }
      return units[best];
    });
    for (std::size_t i = 0; i < units.size(); ++i) {
      if (!tested[i] && units[i] == next) {
        chosen = i;
        break;
      }
    }
    tested[chosen] = true;
    const double crit_ms = elapsed_ms(t_crit);

    const double y = engine.evaluate(next, it);
    engine.last_record().t_crit_ms = crit_ms;
    const bool exhausted = std::all_of(tested.begin(), tested.end(), [](bool t) { return t; });
    if (!exhausted) {
      engine.observe(next, y);
      if (engine.relearn_due(it)) engine.learn_and_fit();
    }
    engine.finish_record(it);
    if (exhausted) break;
  }
  return engine.result();
}

void compute_metrics(RunTrace& trace, const std::optional<KnownOptimum>& known) {
  double best = std::numeric_limits<double>::infinity();
  const Point* best_x = nullptr;
  double sum_y = 0.0;
  std::size_t count = 0;
  for (auto& rec : trace.records) {
    ++count;
    sum_y += rec.y;
    if (best_x == nullptr || rec.y < best) {
      best = rec.y;
      best_x = &rec.query;
    }
    if (!known) {
      rec.gap = rec.distance = rec.regret = kNaN;
      continue;
    }
    rec.gap = best - known->f;
    rec.regret = (sum_y - static_cast<double>(count) * known->f) / static_cast<double>(count);
    rec.distance = kNaN;
    for (const auto& x_star : known->x) {
      const double d = (*best_x - x_star).norm();
      if (std::isnan(rec.distance) || d < rec.distance) rec.distance = d;
    }
  }
}

}  // namespace bayesopt
