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

#include "bayesopt/inneropt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "bayesopt/errors.hpp"

namespace bayesopt::inneropt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Jones' epsilon for the sufficient-decrease test on potentially optimal boxes.
constexpr double kDirectEpsilon = 1e-4;
constexpr double kSimplexStep = 0.1;
constexpr double kSimplexTolerance = 1e-12;

// Wraps the user objective in minimization form over normalized coordinates
// and keeps the best acceptable point.
class Evaluator {
 public:
  Evaluator(const Objective& obj, const Feasibility& feasible, const Box& box,
            std::size_t budget)
      : obj_(obj), feasible_(feasible), box_(box), budget_(budget) {}

  bool exhausted() const { return count_ >= budget_; }
  std::size_t count() const { return count_; }

  Point to_box(const Point& u) const {
    return box_.lower.array() + u.array() * (box_.upper - box_.lower).array();
  }

  // Returns -obj, or +inf for rejected points.
  double operator()(const Point& u) {
    ++count_;
    const Point x = to_box(u);
    if (feasible_ && !feasible_(x)) return kInf;
    const double v = obj_(x);
    if (std::isnan(v) || v == -kInf) return kInf;
    if (!found_ || v > best_value_) {
      found_ = true;
      best_value_ = v;
      best_u_ = u;
    }
    return -v;
  }

  bool found() const { return found_; }
  const Point& best_u() const { return best_u_; }
  double best_value() const { return best_value_; }

 private:
  const Objective& obj_;
  const Feasibility& feasible_;
  const Box& box_;
  std::size_t budget_;
  std::size_t count_ = 0;
  bool found_ = false;
  double best_value_ = -kInf;
  Point best_u_;
};

struct Rect {
  Point center;
  std::vector<int> level;  // side along i is 3^-level[i]
  double f = kInf;
  double size = 0.0;  // half diagonal
};

double half_diagonal(const std::vector<int>& level) {
  double sum = 0.0;
  for (int l : level) {
    const double side = std::pow(3.0, -l);
    sum += side * side;
  }
  return 0.5 * std::sqrt(sum);
}

// Indices of potentially optimal rectangles (Jones et al.): the lower-right
// convex hull of (size, f) that also passes the sufficient-decrease test.
std::vector<std::size_t> potentially_optimal(const std::vector<Rect>& rects) {
  double worst = -kInf;
  for (const auto& r : rects) {
    if (std::isfinite(r.f)) worst = std::max(worst, r.f);
  }
  const double fill = std::isfinite(worst) ? worst + 1.0 : 0.0;
  const auto value = [&](const Rect& r) { return std::isfinite(r.f) ? r.f : fill; };

  // Best rectangle per distinct size, sorted by size.
  std::vector<std::size_t> order(rects.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return rects[a].size < rects[b].size;
  });
  std::vector<std::size_t> groups;
  for (std::size_t idx : order) {
    if (!groups.empty()) {
      const auto& last = rects[groups.back()];
      if (std::abs(last.size - rects[idx].size) <= 1e-13 * std::max(1.0, last.size)) {
        if (value(rects[idx]) < value(last)) groups.back() = idx;
        continue;
      }
    }
    groups.push_back(idx);
  }

  std::size_t start = 0;
  double fmin = kInf;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const double v = value(rects[groups[g]]);
    if (v <= fmin) {
      fmin = v;
      start = g;
    }
  }

  std::vector<std::size_t> hull;
  for (std::size_t g = start; g < groups.size(); ++g) {
    const auto& c = rects[groups[g]];
    while (hull.size() >= 2) {
      const auto& a = rects[hull[hull.size() - 2]];
      const auto& b = rects[hull.back()];
      const double cross = (b.size - a.size) * (value(c) - value(a)) -
                           (value(b) - value(a)) * (c.size - a.size);
      if (cross <= 0.0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(groups[g]);
  }

  std::vector<std::size_t> selected;
  const double threshold = fmin - kDirectEpsilon * std::abs(fmin);
  for (std::size_t h = 0; h < hull.size(); ++h) {
    if (h + 1 == hull.size()) {
      selected.push_back(hull[h]);
      break;
    }
    const auto& r = rects[hull[h]];
    const auto& next = rects[hull[h + 1]];
    const double slope = (value(next) - value(r)) / (next.size - r.size);
    if (value(r) - slope * r.size <= threshold) selected.push_back(hull[h]);
  }
  return selected;
}

void direct(Evaluator& eval, std::size_t dim, std::size_t budget) {
  std::vector<Rect> rects;
  Rect root;
  root.center = Point::Constant(static_cast<Eigen::Index>(dim), 0.5);
  root.level.assign(dim, 0);
  root.size = half_diagonal(root.level);
  root.f = eval(root.center);
  rects.push_back(root);
  if (dim == 0) return;

  while (eval.count() < budget) {
    const std::vector<std::size_t> selected = potentially_optimal(rects);
    for (std::size_t idx : selected) {
      if (eval.count() >= budget) return;
      const int min_level = *std::min_element(rects[idx].level.begin(), rects[idx].level.end());
      if (min_level > 30) continue;  // below double resolution
      std::vector<std::size_t> dims;
      for (std::size_t i = 0; i < dim; ++i) {
        if (rects[idx].level[i] == min_level) dims.push_back(i);
      }
      const double delta = std::pow(3.0, -(min_level + 1));

      struct Probe {
        std::size_t dim;
        Rect lo, hi;
        double w;
      };
      std::vector<Probe> probes;
      for (std::size_t i : dims) {
        if (eval.count() + 2 > budget) break;
        Probe p{i, rects[idx], rects[idx], kInf};
        p.lo.center(static_cast<Eigen::Index>(i)) -= delta;
        p.hi.center(static_cast<Eigen::Index>(i)) += delta;
        p.lo.f = eval(p.lo.center);
        p.hi.f = eval(p.hi.center);
        p.w = std::min(p.lo.f, p.hi.f);
        probes.push_back(std::move(p));
      }
      if (probes.empty()) return;
      std::stable_sort(probes.begin(), probes.end(),
                       [](const Probe& a, const Probe& b) { return a.w < b.w; });
      // Trisect along the best dimensions first so their children stay largest.
      for (auto& p : probes) {
        rects[idx].level[p.dim] += 1;
        p.lo.level = rects[idx].level;
        p.hi.level = rects[idx].level;
      }
      for (auto& p : probes) {
        p.lo.size = half_diagonal(p.lo.level);
        p.hi.size = half_diagonal(p.hi.level);
        rects.push_back(std::move(p.lo));
        rects.push_back(std::move(p.hi));
      }
      rects[idx].size = half_diagonal(rects[idx].level);
    }
  }
}

Point clamp_unit(Point u) { return u.cwiseMax(0.0).cwiseMin(1.0); }

void nelder_mead(Evaluator& eval, const Point& start, std::size_t budget) {
  const auto dim = static_cast<std::size_t>(start.size());
  if (dim == 0) return;
  std::vector<Point> simplex;
  std::vector<double> f;
  simplex.push_back(start);
  f.push_back(eval(start));
  for (std::size_t i = 0; i < dim && eval.count() < budget; ++i) {
    Point v = start;
    const auto ii = static_cast<Eigen::Index>(i);
    v(ii) += v(ii) + kSimplexStep <= 1.0 ? kSimplexStep : -kSimplexStep;
    simplex.push_back(v);
    f.push_back(eval(v));
  }
  if (simplex.size() != dim + 1) return;

  std::vector<std::size_t> order(dim + 1);
  while (eval.count() < budget) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return f[a] < f[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[dim - 1];

    double spread = 0.0;
    for (const auto& v : simplex) spread = std::max(spread, (v - simplex[best]).lpNorm<Eigen::Infinity>());
    if (spread < kSimplexTolerance) return;

    Point centroid = Point::Zero(static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i != worst) centroid += simplex[i];
    }
    centroid /= static_cast<double>(dim);

    const Point reflected = clamp_unit(centroid + (centroid - simplex[worst]));
    const double fr = eval(reflected);
    if (fr < f[best]) {
      if (eval.count() >= budget) {
        simplex[worst] = reflected;
        f[worst] = fr;
        return;
      }
      const Point expanded = clamp_unit(centroid + 2.0 * (centroid - simplex[worst]));
      const double fe = eval(expanded);
      if (fe < fr) {
        simplex[worst] = expanded;
        f[worst] = fe;
      } else {
        simplex[worst] = reflected;
        f[worst] = fr;
      }
      continue;
    }
    if (fr < f[second]) {
      simplex[worst] = reflected;
      f[worst] = fr;
      continue;
    }
    if (eval.count() >= budget) return;
    const bool outside = fr < f[worst];
    const Point contracted = outside ? clamp_unit(centroid + 0.5 * (reflected - centroid))
                                     : clamp_unit(centroid + 0.5 * (simplex[worst] - centroid));
    const double fc = eval(contracted);
    if (fc < std::min(fr, f[worst])) {
      simplex[worst] = contracted;
      f[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= dim && eval.count() < budget; ++i) {
      if (i == best) continue;
      simplex[i] = simplex[best] + 0.5 * (simplex[i] - simplex[best]);
      f[i] = eval(simplex[i]);
    }
  }
}

}  // namespace

Box Box::unit(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return {Eigen::VectorXd::Zero(d), Eigen::VectorXd::Ones(d)};
}

bool Box::contains(const Point& x) const {
  if (x.size() != lower.size()) return false;
  return (x.array() >= lower.array()).all() && (x.array() <= upper.array()).all();
}

InnerResult maximize(const Objective& obj, const Box& box, const InnerOptimizer& opt,
                     const Feasibility& feasible) {
  if (box.lower.size() != box.upper.size()) {
    throw DimensionMismatch("box bounds have different dimensions");
  }
  if (!box.lower.allFinite() || !box.upper.allFinite() ||
      (box.upper.array() < box.lower.array()).any()) {
    throw InvalidParams("box must be finite with lower <= upper");
  }
  if (opt.budget < 10) throw InvalidParams("inner optimizer budget must be at least 10");
  if (!(opt.global_frac > 0.0 && opt.global_frac < 1.0)) {
    throw InvalidParams("global_frac must lie in (0, 1)");
  }

  Evaluator eval(obj, feasible, box, opt.budget);
  const auto global_budget = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::floor(opt.global_frac * static_cast<double>(opt.budget))));
  direct(eval, box.dim(), global_budget);
  if (eval.found()) nelder_mead(eval, eval.best_u(), opt.budget);
  if (!eval.found()) throw NoFeasiblePoint("no feasible point found by the inner optimizer");

  InnerResult result;
  result.point = eval.to_box(eval.best_u());
  // Guard against rounding just outside the box.
  result.point = result.point.cwiseMax(box.lower).cwiseMin(box.upper);
  result.value = eval.best_value();
  result.evaluations = eval.count();
  return result;
}

}  // namespace bayesopt::inneropt
