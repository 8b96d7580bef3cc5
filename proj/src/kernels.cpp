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

#include "bayesopt/kernels.hpp"

#include <cmath>
#include <string>

#include "bayesopt/errors.hpp"
#include "detail/expression.hpp"

namespace bayesopt::kernels {

namespace {

struct NameEntry {
  const char* name;
  KernelKind kind;
};

constexpr NameEntry kNames[] = {
    {"kSEISO", KernelKind::SEIso},           {"kSEARD", KernelKind::SEArd},
    {"kMaternISO1", KernelKind::MaternIso1}, {"kMaternISO3", KernelKind::MaternIso3},
    {"kMaternISO5", KernelKind::MaternIso5}, {"kConst", KernelKind::Const},
    {"kSum", KernelKind::Sum},               {"kProd", KernelKind::Prod},
};

bool is_combinator(KernelKind kind) {
  return kind == KernelKind::Sum || kind == KernelKind::Prod;
}

KernelSpec from_expression(const detail::Expression& expr) {
  KernelSpec spec;
  bool found = false;
  for (const auto& entry : kNames) {
    if (expr.name == entry.name) {
      spec.kind = entry.kind;
      found = true;
      break;
    }
  }
  if (!found) throw ParseError("unknown kernel '" + expr.name + "'", expr.offset);
  if (is_combinator(spec.kind)) {
    if (!expr.has_arguments) {
      throw ParseError("'" + expr.name + "' needs at least one argument", expr.offset);
    }
    for (const auto& arg : expr.arguments) spec.children.push_back(from_expression(arg));
  } else if (expr.has_arguments) {
    throw ParseError("'" + expr.name + "' takes no arguments", expr.offset);
  }
  return spec;
}

std::size_t leaf_count(const KernelSpec& spec, std::size_t dim) {
  switch (spec.kind) {
    case KernelKind::SEArd:
      return dim;
    case KernelKind::Sum:
    case KernelKind::Prod:
      return 0;
    default:
      return 1;
  }
}

void bind_into(KernelSpec& spec, std::span<const double> theta, std::size_t& pos,
               std::size_t dim) {
  spec.dim = dim;
  if (is_combinator(spec.kind)) {
    for (auto& child : spec.children) bind_into(child, theta, pos, dim);
    return;
  }
  const std::size_t count = leaf_count(spec, dim);
  spec.theta.assign(theta.begin() + static_cast<std::ptrdiff_t>(pos),
                    theta.begin() + static_cast<std::ptrdiff_t>(pos + count));
  pos += count;
}

void collect(const KernelSpec& spec, std::vector<double>& out) {
  out.insert(out.end(), spec.theta.begin(), spec.theta.end());
  for (const auto& child : spec.children) collect(child, out);
}

double require_scale(const KernelSpec& spec) {
  if (spec.theta.empty()) throw InvalidParams("kernel hyperparameters are not bound");
  return spec.theta.front();
}

double evaluate(const KernelSpec& spec, const Point& x1, const Point& x2) {
  switch (spec.kind) {
    case KernelKind::SEIso: {
      const double l = require_scale(spec);
      return std::exp(-0.5 * (x1 - x2).squaredNorm() / (l * l));
    }
    case KernelKind::SEArd: {
      if (spec.theta.size() != static_cast<std::size_t>(x1.size())) {
        throw DimensionMismatch("kSEARD has " + std::to_string(spec.theta.size()) +
                                " length-scales for a point of dimension " +
                                std::to_string(x1.size()));
      }
      double sum = 0.0;
      for (Eigen::Index i = 0; i < x1.size(); ++i) {
        const double u = (x1(i) - x2(i)) / spec.theta[static_cast<std::size_t>(i)];
        sum += u * u;
      }
      return std::exp(-0.5 * sum);
    }
    case KernelKind::MaternIso1: {
      const double r = (x1 - x2).norm() / require_scale(spec);
      return std::exp(-r);
    }
    case KernelKind::MaternIso3: {
      const double r = std::sqrt(3.0) * (x1 - x2).norm() / require_scale(spec);
      return (1.0 + r) * std::exp(-r);
    }
    case KernelKind::MaternIso5: {
      const double r = std::sqrt(5.0) * (x1 - x2).norm() / require_scale(spec);
      return (1.0 + r + r * r / 3.0) * std::exp(-r);
    }
    case KernelKind::Const: {
      const double c = require_scale(spec);
      return c * c;
    }
    case KernelKind::Sum: {
      double sum = 0.0;
      for (const auto& child : spec.children) sum += evaluate(child, x1, x2);
      return sum;
    }
    case KernelKind::Prod: {
      double prod = 1.0;
      for (const auto& child : spec.children) prod *= evaluate(child, x1, x2);
      return prod;
    }
  }
  return 0.0;
}

}  // namespace

KernelSpec parse_kernel(std::string_view expr) {
  return from_expression(detail::parse_expression(expr));
}

std::string to_string(const KernelSpec& spec) {
  std::string out;
  for (const auto& entry : kNames) {
    if (entry.kind == spec.kind) {
      out = entry.name;
      break;
    }
  }
  if (is_combinator(spec.kind)) {
    out += '(';
    for (std::size_t i = 0; i < spec.children.size(); ++i) {
      if (i > 0) out += ',';
      out += to_string(spec.children[i]);
    }
    out += ')';
  }
  return out;
}

std::size_t n_hyperparameters(const KernelSpec& spec, std::size_t dim) {
  std::size_t count = leaf_count(spec, dim);
  for (const auto& child : spec.children) count += n_hyperparameters(child, dim);
  return count;
}

KernelSpec bind(const KernelSpec& spec, std::span<const double> theta, std::size_t dim) {
  const std::size_t expected = n_hyperparameters(spec, dim);
  if (theta.size() != expected) {
    throw InvalidParams("kernel '" + to_string(spec) + "' expects " +
                        std::to_string(expected) + " hyperparameters, got " +
                        std::to_string(theta.size()));
  }
  for (double t : theta) {
    if (!(t > 0.0) || !std::isfinite(t)) {
      throw InvalidParams("kernel hyperparameters must be positive and finite");
    }
  }
  KernelSpec bound = spec;
  std::size_t pos = 0;
  bind_into(bound, theta, pos, dim);
  return bound;
}

std::vector<double> hyperparameters(const KernelSpec& spec) {
  std::vector<double> out;
  collect(spec, out);
  return out;
}

double kernel_eval(const KernelSpec& spec, const Point& x1, const Point& x2) {
  if (x1.size() != x2.size()) {
    throw DimensionMismatch("kernel_eval: points of dimension " +
                            std::to_string(x1.size()) + " and " +
                            std::to_string(x2.size()));
  }
  if (spec.dim != 0 && static_cast<std::size_t>(x1.size()) != spec.dim) {
    throw DimensionMismatch("kernel bound for dimension " + std::to_string(spec.dim) +
                            ", got a point of dimension " + std::to_string(x1.size()));
  }
  return evaluate(spec, x1, x2);
}

Eigen::MatrixXd gram(const KernelSpec& spec, std::span<const Point> points, double nugget) {
  if (nugget < 0.0) throw InvalidParams("nugget must be non-negative");
  const auto n = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd k(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& xi = points[static_cast<std::size_t>(i)];
    for (Eigen::Index j = i; j < n; ++j) {
      const double v = kernel_eval(spec, xi, points[static_cast<std::size_t>(j)]);
      k(i, j) = v;
      k(j, i) = v;
    }
    k(i, i) += nugget;
  }
  return k;
}

Eigen::VectorXd cross_vector(const KernelSpec& spec, std::span<const Point> points,
                             const Point& query) {
  Eigen::VectorXd k(static_cast<Eigen::Index>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    k(static_cast<Eigen::Index>(i)) = kernel_eval(spec, points[i], query);
  }
  return k;
}

}  // namespace bayesopt::kernels
