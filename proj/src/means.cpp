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

#include "bayesopt/means.hpp"

#include <charconv>
#include <cmath>

#include "bayesopt/errors.hpp"
#include "bayesopt/initdesign.hpp"
#include "detail/expression.hpp"

namespace bayesopt::means {

MeanSpec parse_mean(std::string_view expr) {
  const detail::Expression e = detail::parse_expression(expr);
  MeanSpec spec;
  if (e.name == "mRadial") {
    if (e.arguments.size() != 1 || !e.arguments[0].arguments.empty()) {
      throw ParseError("mRadial takes exactly one center count", e.offset);
    }
    const auto& text = e.arguments[0].name;
    std::size_t count = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), count);
    if (ec != std::errc() || ptr != text.data() + text.size() || count == 0) {
      throw ParseError("mRadial center count must be a positive integer",
                       e.arguments[0].offset);
    }
    spec.kind = MeanKind::Radial;
    spec.radial_count = count;
    return spec;
  }
  if (e.has_arguments) throw ParseError("'" + e.name + "' takes no arguments", e.offset);
  if (e.name == "mZero") {
    spec.kind = MeanKind::Zero;
  } else if (e.name == "mConst") {
    spec.kind = MeanKind::Const;
  } else if (e.name == "mLinear") {
    spec.kind = MeanKind::Linear;
  } else if (e.name == "mLinearConst") {
    spec.kind = MeanKind::LinearConst;
  } else {
    throw ParseError("unknown mean '" + e.name + "'", e.offset);
  }
  return spec;
}

std::string to_string(const MeanSpec& spec) {
  switch (spec.kind) {
    case MeanKind::Zero:
      return "mZero";
    case MeanKind::Const:
      return "mConst";
    case MeanKind::Linear:
      return "mLinear";
    case MeanKind::LinearConst:
      return "mLinearConst";
    case MeanKind::Radial:
      return "mRadial(" + std::to_string(spec.radial_count) + ")";
  }
  return {};
}

std::size_t n_features(const MeanSpec& spec, std::size_t dim) {
  switch (spec.kind) {
    case MeanKind::Zero:
      return 0;
    case MeanKind::Const:
      return 1;
    case MeanKind::Linear:
      return dim;
    case MeanKind::LinearConst:
      return dim + 1;
    case MeanKind::Radial:
      return spec.radial_count;
  }
  return 0;
}

MeanSpec bind(const MeanSpec& spec, std::size_t dim) {
  MeanSpec bound = spec;
  bound.dim = dim;
  bound.centers.clear();
  if (spec.kind == MeanKind::Radial) {
    Rng rng(kRadialCenterSeed);
    bound.centers = initdesign::latin_hypercube(spec.radial_count, dim, rng);
  }
  return bound;
}

Eigen::VectorXd features(const MeanSpec& spec, const Point& x) {
  if (static_cast<std::size_t>(x.size()) != spec.dim) {
    throw DimensionMismatch("mean bound for dimension " + std::to_string(spec.dim) +
                            ", got a point of dimension " + std::to_string(x.size()));
  }
  const auto m = static_cast<Eigen::Index>(n_features(spec, spec.dim));
  Eigen::VectorXd phi(m);
  switch (spec.kind) {
    case MeanKind::Zero:
      break;
    case MeanKind::Const:
      phi(0) = 1.0;
      break;
    case MeanKind::Linear:
      phi = x;
      break;
    case MeanKind::LinearConst:
      phi(0) = 1.0;
      phi.tail(x.size()) = x;
      break;
    case MeanKind::Radial:
      for (Eigen::Index j = 0; j < m; ++j) {
        const double r2 = (x - spec.centers[static_cast<std::size_t>(j)]).squaredNorm();
        phi(j) = std::exp(-0.5 * r2 / (kRadialWidth * kRadialWidth));
      }
      break;
  }
  return phi;
}

Eigen::MatrixXd feature_matrix(const MeanSpec& spec, std::span<const Point> points) {
  const auto m = static_cast<Eigen::Index>(n_features(spec, spec.dim));
  Eigen::MatrixXd phi(m, static_cast<Eigen::Index>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    phi.col(static_cast<Eigen::Index>(i)) = features(spec, points[i]);
  }
  return phi;
}

}  // namespace bayesopt::means
