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

#include "bayesopt/trace_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "bayesopt/errors.hpp"

namespace bayesopt {

namespace {

constexpr const char* kScalarColumns[] = {"y",        "incumbent", "gap",         "distance",
                                          "regret",   "t_fit_ms",  "t_crit_ms",   "t_target_ms",
                                          "t_learn_ms"};
constexpr std::size_t kNumScalar = std::size(kScalarColumns);

std::string format(double v) {
  if (std::isnan(v)) return {};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return fields;
}

double parse_double(const std::string& field, std::size_t offset) {
  if (field.empty()) return std::numeric_limits<double>::quiet_NaN();
  char* end = nullptr;
  const double v = std::strtod(field.c_str(), &end);
  if (end != field.c_str() + field.size()) {
    throw ParseError("invalid number '" + field + "'", offset);
  }
  return v;
}

std::size_t count_prefixed(const std::vector<std::string>& header, std::size_t from,
                           const std::string& prefix) {
  std::size_t k = 0;
  while (from + k < header.size() && header[from + k] == prefix + std::to_string(k)) ++k;
  return k;
}

}  // namespace

void write_trace_csv(std::ostream& out, const RunTrace& trace) {
  std::size_t n_theta = 0;
  std::size_t n_gain = 0;
  for (const auto& r : trace.records) {
    n_theta = std::max(n_theta, r.theta.size());
    n_gain = std::max(n_gain, r.hedge_gains.size());
  }
  out << "iteration";
  for (std::size_t i = 0; i < trace.dim; ++i) out << ",x" << i;
  for (const char* c : kScalarColumns) out << ',' << c;
  for (std::size_t i = 0; i < n_theta; ++i) out << ",theta" << i;
  for (std::size_t i = 0; i < n_gain; ++i) out << ",gain" << i;
  out << '\n';
  for (const auto& r : trace.records) {
    out << r.iteration;
    for (std::size_t i = 0; i < trace.dim; ++i) {
      out << ',' << (i < static_cast<std::size_t>(r.query.size())
                         ? format(r.query(static_cast<Eigen::Index>(i)))
                         : std::string());
    }
    for (double v : {r.y, r.incumbent, r.gap, r.distance, r.regret, r.t_fit_ms, r.t_crit_ms,
                     r.t_target_ms, r.t_learn_ms}) {
      out << ',' << format(v);
    }
    for (std::size_t i = 0; i < n_theta; ++i) {
      out << ',' << (i < r.theta.size() ? format(r.theta[i]) : std::string());
    }
    for (std::size_t i = 0; i < n_gain; ++i) {
      out << ',' << (i < r.hedge_gains.size() ? format(r.hedge_gains[i]) : std::string());
    }
    out << '\n';
  }
}

std::string trace_to_csv(const RunTrace& trace) {
  std::ostringstream out;
  write_trace_csv(out, trace);
  return out.str();
}

RunTrace read_trace_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("missing trace header", 0);
  const std::vector<std::string> header = split(line);
  if (header.empty() || header[0] != "iteration") {
    throw ParseError("trace header must start with 'iteration'", 0);
  }
  RunTrace trace;
  trace.dim = count_prefixed(header, 1, "x");
  std::size_t col = 1 + trace.dim;
  for (const char* c : kScalarColumns) {
    if (col >= header.size() || header[col] != c) {
      throw ParseError(std::string("expected column '") + c + "'", col);
    }
    ++col;
  }
  const std::size_t n_theta = count_prefixed(header, col, "theta");
  const std::size_t n_gain = count_prefixed(header, col + n_theta, "gain");
  if (col + n_theta + n_gain != header.size()) {
    throw ParseError("unexpected trace column '" + header[col + n_theta + n_gain] + "'",
                     col + n_theta + n_gain);
  }

  std::size_t offset = line.size() + 1;
  while (std::getline(in, line)) {
    if (line.empty()) {
      offset += 1;
      continue;
    }
    const std::vector<std::string> f = split(line);
    if (f.size() != header.size()) {
      throw ParseError("trace row has " + std::to_string(f.size()) + " fields, expected " +
                           std::to_string(header.size()),
                       offset);
    }
    TraceRecord r;
    const double it = parse_double(f[0], offset);
    if (!(it >= 0.0) || it != std::floor(it)) throw ParseError("invalid iteration", offset);
    r.iteration = static_cast<std::size_t>(it);
    r.query.resize(static_cast<Eigen::Index>(trace.dim));
    for (std::size_t i = 0; i < trace.dim; ++i) {
      r.query(static_cast<Eigen::Index>(i)) = parse_double(f[1 + i], offset);
    }
    double scalars[kNumScalar];
    for (std::size_t i = 0; i < kNumScalar; ++i) scalars[i] = parse_double(f[1 + trace.dim + i], offset);
    r.y = scalars[0];
    r.incumbent = scalars[1];
    r.gap = scalars[2];
    r.distance = scalars[3];
    r.regret = scalars[4];
    r.t_fit_ms = scalars[5];
    r.t_crit_ms = scalars[6];
    r.t_target_ms = scalars[7];
    r.t_learn_ms = scalars[8];
    for (std::size_t i = 0; i < n_theta; ++i) {
      if (!f[col + i].empty()) r.theta.push_back(parse_double(f[col + i], offset));
    }
    for (std::size_t i = 0; i < n_gain; ++i) {
      if (!f[col + n_theta + i].empty()) {
        r.hedge_gains.push_back(parse_double(f[col + n_theta + i], offset));
      }
    }
    trace.records.push_back(std::move(r));
    offset += line.size() + 1;
  }
  return trace;
}

RunTrace trace_from_csv(const std::string& text) {
  std::istringstream in(text);
  return read_trace_csv(in);
}

}  // namespace bayesopt
