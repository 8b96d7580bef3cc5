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

#ifndef BAYESOPT_BENCH_HPP
#define BAYESOPT_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bayesopt/optimizer.hpp"
#include "bayesopt/params.hpp"

namespace bayesopt::bench {

struct TestFunction {
  std::string name;
  std::size_t dim = 0;
  std::vector<double> lower;
  std::vector<double> upper;
  KnownOptimum optimum;
  std::function<double(const Point&)> f;
};

double ackley(const Point& x);
double rosenbrock(const Point& x);
/// Steepness 10.
double michalewicz(const Point& x);
double branin(const Point& x);
/// sum (x_i - 0.5)^2.
double sphere(const Point& x);
/// sum x_i; negligible cost, used for overhead timing.
double trivial(const Point& x);

std::vector<std::string> builtin_names();

/// Throws InvalidParams for an unknown name or an unsupported dimension.
TestFunction make_function(const std::string& name, std::size_t dim);

/// Each entry at its default dimension (2).
std::vector<TestFunction> builtin_functions();

/// Throws std::logic_error when a stored optimum disagrees with its
/// definition by more than 1e-6.
void check_catalog();

struct BenchConfig {
  std::string function;
  std::size_t dim = 2;
  std::vector<std::uint64_t> seeds;
  BoptParams params;
};

/// Keys: function, dim, repetitions, seeds, params. Bounds default to the
/// function's box. When seeds is absent, repetition r uses params.seed + r;
/// base_seed (BENCH_SEED) replaces the seed list the same way.
BenchConfig parse_bench_config(const nlohmann::json& j,
                               std::optional<std::uint64_t> base_seed = std::nullopt);

struct BenchSummary {
  std::vector<double> final_gaps;
  double median_gap = 0.0;
  double iqr_gap = 0.0;
  double wall_time_s = 0.0;
};

/// Median and interquartile range with linear interpolation between order
/// statistics.
double median(std::vector<double> v);
double interquartile_range(std::vector<double> v);

/// Runs every repetition and writes trace_<r>.csv and summary.json into
/// out_dir. Returns 0 on success, 1 on a configuration error, 2 on a runtime
/// failure; diagnostics go to err.
int run_benchmark(const std::string& config_path, const std::string& out_dir, std::ostream& err);

struct TimingRow {
  std::size_t n_iterations = 0;
  std::size_t iteration = 0;
  std::size_t n_data = 0;
  double fit_ms = 0.0;
  double crit_ms = 0.0;
  double total_s = 0.0;
};

/// Runs the trivial 2-d target once per entry of iterations with theta frozen
/// after the first learn; one row per loop iteration.
std::vector<TimingRow> run_timing(const std::vector<std::size_t>& iterations,
                                  std::uint64_t seed = 0);

void write_timing_csv(std::ostream& out, const std::vector<TimingRow>& rows);
std::vector<TimingRow> read_timing_csv(std::istream& in);

}  // namespace bayesopt::bench

#endif  // BAYESOPT_BENCH_HPP
