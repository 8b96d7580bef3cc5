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

#include "bayesopt/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "bayesopt/errors.hpp"
#include "bayesopt/means.hpp"
#include "bayesopt/trace_io.hpp"

namespace bayesopt::bench {

using std::numbers::pi;

double ackley(const Point& x) {
  const auto d = static_cast<double>(x.size());
  const double sq = x.squaredNorm() / d;
  const double cs = (2.0 * pi * x.array()).cos().sum() / d;
  return -20.0 * std::exp(-0.2 * std::sqrt(sq)) - std::exp(cs) + 20.0 + std::numbers::e;
}

double rosenbrock(const Point& x) {
  double s = 0.0;
  for (Eigen::Index i = 0; i + 1 < x.size(); ++i) {
    const double a = x(i + 1) - x(i) * x(i);
    const double b = 1.0 - x(i);
    s += 100.0 * a * a + b * b;
  }
  return s;
}

double michalewicz(const Point& x) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double inner = std::sin(static_cast<double>(i + 1) * x(i) * x(i) / pi);
    s -= std::sin(x(i)) * std::pow(inner, 20);
  }
  return s;
}

double branin(const Point& x) {
  const double b = 5.1 / (4.0 * pi * pi);
  const double c = 5.0 / pi;
  const double t = 1.0 / (8.0 * pi);
  const double a = x(1) - b * x(0) * x(0) + c * x(0) - 6.0;
  return a * a + 10.0 * (1.0 - t) * std::cos(x(0)) + 10.0;
}

double sphere(const Point& x) { return (x.array() - 0.5).square().sum(); }

double trivial(const Point& x) { return x.sum(); }

std::vector<std::string> builtin_names() {
  return {"ackley", "rosenbrock", "michalewicz", "branin", "sphere", "trivial"};
}

namespace {

Point point(std::initializer_list<double> v) {
  Point p(static_cast<Eigen::Index>(v.size()));
  std::copy(v.begin(), v.end(), p.data());
  return p;
}

}  // namespace

TestFunction make_function(const std::string& name, std::size_t dim) {
  if (dim == 0) throw InvalidParams("test function dimension must be at least 1");
  const auto d = static_cast<Eigen::Index>(dim);
  TestFunction t;
  t.name = name;
  t.dim = dim;
  const auto box = [&](double lo, double hi) {
    t.lower.assign(dim, lo);
    t.upper.assign(dim, hi);
  };
  if (name == "ackley") {
    box(-32.768, 32.768);
    t.optimum = {{Point::Zero(d)}, 0.0};
    t.f = ackley;
  } else if (name == "rosenbrock") {
    if (dim < 2) throw InvalidParams("rosenbrock needs dim >= 2");
    box(-2.048, 2.048);
    t.optimum = {{Point::Ones(d)}, 0.0};
    t.f = rosenbrock;
  } else if (name == "sphere") {
    box(0.0, 1.0);
    t.optimum = {{Point::Constant(d, 0.5)}, 0.0};
    t.f = sphere;
  } else if (name == "trivial") {
    box(0.0, 1.0);
    t.optimum = {{Point::Zero(d)}, 0.0};
    t.f = trivial;
  } else if (name == "michalewicz" || name == "branin") {
    if (dim != 2) throw InvalidParams(name + " is defined for dim = 2 only");
    if (name == "michalewicz") {
      box(0.0, pi);
      t.optimum = {{point({2.2029055201726, pi / 2.0})}, -1.8013034100985537};
      t.f = michalewicz;
    } else {
      t.lower = {-5.0, 0.0};
      t.upper = {10.0, 15.0};
      t.optimum = {{point({-pi, 12.275}), point({pi, 2.275}), point({3.0 * pi, 2.475})},
                   5.0 / (4.0 * pi)};
      t.f = branin;
    }
  } else {
    throw InvalidParams("unknown test function '" + name + "'");
  }
  return t;
}

std::vector<TestFunction> builtin_functions() {
  std::vector<TestFunction> out;
  for (const auto& name : builtin_names()) out.push_back(make_function(name, 2));
  return out;
}

void check_catalog() {
  for (const auto& t : builtin_functions()) {
    for (const auto& x : t.optimum.x) {
      const double v = t.f(x);
      if (!(std::abs(v - t.optimum.f) <= 1e-6)) {
        std::ostringstream msg;
        msg << t.name << ": stored optimum " << t.optimum.f << " but f(x*) = " << v;
        throw std::logic_error(msg.str());
      }
    }
  }
}

namespace {

bool is_count(const nlohmann::json& v) {
  return v.is_number_integer() && (v.is_number_unsigned() || v.get<std::int64_t>() >= 0);
}

}  // namespace

BenchConfig parse_bench_config(const nlohmann::json& j, std::optional<std::uint64_t> base_seed) {
  if (!j.is_object()) throw InvalidParams("benchmark config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "function" && key != "dim" && key != "repetitions" && key != "seeds" &&
        key != "params") {
      throw InvalidParams("unknown benchmark config key '" + key + "'");
    }
  }
  BenchConfig c;
  if (!j.contains("function") || !j.at("function").is_string()) {
    throw InvalidParams("benchmark config needs a string 'function'");
  }
  c.function = j.at("function").get<std::string>();
  if (j.contains("dim")) {
    if (!is_count(j.at("dim"))) throw InvalidParams("'dim' must be a positive integer");
    c.dim = j.at("dim").get<std::size_t>();
  }
  const TestFunction t = make_function(c.function, c.dim);

  c.params = initialize_parameters_to_default();
  if (j.contains("params")) c.params = params_from_json(j.at("params"));
  if (!j.contains("params") || !j.at("params").contains("bounds")) {
    c.params.bounds = {t.lower, t.upper};
  }

  std::size_t repetitions = 1;
  if (j.contains("repetitions")) {
    if (!is_count(j.at("repetitions")) || j.at("repetitions").get<std::size_t>() == 0) {
      throw InvalidParams("'repetitions' must be a positive integer");
    }
    repetitions = j.at("repetitions").get<std::size_t>();
  }
  if (j.contains("seeds") && !base_seed) {
    const auto& s = j.at("seeds");
    if (!s.is_array() || s.empty()) throw InvalidParams("'seeds' must be a nonempty array");
    for (const auto& v : s) {
      if (!is_count(v)) throw InvalidParams("'seeds' entries must be unsigned integers");
      c.seeds.push_back(v.get<std::uint64_t>());
    }
    if (j.contains("repetitions") && repetitions != c.seeds.size()) {
      throw InvalidParams("'repetitions' disagrees with the length of 'seeds'");
    }
  } else {
    const std::uint64_t first = base_seed.value_or(c.params.seed);
    for (std::size_t r = 0; r < repetitions; ++r) c.seeds.push_back(first + r);
  }
  resolve(c.params, c.dim, true);
  return c;
}

double median(std::vector<double> v) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

namespace {

double quantile(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

std::optional<std::uint64_t> env_seed() {
  const char* s = std::getenv("BENCH_SEED");
  if (s == nullptr || *s == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (*end != '\0') throw InvalidParams(std::string("BENCH_SEED is not an integer: ") + s);
  return static_cast<std::uint64_t>(v);
}

}  // namespace

double interquartile_range(std::vector<double> v) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(v.begin(), v.end());
  return quantile(v, 0.75) - quantile(v, 0.25);
}

int run_benchmark(const std::string& config_path, const std::string& out_dir, std::ostream& err) {
  BenchConfig config;
  TestFunction target;
  try {
    std::ifstream in(config_path);
    if (!in) throw InvalidParams("cannot open config file '" + config_path + "'");
    const nlohmann::json j = nlohmann::json::parse(in);
    config = parse_bench_config(j, env_seed());
    target = make_function(config.function, config.dim);
  } catch (const std::exception& e) {
    err << "bench: invalid config: " << e.what() << "\n";
    return 1;
  }

  try {
    check_catalog();
    std::filesystem::create_directories(out_dir);
    TargetProblem problem;
    problem.evaluate = target.f;
    problem.known_optimum = target.optimum;

    BenchSummary summary;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t r = 0; r < config.seeds.size(); ++r) {
      BoptParams params = config.params;
      params.seed = config.seeds[r];
      const RunResult result = run_continuous(problem, params);
      summary.final_gaps.push_back(result.trace.records.back().gap);
      const auto path = std::filesystem::path(out_dir) / ("trace_" + std::to_string(r) + ".csv");
      std::ofstream out(path);
      write_trace_csv(out, result.trace);
      if (!out) throw std::runtime_error("failed writing " + path.string());
    }
    summary.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    summary.median_gap = median(summary.final_gaps);
    summary.iqr_gap = interquartile_range(summary.final_gaps);

    nlohmann::json resolved = params_to_json(config.params);
    resolved["radial_width"] = means::kRadialWidth;
    const nlohmann::json j = {
        {"function", config.function},
        {"dim", config.dim},
        {"repetitions", config.seeds.size()},
        {"seeds", config.seeds},
        {"final_gaps", summary.final_gaps},
        {"median_final_gap", summary.median_gap},
        {"iqr_final_gap", summary.iqr_gap},
        {"total_wall_time_s", summary.wall_time_s},
        {"params", resolved},
    };
    const auto path = std::filesystem::path(out_dir) / "summary.json";
    std::ofstream out(path);
    out << j.dump(2) << "\n";
    if (!out) throw std::runtime_error("failed writing " + path.string());
  } catch (const std::exception& e) {
    err << "bench: run failed: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

std::vector<TimingRow> run_timing(const std::vector<std::size_t>& iterations, std::uint64_t seed) {
  const TestFunction target = make_function("trivial", 2);
  TargetProblem problem;
  problem.evaluate = target.f;
  std::vector<TimingRow> rows;
  for (std::size_t n_iter : iterations) {
    BoptParams params = initialize_parameters_to_default();
    params.n_iterations = n_iter;
    params.l_update_every = 0;
    params.seed = seed;
    params.bounds = {target.lower, target.upper};
    const auto start = std::chrono::steady_clock::now();
    const RunResult result = run_continuous(problem, params);
    const double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::size_t n_data = 0;
    for (const auto& rec : result.trace.records) {
      ++n_data;
      if (rec.iteration == 0) continue;
      rows.push_back({n_iter, rec.iteration, n_data, rec.t_fit_ms, rec.t_crit_ms, total});
    }
  }
  return rows;
}

void write_timing_csv(std::ostream& out, const std::vector<TimingRow>& rows) {
  out << "n_iterations,iteration,n_data,fit_ms,crit_ms,total_s\n";
  char buf[160];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%zu,%zu,%zu,%.17g,%.17g,%.17g\n", r.n_iterations, r.iteration,
                  r.n_data, r.fit_ms, r.crit_ms, r.total_s);
    out << buf;
  }
}

std::vector<TimingRow> read_timing_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "n_iterations,iteration,n_data,fit_ms,crit_ms,total_s") {
    throw ParseError("unexpected timing header", 0);
  }
  std::vector<TimingRow> rows;
  std::size_t offset = line.size() + 1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    TimingRow r;
    std::istringstream fields(line);
    char c1 = 0, c2 = 0, c3 = 0, c4 = 0, c5 = 0;
    fields >> r.n_iterations >> c1 >> r.iteration >> c2 >> r.n_data >> c3 >> r.fit_ms >> c4 >>
        r.crit_ms >> c5 >> r.total_s;
    if (!fields || (fields >> std::ws, !fields.eof()) || c1 != ',' || c2 != ',' || c3 != ',' ||
        c4 != ',' || c5 != ',') {
      throw ParseError("malformed timing row", offset);
    }
    rows.push_back(r);
    offset += line.size() + 1;
  }
  return rows;
}

}  // namespace bayesopt::bench
