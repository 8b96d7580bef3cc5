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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bayesopt/bench.hpp"

int main(int argc, char** argv) {
  namespace bench = bayesopt::bench;
  CLI::App app{"Bayesian optimization benchmark harness"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  auto* run = app.add_subcommand("run", "Run a benchmark configuration");
  run->add_option("--config", config_path, "JSON benchmark config")->required();
  run->add_option("--out", out_dir, "Output directory")->required();

  std::vector<std::size_t> iters{50, 100, 200, 400};
  std::string timing_out;
  std::uint64_t timing_seed = 0;
  auto* time = app.add_subcommand("time", "Time the loop on the trivial target");
  time->add_option("--iters", iters, "Iteration counts")->delimiter(',');
  time->add_option("--out", timing_out, "Output CSV file")->required();
  time->add_option("--seed", timing_seed, "Seed");

  auto* list = app.add_subcommand("list", "Print the test function catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (run->parsed()) return bench::run_benchmark(config_path, out_dir, std::cerr);

  try {
    bench::check_catalog();
    if (time->parsed()) {
      const auto rows = bench::run_timing(iters, timing_seed);
      std::ofstream out(timing_out);
      bench::write_timing_csv(out, rows);
      if (!out) {
        std::cerr << "bench: failed writing " << timing_out << "\n";
        return 2;
      }
      for (std::size_t n : iters) {
        for (const auto& r : rows) {
          if (r.n_iterations == n) {
            std::cout << "N=" << n << " total " << r.total_s << " s\n";
            break;
          }
        }
      }
    } else if (list->parsed()) {
      for (const auto& t : bench::builtin_functions()) {
        std::cout << t.name << " dim=" << t.dim << " f*=" << t.optimum.f << " box=[";
        for (std::size_t i = 0; i < t.dim; ++i) {
          std::cout << (i ? ", " : "") << "[" << t.lower[i] << ", " << t.upper[i] << "]";
        }
        std::cout << "]\n";
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "bench: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
