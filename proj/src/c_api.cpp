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

#include "bayesopt/c_api.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "bayesopt/errors.hpp"
#include "bayesopt/optimizer.hpp"
#include "bayesopt/params.hpp"
#include "bayesopt/trace_io.hpp"

namespace {

void set_error(char* buf, std::size_t len, const std::string& msg) {
  if (buf == nullptr || len == 0) return;
  const std::size_t n = std::min(len - 1, msg.size());
  std::memcpy(buf, msg.data(), n);
  buf[n] = '\0';
}

char* duplicate(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}


}  // namespace

extern "C" int bopt_optimize(bopt_objective f, void* user, size_t dim, const double* lower,
                             const double* upper, const char* params_json, double* best_x,
                             double* best_y, char** trace_csv, char* error_buf,
                             size_t error_len) {
  using namespace bayesopt;
  if (trace_csv != nullptr) *trace_csv = nullptr;
  BoptParams params;
  std::size_t n_init = 0;
  try {
    if (f == nullptr || lower == nullptr || upper == nullptr || best_x == nullptr ||
        best_y == nullptr || dim == 0) {
      throw InvalidParams("callback, bounds, outputs and a positive dim are required");
    }
    params = initialize_parameters_to_default();
    if (params_json != nullptr && *params_json != '\0') {
      params = params_from_json(nlohmann::json::parse(params_json));
    }
    params.bounds.lower.assign(lower, lower + dim);
    params.bounds.upper.assign(upper, upper + dim);
    n_init = resolve(params, dim, true).n_init;
  } catch (const std::exception& e) {
    set_error(error_buf, error_len, e.what());
    return BOPT_INVALID_PARAMS;
  }

  try {
    std::size_t evaluations = 0;
    TargetProblem problem;
    problem.evaluate = [&](const Point& x) {
      int err = 0;
      const double y = f(x.data(), dim, user, &err);
      const std::size_t index = evaluations++;
      if (err != 0) {
        const std::size_t iteration = index < n_init ? 0 : index - n_init + 1;
        std::ostringstream msg;
        msg << "callback failed at iteration " << iteration << " (evaluation " << index
            << ") for x = [";
        for (Eigen::Index i = 0; i < x.size(); ++i) msg << (i ? ", " : "") << x(i);
        msg << "]";
        throw CallbackError(msg.str(), std::vector<double>(x.data(), x.data() + x.size()), index);
      }
      return y;
    };
    const RunResult result = run_continuous(problem, params);
    std::copy(result.best_x.data(), result.best_x.data() + dim, best_x);
    *best_y = result.best_y;
    if (trace_csv != nullptr) *trace_csv = duplicate(trace_to_csv(result.trace));
  } catch (const CallbackError& e) {
    set_error(error_buf, error_len, e.what());
    return BOPT_CALLBACK_ERROR;
  } catch (const std::exception& e) {
    set_error(error_buf, error_len, e.what());
    return BOPT_FAILURE;
  }
  return BOPT_OK;
}

extern "C" int bopt_default_params(char** out) {
  if (out == nullptr) return BOPT_INVALID_PARAMS;
  *out = duplicate(bayesopt::params_to_json(bayesopt::initialize_parameters_to_default()).dump());
  return *out == nullptr ? BOPT_FAILURE : BOPT_OK;
}

extern "C" void bopt_free(void* p) { std::free(p); }
