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

#include "bayesopt/params.hpp"

#include <initializer_list>
#include <string_view>
#include <type_traits>

#include "bayesopt/errors.hpp"

namespace bayesopt {

namespace {

using nlohmann::json;

void reject_unknown(const json& j, std::string_view where,
                    std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) throw InvalidParams(std::string(where) + " must be an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) throw InvalidParams("unknown parameter '" + std::string(where) + key + "'");
  }
}

template <typename T>
void read(const json& j, const char* key, T& out, std::string_view where = "") {
  if (!j.contains(key)) return;
  if constexpr (std::is_unsigned_v<T>) {
    const auto& v = j.at(key);
    if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
      throw InvalidParams("parameter '" + std::string(where) + key +
                          "' must be a non-negative integer");
    }
  }
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidParams("parameter '" + std::string(where) + key + "': " + e.what());
  }
}

}  // namespace

BoptParams initialize_parameters_to_default() { return BoptParams{}; }

BoptParams params_from_json(const json& j) {
  reject_unknown(j, "", {"n_iterations", "n_init", "kernel", "mean", "surr_name", "crit_name",
                         "crit_params", "n_crit_params", "l_type", "l_update_every", "sigma_n2",
                         "sigma_s2", "seed", "bounds", "verbose_level"});
  BoptParams p;
  read(j, "n_iterations", p.n_iterations);
  read(j, "n_init", p.n_init);
  if (j.contains("kernel")) {
    const auto& k = j.at("kernel");
    reject_unknown(k, "kernel.", {"name", "hp_mean", "hp_std", "n_hp"});
    read(k, "name", p.kernel.name, "kernel.");
    read(k, "hp_mean", p.kernel.hp_mean, "kernel.");
    read(k, "hp_std", p.kernel.hp_std, "kernel.");
    read(k, "n_hp", p.kernel.n_hp, "kernel.");
  }
  if (j.contains("mean")) {
    const auto& m = j.at("mean");
    reject_unknown(m, "mean.", {"name"});
    read(m, "name", p.mean.name, "mean.");
  }
  read(j, "surr_name", p.surr_name);
  read(j, "crit_name", p.crit_name);
  if (j.contains("crit_params")) {
    read(j, "crit_params", p.crit_params);
    p.n_crit_params = p.crit_params.size();
  }
  read(j, "n_crit_params", p.n_crit_params);
  read(j, "l_type", p.l_type);
  read(j, "l_update_every", p.l_update_every);
  read(j, "sigma_n2", p.sigma_n2);
  read(j, "sigma_s2", p.sigma_s2);
  read(j, "seed", p.seed);
  if (j.contains("bounds")) {
    const auto& b = j.at("bounds");
    reject_unknown(b, "bounds.", {"lower", "upper"});
    read(b, "lower", p.bounds.lower, "bounds.");
    read(b, "upper", p.bounds.upper, "bounds.");
  }
  read(j, "verbose_level", p.verbose_level);
  return p;
}

json params_to_json(const BoptParams& p) {
  json j;
  j["n_iterations"] = p.n_iterations;
  j["n_init"] = p.n_init;
  j["kernel"] = {{"name", p.kernel.name},
                 {"hp_mean", p.kernel.hp_mean},
                 {"hp_std", p.kernel.hp_std},
                 {"n_hp", p.kernel.n_hp}};
  j["mean"] = {{"name", p.mean.name}};
  j["surr_name"] = p.surr_name;
  j["crit_name"] = p.crit_name;
  j["crit_params"] = p.crit_params;
  j["n_crit_params"] = p.n_crit_params;
  j["l_type"] = p.l_type;
  j["l_update_every"] = p.l_update_every;
  j["sigma_n2"] = p.sigma_n2;
  j["sigma_s2"] = p.sigma_s2;
  j["seed"] = p.seed;
  j["bounds"] = {{"lower", p.bounds.lower}, {"upper", p.bounds.upper}};
  j["verbose_level"] = p.verbose_level;
  return j;
}

}  // namespace bayesopt
