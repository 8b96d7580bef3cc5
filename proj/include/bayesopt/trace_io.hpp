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

#ifndef BAYESOPT_TRACE_IO_HPP
#define BAYESOPT_TRACE_IO_HPP

#include <iosfwd>
#include <string>

#include "bayesopt/optimizer.hpp"

namespace bayesopt {

/// CSV layout: iteration, x0.., y, incumbent, gap, distance, regret,
/// t_fit_ms, t_crit_ms, t_target_ms, t_learn_ms, theta0.., gain0..
/// NaN is written as an empty field; doubles use 17 significant digits.
void write_trace_csv(std::ostream& out, const RunTrace& trace);
std::string trace_to_csv(const RunTrace& trace);

/// Throws ParseError on a malformed header or row.
RunTrace read_trace_csv(std::istream& in);
RunTrace trace_from_csv(const std::string& text);

}  // namespace bayesopt

#endif  // BAYESOPT_TRACE_IO_HPP
