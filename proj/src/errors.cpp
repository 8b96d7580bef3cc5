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

#include "bayesopt/errors.hpp"

#include <sstream>
#include <utility>

namespace bayesopt {

namespace {

std::string pivot_message(std::size_t row, double pivot) {
  std::ostringstream os;
  os << "matrix is not positive definite: pivot " << pivot << " at row " << row;
  return os.str();
}

std::string offset_message(const std::string& what, std::size_t offset) {
  std::ostringstream os;
  os << what << " (at offset " << offset << ")";
  return os.str();
}

}  // namespace

NotPositiveDefinite::NotPositiveDefinite(std::size_t row, double pivot)
    : std::runtime_error(pivot_message(row, pivot)), row_(row), pivot_(pivot) {}

ParseError::ParseError(const std::string& what, std::size_t offset)
    : std::invalid_argument(offset_message(what, offset)), offset_(offset) {}

CallbackError::CallbackError(const std::string& what, std::vector<double> query,
                             std::size_t evaluation)
    : std::runtime_error(what), query_(std::move(query)), evaluation_(evaluation) {}

}  // namespace bayesopt
