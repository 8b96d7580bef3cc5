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

#ifndef BAYESOPT_ERRORS_HPP
#define BAYESOPT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bayesopt {

// A Cholesky pivot was <= 0. Callers usually retry with a larger nugget.
class NotPositiveDefinite : public std::runtime_error {
 public:
  NotPositiveDefinite(std::size_t row, double pivot);
  std::size_t row() const { return row_; }
  double pivot() const { return pivot_; }

 private:
  std::size_t row_;
  double pivot_;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Grammar error in a kernel, mean or criterion expression. offset is the byte
// position in the input where parsing stopped.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class ParamCountMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InsufficientData : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NoFeasiblePoint : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a user-supplied target callback fails. Carries the query that
// triggered the failure and the evaluation index (0-based).
class CallbackError : public std::runtime_error {
 public:
  CallbackError(const std::string& what, std::vector<double> query,
                std::size_t evaluation);
  const std::vector<double>& query() const { return query_; }
  std::size_t evaluation() const { return evaluation_; }

 private:
  std::vector<double> query_;
  std::size_t evaluation_;
};

}  // namespace bayesopt

#endif  // BAYESOPT_ERRORS_HPP
