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

#ifndef BAYESOPT_DETAIL_EXPRESSION_HPP
#define BAYESOPT_DETAIL_EXPRESSION_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace bayesopt::detail {

// Untyped call tree shared by the kernel, mean and criterion grammars:
//   expr := name [ '(' expr { ',' expr } ')' ]
struct Expression {
  std::string name;
  std::size_t offset = 0;
  bool has_arguments = false;
  std::vector<Expression> arguments;
};

// Throws ParseError on unbalanced parentheses, empty argument lists, missing
// names or trailing input.
Expression parse_expression(std::string_view text);

}  // namespace bayesopt::detail

#endif  // BAYESOPT_DETAIL_EXPRESSION_HPP
