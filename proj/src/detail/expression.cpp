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

#include "detail/expression.hpp"

#include <cctype>

#include "bayesopt/errors.hpp"

namespace bayesopt::detail {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expression parse() {
    Expression root = expression();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return root;
  }

 private:
  static bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '.' ||
           c == '-' || c == '+';
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  Expression expression() {
    skip_space();
    Expression node;
    node.offset = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    if (pos_ == node.offset) {
      if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
      throw ParseError(std::string("expected a name, found '") + text_[pos_] + "'", pos_);
    }
    node.name = std::string(text_.substr(node.offset, pos_ - node.offset));
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      const std::size_t open = pos_++;
      node.has_arguments = true;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ')') {
        throw ParseError("empty argument list for '" + node.name + "'", open);
      }
      for (;;) {
        node.arguments.push_back(expression());
        skip_space();
        if (pos_ >= text_.size()) throw ParseError("unbalanced parentheses", open);
        if (text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (text_[pos_] == ')') {
          ++pos_;
          break;
        }
        throw ParseError(std::string("expected ',' or ')', found '") + text_[pos_] + "'",
                         pos_);
      }
    }
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression parse_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace bayesopt::detail
