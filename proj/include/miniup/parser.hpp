// Copyright 2026 The Miniup Authors
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

#ifndef MINIUP_PARSER_HPP
#define MINIUP_PARSER_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "miniup/ast.hpp"

namespace miniup {

/// Raised on the first offending token; carries its span and a
/// description of what was expected there.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(Span span, std::string expected)
      : std::runtime_error(span.to_string() + ": expected " + expected),
        span_(std::move(span)),
        expected_(std::move(expected)) {}

  const Span& span() const { return span_; }
  const std::string& expected() const { return expected_; }

 private:
  Span span_;
  std::string expected_;
};

/// Parses one MiniLang source file into a span-faithful AST.
/// Throws SyntaxError; never returns a partial tree.
CompilationUnit parse(std::string_view text, const std::string& file);

/// Prints a unit in the canonical layout. The output reparses to a
/// structurally identical unit (spans excluded).
std::string print(const CompilationUnit& unit);

}  // namespace miniup

#endif  // MINIUP_PARSER_HPP
