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

#ifndef MINIUP_TESTS_TEST_UTIL_HPP
#define MINIUP_TESTS_TEST_UTIL_HPP

#include <string>
#include <utility>
#include <vector>

#include "miniup/checker.hpp"
#include "miniup/mapping.hpp"
#include "miniup/operators.hpp"
#include "miniup/parser.hpp"
#include "miniup/program.hpp"
#include "miniup/symbols.hpp"

namespace miniup::test {

using Sources = std::vector<std::pair<std::string, std::string>>;

inline ApiSymbolTable make_lib(const Sources& sources, const std::string& label) {
  std::vector<CompilationUnit> units;
  for (const auto& [path, text] : sources) units.push_back(parse(text, path));
  std::vector<const CompilationUnit*> ptrs;
  for (const auto& unit : units) ptrs.push_back(&unit);
  return build_symbol_table(ptrs, label);
}

inline std::vector<CompileError> check_sources(const Sources& client,
                                               const ApiSymbolTable& lib) {
  Program program = parse_program(client);
  return check(program.units(), lib);
}

/// Owns everything an operator-application test needs.
struct OperatorFixture {
  ApiSymbolTable lib;
  MappingTable mappings;
  Candidate parent;
  std::unique_ptr<ParentScope> scope;

  OperatorFixture(const Sources& client, const Sources& lib_sources,
                  MappingTable table = {})
      : lib(make_lib(lib_sources, "v2")), mappings(std::move(table)) {
    OperatorContext boot;
    const ApiSymbolTable* lib_ptr = &lib;
    boot.check = [lib_ptr](const Program& p) {
      return check_program(p.units(), *lib_ptr);
    };
    parent = initial_candidate(parse_program(client), boot);
    scope = std::make_unique<ParentScope>(parent, lib, mappings);
  }

  const OperatorContext& ctx() const { return scope->context(); }

  const CompileError& error_at(std::size_t index) const {
    return parent.errors().at(index);
  }
};

}  // namespace miniup::test

#endif  // MINIUP_TESTS_TEST_UTIL_HPP
