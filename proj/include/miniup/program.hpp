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

#ifndef MINIUP_PROGRAM_HPP
#define MINIUP_PROGRAM_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "miniup/ast.hpp"
#include "miniup/span.hpp"

namespace miniup {

/// One client source file; the unit is shared between candidates that did
/// not touch the file.
struct ProgramFile {
  std::string path;  // relative path, also used in spans
  SourceText source;
  std::shared_ptr<const CompilationUnit> unit;
};

struct Program {
  std::vector<ProgramFile> files;

  std::vector<const CompilationUnit*> units() const {
    std::vector<const CompilationUnit*> out;
    out.reserve(files.size());
    for (const auto& f : files) out.push_back(f.unit.get());
    return out;
  }

  const ProgramFile* find(const std::string& path) const {
    for (const auto& f : files) {
      if (f.path == path) return &f;
    }
    return nullptr;
  }
};

/// Parses in-memory sources into a program. Throws SyntaxError.
Program parse_program(const std::vector<std::pair<std::string, std::string>>& sources);

/// Loads every `.ml0` file under `dir` (recursive, sorted by relative
/// path). Throws std::runtime_error when the directory is missing and
/// SyntaxError on parse failure.
Program load_program(const std::string& dir);

}  // namespace miniup

#endif  // MINIUP_PROGRAM_HPP
