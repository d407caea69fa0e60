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

#ifndef MINIUP_CHECKER_HPP
#define MINIUP_CHECKER_HPP

#include <map>
#include <string>
#include <vector>

#include "miniup/ast.hpp"
#include "miniup/symbols.hpp"

namespace miniup {

enum class ErrorKind {
  UndefinedType,
  UndefinedMethod,
  UndefinedField,
  UndefinedVariable,
  UndefinedConstructor,
  IncompatibleType,
  IncompatibleMethodArgs,
  UnimplementedAbstractMethod,
  UnhandledException,
  AmbiguousType,
  InvisibleField,
};

const char* to_string(ErrorKind kind);
ErrorKind error_kind_from_string(const std::string& name);

/// One classified diagnostic. `message` is rendered purely from the other
/// fields, so error-list equality is well defined.
struct CompileError {
  ErrorKind kind;
  Span span;
  std::string subject;   // qualified symbol name where derivable
  std::string expected;  // type or signature, empty when not applicable
  std::string actual;
  std::string message;

  friend bool operator==(const CompileError& a, const CompileError& b) {
    return a.kind == b.kind && a.span == b.span && a.subject == b.subject &&
           a.expected == b.expected && a.actual == b.actual;
  }
};

std::string render_message(ErrorKind kind, const std::string& subject,
                           const std::string& expected, const std::string& actual);

/// Side information the migration operators use to rewrite call sites.
struct AccessInfo {
  bool static_receiver = false;  // receiver written as a type name
  std::string receiver_type;     // resolved receiver type, empty when unknown
  bool is_write = false;         // field access used as an assignment target
};

struct CheckResult {
  std::vector<CompileError> errors;
  std::map<Span, std::string> expr_types;  // resolved static type per expression
  std::map<Span, AccessInfo> access_info;  // per call / field-access expression
};

/// Semantic analysis of client units against a library table. Errors come
/// back sorted by (file, position, kind, subject); an empty list means the
/// program compiles. Pure: never throws for malformed programs.
CheckResult check_program(const std::vector<const CompilationUnit*>& client,
                          const ApiSymbolTable& lib);

std::vector<CompileError> check(const std::vector<const CompilationUnit*>& client,
                                const ApiSymbolTable& lib);

/// Lenient table construction used for client code: duplicate types keep
/// the first declaration, no cycle rejection, and signature references may
/// resolve against `extra` (the library the client compiles against).
ApiSymbolTable build_client_table(const std::vector<const CompilationUnit*>& units,
                                  const ApiSymbolTable* extra);

}  // namespace miniup

#endif  // MINIUP_CHECKER_HPP
