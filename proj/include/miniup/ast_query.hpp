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

#ifndef MINIUP_AST_QUERY_HPP
#define MINIUP_AST_QUERY_HPP

#include <functional>
#include <optional>

#include "miniup/ast.hpp"

namespace miniup {

/// Pre-order walk over every expression in the unit (bodies only).
void for_each_expr(const CompilationUnit& unit,
                   const std::function<void(const Expr&)>& fn);

/// Pre-order walk over every type-position reference (superclass,
/// interfaces, member signatures, variable declarations, casts, catches,
/// news, throws clauses).
void for_each_type_ref(const CompilationUnit& unit,
                       const std::function<void(const TypeName&)>& fn);

struct EnclosingInfo {
  const Stmt* stmt = nullptr;              // innermost statement
  std::vector<const Stmt*> chain;          // outermost first, innermost last
  const TypeDecl* type = nullptr;
  const MethodDecl* method = nullptr;      // either method or ctor is set
  const ConstructorDecl* ctor = nullptr;
};

/// Finds the innermost statement containing `span`, together with its
/// enclosing statement chain and declaration context.
std::optional<EnclosingInfo> find_enclosing(const CompilationUnit& unit,
                                            const Span& span);

/// Expression whose span equals `span` exactly, or null.
const Expr* find_expr_at(const CompilationUnit& unit, const Span& span);

/// The assignment expression whose left side has exactly this span.
const Expr* find_assign_with_lhs(const CompilationUnit& unit, const Span& span);

}  // namespace miniup

#endif  // MINIUP_AST_QUERY_HPP
