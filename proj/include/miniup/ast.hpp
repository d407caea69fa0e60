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

#ifndef MINIUP_AST_HPP
#define MINIUP_AST_HPP

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "miniup/span.hpp"

namespace miniup {

enum class Visibility { Public, Private };

/// A `//` line comment kept as trivia so it survives printing.
struct Comment {
  std::string text;  // without the leading `//`
};

/// A type reference as written in source: a primitive (`bool`, `int`,
/// `string`, `void`) or a simple or dotted name.
struct TypeName {
  std::string name;
  Span span;
};

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct NameExpr {
  std::string id;
};
struct FieldAccessExpr {
  ExprPtr recv;
  std::string field;
  Span field_span;
};
struct CallExpr {
  ExprPtr recv;
  std::string method;
  Span method_span;
  std::vector<ExprPtr> args;
};
struct NewExpr {
  TypeName type;
  std::vector<ExprPtr> args;
};
struct CastExpr {
  TypeName type;
  ExprPtr operand;
};
struct AssignExpr {
  ExprPtr lhs;
  ExprPtr rhs;
};
enum class LiteralKind { Bool, Int, Str, Null };
struct LiteralExpr {
  LiteralKind kind;
  std::string text;  // literal token as written, quotes included for strings
};

struct Expr {
  Span span;
  std::variant<NameExpr, FieldAccessExpr, CallExpr, NewExpr, CastExpr,
               AssignExpr, LiteralExpr>
      node;
};

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;

struct Block {
  Span lbrace;
  Span rbrace;
  std::vector<StmtPtr> stmts;
  std::vector<Comment> trailing_comments;  // comments before the closing brace
};

struct VarDeclStmt {
  TypeName type;
  std::string name;
  Span name_span;
  ExprPtr init;  // may be null
};
struct ExprStmt {
  ExprPtr expr;
};
struct ReturnStmt {
  ExprPtr value;  // may be null
};
struct ThrowStmt {
  ExprPtr value;
};
struct CatchClause {
  TypeName type;
  std::string var;
  Block body;
  Span span;
};
struct TryCatchStmt {
  Block body;
  std::vector<CatchClause> catches;
};

struct Stmt {
  Span span;
  std::vector<Comment> leading_comments;
  std::variant<VarDeclStmt, ExprStmt, ReturnStmt, ThrowStmt, TryCatchStmt> node;
};

struct Param {
  TypeName type;
  std::string name;
  Span span;
};

struct FieldDecl {
  Visibility vis = Visibility::Public;
  bool is_static = false;
  TypeName type;
  std::string name;
  Span name_span;
  Span span;
  std::vector<Comment> leading_comments;
};

struct MethodDecl {
  Visibility vis = Visibility::Public;
  bool is_static = false;
  bool is_abstract = false;
  TypeName return_type;
  std::string name;
  Span name_span;
  std::vector<Param> params;
  std::vector<TypeName> throws;
  std::optional<Block> body;
  Span span;
  Span sig_end;  // empty span just after `)` or the last throws entry
  std::vector<Comment> leading_comments;
};

struct ConstructorDecl {
  Visibility vis = Visibility::Public;
  std::string name;
  Span name_span;
  std::vector<Param> params;
  std::vector<TypeName> throws;
  std::optional<Block> body;
  Span span;
  Span sig_end;
  std::vector<Comment> leading_comments;
};

using Member = std::variant<FieldDecl, MethodDecl, ConstructorDecl>;

enum class TypeDeclKind { Class, Interface };

struct TypeDecl {
  TypeDeclKind kind = TypeDeclKind::Class;
  Visibility vis = Visibility::Public;
  bool is_abstract = false;
  std::string name;
  Span name_span;
  std::optional<TypeName> superclass;
  std::vector<TypeName> interfaces;
  std::vector<Member> members;
  Span span;
  Span body_lbrace;
  Span body_rbrace;
  std::vector<Comment> leading_comments;
};

struct ImportDecl {
  std::string qualified;  // `a.b.C` or package `a.b` when wildcard
  bool wildcard = false;
  Span span;
  std::vector<Comment> leading_comments;
};

struct CompilationUnit {
  std::string file;
  std::string package_name;  // empty for the unnamed package
  Span package_span;
  std::vector<ImportDecl> imports;
  std::vector<TypeDecl> types;
  std::vector<Comment> trailing_comments;
  Span span;
};

/// Canonical structural rendering of a unit, spans and trivia excluded.
/// Two units are structurally identical iff their dumps are equal.
std::string dump(const CompilationUnit& unit);
std::string dump(const Expr& expr);
std::string dump(const Stmt& stmt);

const char* to_string(Visibility v);
const char* to_string(TypeDeclKind k);

}  // namespace miniup

#endif  // MINIUP_AST_HPP
