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

#include "miniup/ast_query.hpp"

#include "miniup/program.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "miniup/parser.hpp"

namespace miniup {
namespace {

void walk_expr(const Expr& e, const std::function<void(const Expr&)>& fn) {
  fn(e);
  if (const auto* fa = std::get_if<FieldAccessExpr>(&e.node)) {
    walk_expr(*fa->recv, fn);
  } else if (const auto* call = std::get_if<CallExpr>(&e.node)) {
    walk_expr(*call->recv, fn);
    for (const auto& a : call->args) walk_expr(*a, fn);
  } else if (const auto* n = std::get_if<NewExpr>(&e.node)) {
    for (const auto& a : n->args) walk_expr(*a, fn);
  } else if (const auto* c = std::get_if<CastExpr>(&e.node)) {
    walk_expr(*c->operand, fn);
  } else if (const auto* a = std::get_if<AssignExpr>(&e.node)) {
    walk_expr(*a->lhs, fn);
    walk_expr(*a->rhs, fn);
  }
}

void walk_stmt_exprs(const Stmt& s, const std::function<void(const Expr&)>& fn) {
  if (const auto* v = std::get_if<VarDeclStmt>(&s.node)) {
    if (v->init) walk_expr(*v->init, fn);
  } else if (const auto* e = std::get_if<ExprStmt>(&s.node)) {
    walk_expr(*e->expr, fn);
  } else if (const auto* r = std::get_if<ReturnStmt>(&s.node)) {
    if (r->value) walk_expr(*r->value, fn);
  } else if (const auto* t = std::get_if<ThrowStmt>(&s.node)) {
    walk_expr(*t->value, fn);
  } else if (const auto* tc = std::get_if<TryCatchStmt>(&s.node)) {
    for (const auto& inner : tc->body.stmts) walk_stmt_exprs(*inner, fn);
    for (const auto& clause : tc->catches) {
      for (const auto& inner : clause.body.stmts) walk_stmt_exprs(*inner, fn);
    }
  }
}

void walk_stmt_types(const Stmt& s, const std::function<void(const TypeName&)>& fn);

void walk_expr_types(const Expr& e, const std::function<void(const TypeName&)>& fn) {
  if (const auto* n = std::get_if<NewExpr>(&e.node)) {
    fn(n->type);
    for (const auto& a : n->args) walk_expr_types(*a, fn);
  } else if (const auto* c = std::get_if<CastExpr>(&e.node)) {
    fn(c->type);
    walk_expr_types(*c->operand, fn);
  } else if (const auto* fa = std::get_if<FieldAccessExpr>(&e.node)) {
    walk_expr_types(*fa->recv, fn);
  } else if (const auto* call = std::get_if<CallExpr>(&e.node)) {
    walk_expr_types(*call->recv, fn);
    for (const auto& a : call->args) walk_expr_types(*a, fn);
  } else if (const auto* a = std::get_if<AssignExpr>(&e.node)) {
    walk_expr_types(*a->lhs, fn);
    walk_expr_types(*a->rhs, fn);
  }
}

void walk_stmt_types(const Stmt& s, const std::function<void(const TypeName&)>& fn) {
  if (const auto* v = std::get_if<VarDeclStmt>(&s.node)) {
    fn(v->type);
    if (v->init) walk_expr_types(*v->init, fn);
  } else if (const auto* e = std::get_if<ExprStmt>(&s.node)) {
    walk_expr_types(*e->expr, fn);
  } else if (const auto* r = std::get_if<ReturnStmt>(&s.node)) {
    if (r->value) walk_expr_types(*r->value, fn);
  } else if (const auto* t = std::get_if<ThrowStmt>(&s.node)) {
    walk_expr_types(*t->value, fn);
  } else if (const auto* tc = std::get_if<TryCatchStmt>(&s.node)) {
    for (const auto& inner : tc->body.stmts) walk_stmt_types(*inner, fn);
    for (const auto& clause : tc->catches) {
      fn(clause.type);
      for (const auto& inner : clause.body.stmts) walk_stmt_types(*inner, fn);
    }
  }
}

/// Depth-first search for the innermost statement containing the span.
bool find_in_block(const Block& block, const Span& span, EnclosingInfo& info) {
  for (const auto& stmt : block.stmts) {
    if (!stmt->span.contains(span)) continue;
    info.chain.push_back(stmt.get());
    info.stmt = stmt.get();
    if (const auto* tc = std::get_if<TryCatchStmt>(&stmt->node)) {
      if (find_in_block(tc->body, span, info)) return true;
      for (const auto& clause : tc->catches) {
        if (find_in_block(clause.body, span, info)) return true;
      }
    }
    return true;
  }
  return false;
}

}  // namespace

void for_each_expr(const CompilationUnit& unit,
                   const std::function<void(const Expr&)>& fn) {
  for (const auto& decl : unit.types) {
    for (const auto& member : decl.members) {
      if (const auto* m = std::get_if<MethodDecl>(&member)) {
        if (m->body) {
          for (const auto& s : m->body->stmts) walk_stmt_exprs(*s, fn);
        }
      } else if (const auto* c = std::get_if<ConstructorDecl>(&member)) {
        if (c->body) {
          for (const auto& s : c->body->stmts) walk_stmt_exprs(*s, fn);
        }
      }
    }
  }
}

void for_each_type_ref(const CompilationUnit& unit,
                       const std::function<void(const TypeName&)>& fn) {
  for (const auto& decl : unit.types) {
    if (decl.superclass) fn(*decl.superclass);
    for (const auto& iface : decl.interfaces) fn(iface);
    for (const auto& member : decl.members) {
      if (const auto* f = std::get_if<FieldDecl>(&member)) {
        fn(f->type);
      } else if (const auto* m = std::get_if<MethodDecl>(&member)) {
        fn(m->return_type);
        for (const auto& p : m->params) fn(p.type);
        for (const auto& t : m->throws) fn(t);
        if (m->body) {
          for (const auto& s : m->body->stmts) walk_stmt_types(*s, fn);
        }
      } else if (const auto* c = std::get_if<ConstructorDecl>(&member)) {
        for (const auto& p : c->params) fn(p.type);
        for (const auto& t : c->throws) fn(t);
        if (c->body) {
          for (const auto& s : c->body->stmts) walk_stmt_types(*s, fn);
        }
      }
    }
  }
}

std::optional<EnclosingInfo> find_enclosing(const CompilationUnit& unit,
                                            const Span& span) {
  for (const auto& decl : unit.types) {
    if (!decl.span.contains(span)) continue;
    for (const auto& member : decl.members) {
      EnclosingInfo info;
      info.type = &decl;
      if (const auto* m = std::get_if<MethodDecl>(&member)) {
        if (m->body && m->span.contains(span)) {
          info.method = m;
          if (find_in_block(*m->body, span, info)) return info;
        }
      } else if (const auto* c = std::get_if<ConstructorDecl>(&member)) {
        if (c->body && c->span.contains(span)) {
          info.ctor = c;
          if (find_in_block(*c->body, span, info)) return info;
        }
      }
    }
  }
  return std::nullopt;
}

const Expr* find_expr_at(const CompilationUnit& unit, const Span& span) {
  const Expr* found = nullptr;
  for_each_expr(unit, [&](const Expr& e) {
    if (!found && e.span == span) found = &e;
  });
  return found;
}

const Expr* find_assign_with_lhs(const CompilationUnit& unit, const Span& span) {
  const Expr* found = nullptr;
  for_each_expr(unit, [&](const Expr& e) {
    if (found) return;
    if (const auto* a = std::get_if<AssignExpr>(&e.node)) {
      if (a->lhs->span == span) found = &e;
    }
  });
  return found;
}

Program parse_program(const std::vector<std::pair<std::string, std::string>>& sources) {
  Program out;
  for (const auto& [path, text] : sources) {
    ProgramFile file;
    file.path = path;
    file.source = SourceText(path, text);
    file.unit = std::make_shared<const CompilationUnit>(parse(text, path));
    out.files.push_back(std::move(file));
  }
  return out;
}

Program load_program(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    throw std::runtime_error("not a directory: " + dir);
  }
  std::vector<std::pair<std::string, std::string>> sources;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".ml0") continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    sources.emplace_back(fs::relative(entry.path(), dir).generic_string(), buf.str());
  }
  std::sort(sources.begin(), sources.end());
  return parse_program(sources);
}

}  // namespace miniup
