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

#include "miniup/checker.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>

namespace miniup {
namespace {

bool is_primitive_name(const std::string& name) {
  return name == "bool" || name == "int" || name == "string" || name == "void";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string render_signature(const MethodEntry& m) {
  std::string out = m.return_type + " " + m.name + "(";
  for (std::size_t i = 0; i < m.param_types.size(); ++i) {
    if (i > 0) out += ", ";
    out += m.param_types[i] + " " + m.param_names[i];
  }
  out += ")";
  if (!m.throws.empty()) out += " throws " + join(m.throws, ", ");
  return out;
}

std::string qualify(const std::string& package, const std::string& simple) {
  return package.empty() ? simple : package + "." + simple;
}

std::string simple_of(const std::string& qualified) {
  auto dot = qualified.rfind('.');
  return dot == std::string::npos ? qualified : qualified.substr(dot + 1);
}

}  // namespace

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UndefinedType: return "UndefinedType";
    case ErrorKind::UndefinedMethod: return "UndefinedMethod";
    case ErrorKind::UndefinedField: return "UndefinedField";
    case ErrorKind::UndefinedVariable: return "UndefinedVariable";
    case ErrorKind::UndefinedConstructor: return "UndefinedConstructor";
    case ErrorKind::IncompatibleType: return "IncompatibleType";
    case ErrorKind::IncompatibleMethodArgs: return "IncompatibleMethodArgs";
    case ErrorKind::UnimplementedAbstractMethod: return "UnimplementedAbstractMethod";
    case ErrorKind::UnhandledException: return "UnhandledException";
    case ErrorKind::AmbiguousType: return "AmbiguousType";
    case ErrorKind::InvisibleField: return "InvisibleField";
  }
  return "?";
}

ErrorKind error_kind_from_string(const std::string& name) {
  static const std::pair<const char*, ErrorKind> table[] = {
      {"UndefinedType", ErrorKind::UndefinedType},
      {"UndefinedMethod", ErrorKind::UndefinedMethod},
      {"UndefinedField", ErrorKind::UndefinedField},
      {"UndefinedVariable", ErrorKind::UndefinedVariable},
      {"UndefinedConstructor", ErrorKind::UndefinedConstructor},
      {"IncompatibleType", ErrorKind::IncompatibleType},
      {"IncompatibleMethodArgs", ErrorKind::IncompatibleMethodArgs},
      {"UnimplementedAbstractMethod", ErrorKind::UnimplementedAbstractMethod},
      {"UnhandledException", ErrorKind::UnhandledException},
      {"AmbiguousType", ErrorKind::AmbiguousType},
      {"InvisibleField", ErrorKind::InvisibleField},
  };
  for (const auto& [text, kind] : table) {
    if (name == text) return kind;
  }
  throw std::invalid_argument("unknown error kind: " + name);
}

std::string render_message(ErrorKind kind, const std::string& subject,
                           const std::string& expected, const std::string& actual) {
  switch (kind) {
    case ErrorKind::UndefinedType:
      return "The type " + subject + " cannot be resolved";
    case ErrorKind::UndefinedMethod:
      return "The method " + subject + " is undefined";
    case ErrorKind::UndefinedField:
      return "The field " + subject + " is undefined";
    case ErrorKind::UndefinedVariable:
      return subject + " cannot be resolved to a variable";
    case ErrorKind::UndefinedConstructor:
      return "The constructor " + subject + " is undefined";
    case ErrorKind::IncompatibleType:
      return "Type mismatch: cannot convert from " + actual + " to " + expected;
    case ErrorKind::IncompatibleMethodArgs:
      return "The method " + subject + " is not applicable for the arguments " + actual;
    case ErrorKind::UnimplementedAbstractMethod:
      return "The type " + actual +
             " must implement the inherited abstract method " + subject + "()";
    case ErrorKind::UnhandledException:
      return "Unhandled exception type " + subject;
    case ErrorKind::AmbiguousType:
      return "The type " + subject + " is ambiguous (candidates: " + expected + ")";
    case ErrorKind::InvisibleField:
      return "The field " + subject + " is not visible";
  }
  return "";
}

ApiSymbolTable build_client_table(const std::vector<const CompilationUnit*>& units,
                                  const ApiSymbolTable* extra) {
  // Same shape as build_symbol_table, but duplicates keep the first
  // declaration and signature references may resolve into `extra`.
  std::map<std::string, TypeEntry> types;
  for (const auto* unit : units) {
    for (const auto& decl : unit->types) {
      std::string qualified = qualify(unit->package_name, decl.name);
      if (types.count(qualified)) continue;
      TypeEntry entry;
      entry.qualified = qualified;
      entry.package = unit->package_name;
      entry.simple = decl.name;
      entry.kind = decl.kind;
      entry.vis = decl.vis;
      entry.is_abstract = decl.is_abstract || decl.kind == TypeDeclKind::Interface;
      types.emplace(qualified, std::move(entry));
    }
  }
  auto exists = [&](const std::string& name) {
    return types.count(name) > 0 || (extra && extra->find(name) != nullptr);
  };
  std::set<std::string> filled;
  for (const auto* unit : units) {
    auto resolve = [&](const std::string& written) -> std::string {
      if (is_primitive_name(written) || written.find('.') != std::string::npos) {
        return written;
      }
      for (const auto& imp : unit->imports) {
        if (!imp.wildcard && simple_of(imp.qualified) == written) return imp.qualified;
      }
      std::vector<std::string> hits;
      for (const auto& imp : unit->imports) {
        if (imp.wildcard && exists(imp.qualified + "." + written)) {
          hits.push_back(imp.qualified + "." + written);
        }
      }
      if (hits.size() == 1) return hits.front();
      std::string same_pkg = qualify(unit->package_name, written);
      if (exists(same_pkg)) return same_pkg;
      return written;
    };
    for (const auto& decl : unit->types) {
      std::string qualified = qualify(unit->package_name, decl.name);
      TypeEntry& entry = types.at(qualified);
      if (!filled.insert(qualified).second) {
        continue;  // shadowed duplicate, the first declaration wins
      }
      if (decl.superclass) entry.superclass = resolve(decl.superclass->name);
      for (const auto& iface : decl.interfaces) {
        entry.interfaces.push_back(resolve(iface.name));
      }
      for (const auto& member : decl.members) {
        if (const auto* f = std::get_if<FieldDecl>(&member)) {
          entry.fields.push_back({qualified, f->name, resolve(f->type.name),
                                  f->is_static, f->vis});
        } else if (const auto* m = std::get_if<MethodDecl>(&member)) {
          MethodEntry me;
          me.owner = qualified;
          me.name = m->name;
          for (const auto& p : m->params) {
            me.param_types.push_back(resolve(p.type.name));
            me.param_names.push_back(p.name);
          }
          me.return_type = resolve(m->return_type.name);
          for (const auto& t : m->throws) me.throws.push_back(resolve(t.name));
          me.is_static = m->is_static;
          me.is_abstract = m->is_abstract;
          me.vis = m->vis;
          entry.methods.push_back(std::move(me));
        } else if (const auto* c = std::get_if<ConstructorDecl>(&member)) {
          ConstructorEntry ce;
          ce.owner = qualified;
          for (const auto& p : c->params) {
            ce.param_types.push_back(resolve(p.type.name));
            ce.param_names.push_back(p.name);
          }
          for (const auto& t : c->throws) ce.throws.push_back(resolve(t.name));
          ce.vis = c->vis;
          entry.constructors.push_back(std::move(ce));
        }
      }
    }
  }
  return ApiSymbolTable(std::move(types), "client");
}

namespace {

class Checker {
 public:
  Checker(const std::vector<const CompilationUnit*>& client, const ApiSymbolTable& lib)
      : client_table_(build_client_table(client, &lib)),
        universe_({&lib, &client_table_}),
        units_(client) {}

  CheckResult run() {
    for (const auto* unit : units_) check_unit(*unit);
    std::sort(result_.errors.begin(), result_.errors.end(),
              [](const CompileError& a, const CompileError& b) {
                return std::make_tuple(a.span.file, a.span.start_line,
                                       a.span.start_col, std::string(to_string(a.kind)),
                                       a.subject, a.expected, a.actual) <
                       std::make_tuple(b.span.file, b.span.start_line,
                                       b.span.start_col, std::string(to_string(b.kind)),
                                       b.subject, b.expected, b.actual);
              });
    result_.errors.erase(std::unique(result_.errors.begin(), result_.errors.end()),
                         result_.errors.end());
    return std::move(result_);
  }

 private:
  struct Receiver {
    bool ok = false;
    bool is_static = false;
    std::string type;
  };

  struct TypeRes {
    enum class Status { Ok, NotFound, Ambiguous } status = Status::NotFound;
    std::string fqn;  // resolved, or the best-known qualified subject
    std::vector<std::string> candidates;
  };

  void emit(ErrorKind kind, const Span& span, std::string subject,
            std::string expected = "", std::string actual = "") {
    CompileError err;
    err.kind = kind;
    err.span = span;
    err.subject = std::move(subject);
    err.expected = std::move(expected);
    err.actual = std::move(actual);
    err.message = render_message(kind, err.subject, err.expected, err.actual);
    result_.errors.push_back(std::move(err));
  }

  bool type_accessible(const TypeEntry& entry) const {
    return entry.vis == Visibility::Public || entry.package == unit_->package_name;
  }

  bool member_visible(Visibility vis, const std::string& owner) const {
    return vis == Visibility::Public || owner == enclosing_class_;
  }

  TypeRes resolve_type_name(const std::string& written) const {
    TypeRes res;
    if (is_primitive_name(written)) {
      res.status = TypeRes::Status::Ok;
      res.fqn = written;
      return res;
    }
    if (written.find('.') != std::string::npos) {
      const TypeEntry* entry = universe_.find(written);
      res.fqn = written;
      res.status = entry && type_accessible(*entry) ? TypeRes::Status::Ok
                                                    : TypeRes::Status::NotFound;
      return res;
    }
    // explicit imports first
    std::vector<std::string> explicit_hits;
    for (const auto& imp : unit_->imports) {
      if (!imp.wildcard && simple_of(imp.qualified) == written) {
        if (std::find(explicit_hits.begin(), explicit_hits.end(), imp.qualified) ==
            explicit_hits.end()) {
          explicit_hits.push_back(imp.qualified);
        }
      }
    }
    if (explicit_hits.size() > 1) {
      res.status = TypeRes::Status::Ambiguous;
      res.candidates = explicit_hits;
      std::sort(res.candidates.begin(), res.candidates.end());
      return res;
    }
    if (explicit_hits.size() == 1) {
      res.fqn = explicit_hits.front();
      const TypeEntry* entry = universe_.find(res.fqn);
      res.status = entry && type_accessible(*entry) ? TypeRes::Status::Ok
                                                    : TypeRes::Status::NotFound;
      return res;
    }
    // wildcard imports next
    std::vector<std::string> wildcard_hits;
    for (const auto& imp : unit_->imports) {
      if (!imp.wildcard) continue;
      std::string candidate = imp.qualified + "." + written;
      const TypeEntry* entry = universe_.find(candidate);
      if (entry && type_accessible(*entry)) wildcard_hits.push_back(candidate);
    }
    std::sort(wildcard_hits.begin(), wildcard_hits.end());
    wildcard_hits.erase(std::unique(wildcard_hits.begin(), wildcard_hits.end()),
                        wildcard_hits.end());
    if (wildcard_hits.size() > 1) {
      res.status = TypeRes::Status::Ambiguous;
      res.candidates = wildcard_hits;
      return res;
    }
    if (wildcard_hits.size() == 1) {
      res.status = TypeRes::Status::Ok;
      res.fqn = wildcard_hits.front();
      return res;
    }
    // same package last
    std::string same_pkg = qualify(unit_->package_name, written);
    const TypeEntry* entry = universe_.find(same_pkg);
    if (entry && type_accessible(*entry)) {
      res.status = TypeRes::Status::Ok;
      res.fqn = same_pkg;
      return res;
    }
    res.fqn = written;  // no qualification available
    return res;
  }

  /// Resolves a type reference in a type position, reporting failures.
  /// Returns "" when unresolved.
  std::string resolve_type_use(const TypeName& type) {
    TypeRes res = resolve_type_name(type.name);
    switch (res.status) {
      case TypeRes::Status::Ok:
        return res.fqn;
      case TypeRes::Status::Ambiguous:
        emit(ErrorKind::AmbiguousType, type.span, type.name,
             join(res.candidates, ", "));
        return "";
      case TypeRes::Status::NotFound:
        emit(ErrorKind::UndefinedType, type.span, res.fqn);
        return "";
    }
    return "";
  }

  bool compat(const std::string& actual, const std::string& expected) const {
    if (actual.empty() || expected.empty()) return true;
    if (actual == "null") {
      return expected != "int" && expected != "bool" && expected != "void";
    }
    if (actual == expected) return true;
    if (is_primitive_name(actual) || is_primitive_name(expected)) return false;
    return universe_.is_subtype(actual, expected);
  }

  bool subtype_lenient(const std::string& a, const std::string& b) const {
    return a == b || universe_.is_subtype(a, b);
  }

  // ---- unit / declaration level ----

  void check_unit(const CompilationUnit& unit) {
    unit_ = &unit;
    for (const auto& imp : unit.imports) {
      if (imp.wildcard) continue;
      const TypeEntry* entry = universe_.find(imp.qualified);
      if (!entry || !type_accessible(*entry)) {
        emit(ErrorKind::UndefinedType, imp.span, imp.qualified);
      }
    }
    for (const auto& decl : unit.types) check_type_decl(decl);
  }

  void check_type_decl(const TypeDecl& decl) {
    enclosing_class_ = qualify(unit_->package_name, decl.name);
    if (decl.superclass) resolve_type_use(*decl.superclass);
    for (const auto& iface : decl.interfaces) resolve_type_use(iface);
    check_unimplemented(decl);
    for (const auto& member : decl.members) {
      if (const auto* f = std::get_if<FieldDecl>(&member)) {
        resolve_type_use(f->type);
      } else if (const auto* m = std::get_if<MethodDecl>(&member)) {
        check_method(*m);
      } else if (const auto* c = std::get_if<ConstructorDecl>(&member)) {
        check_constructor(*c);
      }
    }
    enclosing_class_.clear();
  }

  void check_unimplemented(const TypeDecl& decl) {
    if (decl.kind != TypeDeclKind::Class || decl.is_abstract) return;
    auto abstracts = universe_.abstract_methods(enclosing_class_);
    auto concretes = universe_.concrete_methods(enclosing_class_);
    std::set<std::string> seen;
    for (const MethodEntry* a : abstracts) {
      std::string sig = a->name + render_param_types(a->param_types);
      if (!seen.insert(sig).second) continue;  // one error per missing method
      bool implemented = false;
      for (const MethodEntry* c : concretes) {
        if (c->name == a->name && c->param_types == a->param_types) {
          implemented = true;
          break;
        }
      }
      if (!implemented) {
        emit(ErrorKind::UnimplementedAbstractMethod, decl.name_span,
             a->owner + "." + a->name, render_signature(*a), enclosing_class_);
      }
    }
  }

  void check_method(const MethodDecl& m) {
    std::string ret = m.return_type.name == "void" ? "void"
                                                   : resolve_type_use(m.return_type);
    std::vector<std::string> declared_throws;
    for (const auto& t : m.throws) {
      std::string resolved = resolve_type_use(t);
      if (!resolved.empty()) declared_throws.push_back(resolved);
    }
    scopes_.clear();
    scopes_.emplace_back();
    for (const auto& p : m.params) {
      std::string t = resolve_type_use(p.type);
      scopes_.back()[p.name] = t;
    }
    if (m.body) {
      return_type_ = ret;
      method_throws_ = declared_throws;
      try_stack_.clear();
      check_block(*m.body);
    }
    scopes_.clear();
  }

  void check_constructor(const ConstructorDecl& c) {
    std::vector<std::string> declared_throws;
    for (const auto& t : c.throws) {
      std::string resolved = resolve_type_use(t);
      if (!resolved.empty()) declared_throws.push_back(resolved);
    }
    scopes_.clear();
    scopes_.emplace_back();
    for (const auto& p : c.params) {
      scopes_.back()[p.name] = resolve_type_use(p.type);
    }
    if (c.body) {
      return_type_ = "void";
      method_throws_ = declared_throws;
      try_stack_.clear();
      check_block(*c.body);
    }
    scopes_.clear();
  }

  // ---- statements ----

  void check_block(const Block& block) {
    scopes_.emplace_back();
    for (const auto& stmt : block.stmts) check_stmt(*stmt);
    scopes_.pop_back();
  }

  void check_stmt(const Stmt& stmt) {
    if (const auto* v = std::get_if<VarDeclStmt>(&stmt.node)) {
      std::string declared = resolve_type_use(v->type);
      if (v->init) {
        std::string t = check_expr(*v->init);
        if (!compat(t, declared)) {
          emit(ErrorKind::IncompatibleType, v->init->span, v->name, declared, t);
        }
      }
      scopes_.back()[v->name] = declared;
    } else if (const auto* e = std::get_if<ExprStmt>(&stmt.node)) {
      check_expr(*e->expr);
    } else if (const auto* r = std::get_if<ReturnStmt>(&stmt.node)) {
      if (r->value) {
        std::string t = check_expr(*r->value);
        if (return_type_ == "void") {
          emit(ErrorKind::IncompatibleType, r->value->span, "<return>", "void", t);
        } else if (!compat(t, return_type_)) {
          emit(ErrorKind::IncompatibleType, r->value->span, "<return>", return_type_, t);
        }
      } else if (!return_type_.empty() && return_type_ != "void") {
        emit(ErrorKind::IncompatibleType, stmt.span, "<return>", return_type_, "void");
      }
    } else if (const auto* t = std::get_if<ThrowStmt>(&stmt.node)) {
      std::string et = check_expr(*t->value);
      if (!et.empty() && et != "null" && !is_primitive_name(et)) {
        check_exception_handled(et, stmt.span);
      }
    } else if (const auto* tc = std::get_if<TryCatchStmt>(&stmt.node)) {
      std::vector<std::string> frame;
      for (const auto& clause : tc->catches) {
        std::string resolved = resolve_type_use(clause.type);
        if (!resolved.empty()) frame.push_back(resolved);
      }
      try_stack_.push_back(frame);
      check_block(tc->body);
      try_stack_.pop_back();
      for (const auto& clause : tc->catches) {
        scopes_.emplace_back();
        TypeRes res = resolve_type_name(clause.type.name);
        scopes_.back()[clause.var] =
            res.status == TypeRes::Status::Ok ? res.fqn : "";
        for (const auto& inner : clause.body.stmts) check_stmt(*inner);
        scopes_.pop_back();
      }
    }
  }

  void check_exception_handled(const std::string& exc, const Span& span) {
    for (auto frame = try_stack_.rbegin(); frame != try_stack_.rend(); ++frame) {
      for (const auto& caught : *frame) {
        if (subtype_lenient(exc, caught)) return;
      }
    }
    for (const auto& declared : method_throws_) {
      if (subtype_lenient(exc, declared)) return;
    }
    emit(ErrorKind::UnhandledException, span, exc);
  }

  // ---- expressions ----

  std::optional<std::string> lookup_var(const std::string& name) const {
    for (auto scope = scopes_.rbegin(); scope != scopes_.rend(); ++scope) {
      auto it = scope->find(name);
      if (it != scope->end()) return it->second;
    }
    return std::nullopt;
  }

  const FieldEntry* lookup_own_field(const std::string& name) const {
    if (enclosing_class_.empty()) return nullptr;
    const FieldEntry* f = universe_.field_named(enclosing_class_, name);
    if (!f) return nullptr;
    if (!member_visible(f->vis, f->owner)) return nullptr;
    return f;
  }

  std::string check_expr(const Expr& expr) {
    std::string type = std::visit(
        [&](const auto& node) { return check_expr_node(expr, node); }, expr.node);
    result_.expr_types[expr.span] = type;
    return type;
  }

  std::string check_expr_node(const Expr& e, const NameExpr& n) {
    if (auto t = lookup_var(n.id)) return *t;
    if (const FieldEntry* f = lookup_own_field(n.id)) return f->type;
    emit(ErrorKind::UndefinedVariable, e.span, n.id);
    return "";
  }

  std::string check_expr_node(const Expr&, const LiteralExpr& lit) {
    switch (lit.kind) {
      case LiteralKind::Bool: return "bool";
      case LiteralKind::Int: return "int";
      case LiteralKind::Str: return "string";
      case LiteralKind::Null: return "null";
    }
    return "";
  }

  Receiver resolve_receiver(const Expr& recv) {
    Receiver out;
    if (const auto* name = std::get_if<NameExpr>(&recv.node)) {
      if (auto t = lookup_var(name->id)) {
        result_.expr_types[recv.span] = *t;
        out.ok = !t->empty();
        out.type = *t;
        return out;
      }
      if (const FieldEntry* f = lookup_own_field(name->id)) {
        result_.expr_types[recv.span] = f->type;
        out.ok = !f->type.empty();
        out.type = f->type;
        return out;
      }
      TypeRes res = resolve_type_name(name->id);
      if (res.status == TypeRes::Status::Ok) {
        out.ok = true;
        out.is_static = true;
        out.type = res.fqn;
        return out;
      }
      if (res.status == TypeRes::Status::Ambiguous) {
        emit(ErrorKind::AmbiguousType, recv.span, name->id, join(res.candidates, ", "));
        return out;
      }
      if (res.fqn != name->id) {
        // a dangling explicit import still qualifies the subject
        emit(ErrorKind::UndefinedType, recv.span, res.fqn);
      } else {
        emit(ErrorKind::UndefinedVariable, recv.span, name->id);
      }
      return out;
    }
    std::string t = check_expr(recv);
    out.ok = !t.empty() && t != "null";
    out.type = t;
    return out;
  }

  std::string check_expr_node(const Expr& e, const CallExpr& call) {
    std::vector<std::string> arg_types;
    for (const auto& arg : call.args) arg_types.push_back(check_expr(*arg));
    Receiver recv = resolve_receiver(*call.recv);
    result_.access_info[e.span] = {recv.is_static, recv.type, false};
    if (!recv.ok) return "";
    std::vector<const MethodEntry*> methods;
    for (const MethodEntry* m : universe_.methods_named(recv.type, call.method)) {
      if (member_visible(m->vis, m->owner)) methods.push_back(m);
    }
    if (methods.empty()) {
      emit(ErrorKind::UndefinedMethod, e.span,
           recv.type + "." + call.method + render_param_types(arg_types), "",
           render_param_types(arg_types));
      return "";
    }
    for (const MethodEntry* m : methods) {
      if (m->is_static != recv.is_static) continue;
      if (m->param_types.size() != arg_types.size()) continue;
      bool all_ok = true;
      for (std::size_t i = 0; i < arg_types.size(); ++i) {
        if (!compat(arg_types[i], m->param_types[i])) {
          all_ok = false;
          break;
        }
      }
      if (!all_ok) continue;
      for (const auto& exc : m->throws) check_exception_handled(exc, e.span);
      return m->return_type;
    }
    const MethodEntry* closest = methods.front();
    for (const MethodEntry* m : methods) {
      auto diff = [&](const MethodEntry* x) {
        auto n = static_cast<long>(x->param_types.size());
        auto k = static_cast<long>(arg_types.size());
        return std::make_pair(std::labs(n - k), full_name(*x));
      };
      if (diff(m) < diff(closest)) closest = m;
    }
    emit(ErrorKind::IncompatibleMethodArgs, e.span, recv.type + "." + call.method,
         render_param_types(closest->param_types), render_param_types(arg_types));
    return "";
  }

  std::string check_expr_node(const Expr& e, const FieldAccessExpr& fa) {
    return check_field_access(e, fa, /*is_write=*/false);
  }

  std::string check_field_access(const Expr& e, const FieldAccessExpr& fa,
                                 bool is_write) {
    Receiver recv = resolve_receiver(*fa.recv);
    result_.access_info[e.span] = {recv.is_static, recv.type, is_write};
    if (!recv.ok) return "";
    const FieldEntry* field = universe_.field_named(recv.type, fa.field);
    if (!field) {
      emit(ErrorKind::UndefinedField, e.span, recv.type + "." + fa.field);
      return "";
    }
    if (!member_visible(field->vis, field->owner)) {
      emit(ErrorKind::InvisibleField, e.span, field->owner + "." + fa.field);
      return field->type;  // the type is still known; do not cascade
    }
    if (recv.is_static && !field->is_static) {
      emit(ErrorKind::UndefinedField, e.span, recv.type + "." + fa.field);
      return "";
    }
    return field->type;
  }

  std::string check_expr_node(const Expr& e, const NewExpr& n) {
    std::vector<std::string> arg_types;
    for (const auto& arg : n.args) arg_types.push_back(check_expr(*arg));
    std::string type = resolve_type_use(n.type);
    if (type.empty()) return "";
    std::string subject = type + render_param_types(arg_types);
    auto ctors = universe_.constructors(type);
    if (ctors.empty()) {
      // implicit zero-argument constructor
      if (!arg_types.empty()) {
        emit(ErrorKind::IncompatibleMethodArgs, e.span, subject, "()",
             render_param_types(arg_types));
      }
      return type;
    }
    std::vector<const ConstructorEntry*> accessible;
    for (const ConstructorEntry* c : ctors) {
      if (member_visible(c->vis, c->owner)) accessible.push_back(c);
    }
    if (accessible.empty()) {
      emit(ErrorKind::UndefinedConstructor, e.span, subject, "",
           render_param_types(arg_types));
      return type;
    }
    for (const ConstructorEntry* c : accessible) {
      if (c->param_types.size() != arg_types.size()) continue;
      bool all_ok = true;
      for (std::size_t i = 0; i < arg_types.size(); ++i) {
        if (!compat(arg_types[i], c->param_types[i])) {
          all_ok = false;
          break;
        }
      }
      if (!all_ok) continue;
      for (const auto& exc : c->throws) check_exception_handled(exc, e.span);
      return type;
    }
    const ConstructorEntry* closest = accessible.front();
    for (const ConstructorEntry* c : accessible) {
      auto diff = [&](const ConstructorEntry* x) {
        auto nn = static_cast<long>(x->param_types.size());
        auto k = static_cast<long>(arg_types.size());
        return std::make_pair(std::labs(nn - k), render_param_types(x->param_types));
      };
      if (diff(c) < diff(closest)) closest = c;
    }
    emit(ErrorKind::IncompatibleMethodArgs, e.span, subject,
         render_param_types(closest->param_types), render_param_types(arg_types));
    return type;
  }

  std::string check_expr_node(const Expr& e, const CastExpr& c) {
    std::string target = resolve_type_use(c.type);
    std::string operand = check_expr(*c.operand);
    if (target.empty() || operand.empty()) return target;
    bool valid;
    if (is_primitive_name(target)) {
      valid = operand == target || (target == "string" && operand == "null");
    } else {
      valid = operand == "null" || !is_primitive_name(operand);
    }
    if (!valid) {
      emit(ErrorKind::IncompatibleType, e.span, "<cast>", target, operand);
    }
    return target;
  }

  std::string check_expr_node(const Expr&, const AssignExpr& a) {
    std::string lhs_type;
    std::string subject = "<expr>";
    if (const auto* name = std::get_if<NameExpr>(&a.lhs->node)) {
      if (auto t = lookup_var(name->id)) {
        lhs_type = *t;
      } else if (const FieldEntry* f = lookup_own_field(name->id)) {
        lhs_type = f->type;
      } else {
        emit(ErrorKind::UndefinedVariable, a.lhs->span, name->id);
      }
      subject = name->id;
      result_.expr_types[a.lhs->span] = lhs_type;
    } else if (const auto* fa = std::get_if<FieldAccessExpr>(&a.lhs->node)) {
      lhs_type = check_field_access(*a.lhs, *fa, /*is_write=*/true);
      result_.expr_types[a.lhs->span] = lhs_type;
      subject = fa->field;
    }
    std::string rhs_type = check_expr(*a.rhs);
    if (!compat(rhs_type, lhs_type)) {
      emit(ErrorKind::IncompatibleType, a.rhs->span, subject, lhs_type, rhs_type);
    }
    return lhs_type;
  }

  ApiSymbolTable client_table_;
  TypeUniverse universe_;
  std::vector<const CompilationUnit*> units_;
  CheckResult result_;

  const CompilationUnit* unit_ = nullptr;
  std::string enclosing_class_;
  std::string return_type_;
  std::vector<std::string> method_throws_;
  std::vector<std::map<std::string, std::string>> scopes_;
  std::vector<std::vector<std::string>> try_stack_;
};

}  // namespace

CheckResult check_program(const std::vector<const CompilationUnit*>& client,
                          const ApiSymbolTable& lib) {
  return Checker(client, lib).run();
}

std::vector<CompileError> check(const std::vector<const CompilationUnit*>& client,
                                const ApiSymbolTable& lib) {
  return check_program(client, lib).errors;
}

}  // namespace miniup
