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

#include <sstream>
#include <string>

#include "miniup/ast.hpp"
#include "miniup/parser.hpp"

namespace miniup {
namespace {

class Printer {
 public:
  std::string run(const CompilationUnit& unit) {
    if (!unit.package_name.empty()) {
      line("package " + unit.package_name + ";");
      if (!unit.imports.empty() || !unit.types.empty()) line("");
    }
    for (const auto& imp : unit.imports) {
      comments(imp.leading_comments);
      line("import " + imp.qualified + (imp.wildcard ? ".*" : "") + ";");
    }
    if (!unit.imports.empty() && !unit.types.empty()) line("");
    bool first = true;
    for (const auto& decl : unit.types) {
      if (!first) line("");
      first = false;
      type_decl(decl);
    }
    comments(unit.trailing_comments);
    return out_.str();
  }

 private:
  void line(const std::string& text) {
    if (!text.empty()) out_ << std::string(static_cast<std::size_t>(indent_) * 2, ' ') << text;
    out_ << "\n";
  }

  void comments(const std::vector<Comment>& list) {
    for (const auto& c : list) line("//" + c.text);
  }

  static std::string modifiers(Visibility vis, bool is_static, bool is_abstract) {
    std::string out = vis == Visibility::Private ? "private " : "public ";
    if (is_static) out += "static ";
    if (is_abstract) out += "abstract ";
    return out;
  }

  void type_decl(const TypeDecl& decl) {
    comments(decl.leading_comments);
    std::string head = decl.vis == Visibility::Private ? "private " : "public ";
    if (decl.is_abstract) head += "abstract ";
    head += decl.kind == TypeDeclKind::Interface ? "interface " : "class ";
    head += decl.name;
    if (decl.superclass) head += " extends " + decl.superclass->name;
    if (!decl.interfaces.empty()) {
      head += decl.kind == TypeDeclKind::Interface ? " extends " : " implements ";
      for (std::size_t i = 0; i < decl.interfaces.size(); ++i) {
        if (i > 0) head += ", ";
        head += decl.interfaces[i].name;
      }
    }
    line(head + " {");
    ++indent_;
    for (const auto& member : decl.members) {
      std::visit([&](const auto& m) { this->member(m, decl); }, member);
    }
    --indent_;
    line("}");
  }

  static std::string params_text(const std::vector<Param>& params) {
    std::string out = "(";
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i > 0) out += ", ";
      out += params[i].type.name + " " + params[i].name;
    }
    return out + ")";
  }

  static std::string throws_text(const std::vector<TypeName>& throws) {
    if (throws.empty()) return "";
    std::string out = " throws ";
    for (std::size_t i = 0; i < throws.size(); ++i) {
      if (i > 0) out += ", ";
      out += throws[i].name;
    }
    return out;
  }

  void member(const FieldDecl& f, const TypeDecl&) {
    comments(f.leading_comments);
    line(modifiers(f.vis, f.is_static, false) + f.type.name + " " + f.name + ";");
  }

  void member(const MethodDecl& m, const TypeDecl& owner) {
    comments(m.leading_comments);
    std::string head;
    if (owner.kind == TypeDeclKind::Interface) {
      head = m.return_type.name + " " + m.name + params_text(m.params) +
             throws_text(m.throws) + ";";
      line(head);
      return;
    }
    head = modifiers(m.vis, m.is_static, m.is_abstract) + m.return_type.name +
           " " + m.name + params_text(m.params) + throws_text(m.throws);
    if (!m.body) {
      line(head + ";");
      return;
    }
    line(head + " {");
    block_body(*m.body);
    line("}");
  }

  void member(const ConstructorDecl& c, const TypeDecl&) {
    comments(c.leading_comments);
    std::string head = (c.vis == Visibility::Private ? "private " : "public ") +
                       c.name + params_text(c.params) + throws_text(c.throws);
    if (!c.body) {
      line(head + ";");
      return;
    }
    line(head + " {");
    block_body(*c.body);
    line("}");
  }

  void block_body(const Block& block) {
    ++indent_;
    for (const auto& stmt : block.stmts) this->stmt(*stmt);
    comments(block.trailing_comments);
    --indent_;
  }

  void stmt(const Stmt& s) {
    comments(s.leading_comments);
    std::visit([&](const auto& node) { this->stmt_node(node); }, s.node);
  }

  void stmt_node(const VarDeclStmt& s) {
    std::string text = s.type.name + " " + s.name;
    if (s.init) text += " = " + expr(*s.init);
    line(text + ";");
  }
  void stmt_node(const ExprStmt& s) { line(expr(*s.expr) + ";"); }
  void stmt_node(const ReturnStmt& s) {
    line(s.value ? "return " + expr(*s.value) + ";" : "return;");
  }
  void stmt_node(const ThrowStmt& s) { line("throw " + expr(*s.value) + ";"); }
  void stmt_node(const TryCatchStmt& s) {
    line("try {");
    block_body(s.body);
    for (const auto& clause : s.catches) {
      line("} catch (" + clause.type.name + " " + clause.var + ") {");
      block_body(clause.body);
    }
    line("}");
  }

  std::string expr(const Expr& e) {
    return std::visit([&](const auto& node) { return expr_node(node); }, e.node);
  }

  std::string expr_node(const NameExpr& e) { return e.id; }
  std::string expr_node(const FieldAccessExpr& e) {
    return expr(*e.recv) + "." + e.field;
  }
  std::string expr_node(const CallExpr& e) {
    std::string out = expr(*e.recv) + "." + e.method + "(";
    for (std::size_t i = 0; i < e.args.size(); ++i) {
      if (i > 0) out += ", ";
      out += expr(*e.args[i]);
    }
    return out + ")";
  }
  std::string expr_node(const NewExpr& e) {
    std::string out = "new " + e.type.name + "(";
    for (std::size_t i = 0; i < e.args.size(); ++i) {
      if (i > 0) out += ", ";
      out += expr(*e.args[i]);
    }
    return out + ")";
  }
  std::string expr_node(const CastExpr& e) {
    return "(" + e.type.name + ") " + expr(*e.operand);
  }
  std::string expr_node(const AssignExpr& e) {
    return expr(*e.lhs) + " = " + expr(*e.rhs);
  }
  std::string expr_node(const LiteralExpr& e) { return e.text; }

  std::ostringstream out_;
  int indent_ = 0;
};

class Dumper {
 public:
  std::string unit(const CompilationUnit& u) {
    std::string out = "(unit";
    if (!u.package_name.empty()) out += " package=" + u.package_name;
    for (const auto& imp : u.imports) {
      out += " (import " + imp.qualified + (imp.wildcard ? ".*" : "") + ")";
    }
    for (const auto& t : u.types) out += " " + type_decl(t);
    return out + ")";
  }

  std::string type_decl(const TypeDecl& d) {
    std::string out = "(";
    out += d.kind == TypeDeclKind::Interface ? "interface " : "class ";
    out += d.name;
    out += std::string(" ") + to_string(d.vis);
    if (d.is_abstract) out += " abstract";
    if (d.superclass) out += " extends=" + d.superclass->name;
    for (const auto& i : d.interfaces) out += " implements=" + i.name;
    for (const auto& m : d.members) {
      out += " " + std::visit([&](const auto& node) { return member(node); }, m);
    }
    return out + ")";
  }

  std::string member(const FieldDecl& f) {
    std::string out = "(field " + f.name + " " + f.type.name + " " + to_string(f.vis);
    if (f.is_static) out += " static";
    return out + ")";
  }
  std::string member(const MethodDecl& m) {
    std::string out = "(method " + m.name + " " + signature(m.params, m.throws) +
                      " -> " + m.return_type.name + " " + to_string(m.vis);
    if (m.is_static) out += " static";
    if (m.is_abstract) out += " abstract";
    if (m.body) out += " " + block(*m.body);
    return out + ")";
  }
  std::string member(const ConstructorDecl& c) {
    std::string out = "(ctor " + c.name + " " + signature(c.params, c.throws) +
                      " " + to_string(c.vis);
    if (c.body) out += " " + block(*c.body);
    return out + ")";
  }

  std::string signature(const std::vector<Param>& params,
                        const std::vector<TypeName>& throws) {
    std::string out = "(";
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i > 0) out += " ";
      out += params[i].type.name + ":" + params[i].name;
    }
    out += ")";
    if (!throws.empty()) {
      out += " throws(";
      for (std::size_t i = 0; i < throws.size(); ++i) {
        if (i > 0) out += " ";
        out += throws[i].name;
      }
      out += ")";
    }
    return out;
  }

  std::string block(const Block& b) {
    std::string out = "{";
    for (const auto& s : b.stmts) out += stmt(*s);
    return out + "}";
  }

  std::string stmt(const Stmt& s) {
    return std::visit([&](const auto& node) { return stmt_node(node); }, s.node);
  }
  std::string stmt_node(const VarDeclStmt& s) {
    std::string out = "(var " + s.name + ":" + s.type.name;
    if (s.init) out += " = " + expr(*s.init);
    return out + ")";
  }
  std::string stmt_node(const ExprStmt& s) { return "(expr " + expr(*s.expr) + ")"; }
  std::string stmt_node(const ReturnStmt& s) {
    return s.value ? "(return " + expr(*s.value) + ")" : "(return)";
  }
  std::string stmt_node(const ThrowStmt& s) {
    return "(throw " + expr(*s.value) + ")";
  }
  std::string stmt_node(const TryCatchStmt& s) {
    std::string out = "(try " + block(s.body);
    for (const auto& c : s.catches) {
      out += " (catch " + c.type.name + ":" + c.var + " " + block(c.body) + ")";
    }
    return out + ")";
  }

  std::string expr(const Expr& e) {
    return std::visit([&](const auto& node) { return expr_node(node); }, e.node);
  }
  std::string expr_node(const NameExpr& e) { return e.id; }
  std::string expr_node(const FieldAccessExpr& e) {
    return "(get " + expr(*e.recv) + " " + e.field + ")";
  }
  std::string expr_node(const CallExpr& e) {
    std::string out = "(call " + expr(*e.recv) + " " + e.method;
    for (const auto& a : e.args) out += " " + expr(*a);
    return out + ")";
  }
  std::string expr_node(const NewExpr& e) {
    std::string out = "(new " + e.type.name;
    for (const auto& a : e.args) out += " " + expr(*a);
    return out + ")";
  }
  std::string expr_node(const CastExpr& e) {
    return "(cast " + e.type.name + " " + expr(*e.operand) + ")";
  }
  std::string expr_node(const AssignExpr& e) {
    return "(assign " + expr(*e.lhs) + " " + expr(*e.rhs) + ")";
  }
  std::string expr_node(const LiteralExpr& e) { return e.text; }
};

}  // namespace

const char* to_string(Visibility v) {
  return v == Visibility::Private ? "private" : "public";
}

const char* to_string(TypeDeclKind k) {
  return k == TypeDeclKind::Interface ? "interface" : "class";
}

std::string print(const CompilationUnit& unit) { return Printer().run(unit); }

std::string dump(const CompilationUnit& unit) { return Dumper().unit(unit); }
std::string dump(const Expr& expr) { return Dumper().expr(expr); }
std::string dump(const Stmt& stmt) { return Dumper().stmt(stmt); }

}  // namespace miniup
