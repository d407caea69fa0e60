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

#include "miniup/parser.hpp"

#include <array>
#include <cctype>
#include <set>
#include <unordered_set>
#include <utility>

namespace miniup {
namespace {

enum class TokKind { Ident, Int, Str, Punct, Keyword, Eof };

struct Token {
  TokKind kind = TokKind::Eof;
  std::string text;
  Span span;
  std::vector<Comment> leading_comments;
};

const std::unordered_set<std::string>& keywords() {
  static const std::unordered_set<std::string> kw = {
      "package", "import",  "class",  "interface", "extends", "implements",
      "public",  "private", "static", "abstract",  "void",    "bool",
      "int",     "string",  "new",    "return",    "throw",   "throws",
      "try",     "catch",   "true",   "false",     "null"};
  return kw;
}

class Lexer {
 public:
  Lexer(std::string_view text, std::string file)
      : text_(text), file_(std::move(file)) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    std::vector<Comment> pending;
    for (;;) {
      skip_whitespace();
      if (pos_ < text_.size() && text_[pos_] == '/' && pos_ + 1 < text_.size() &&
          text_[pos_ + 1] == '/') {
        pending.push_back(read_comment());
        continue;
      }
      Token tok = next_token();
      tok.leading_comments = std::move(pending);
      pending.clear();
      bool eof = tok.kind == TokKind::Eof;
      tokens.push_back(std::move(tok));
      if (eof) break;
    }
    return tokens;
  }

 private:
  void skip_whitespace() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++col_;
        ++pos_;
      } else {
        break;
      }
    }
  }

  Comment read_comment() {
    pos_ += 2;
    col_ += 2;
    std::string body;
    while (pos_ < text_.size() && text_[pos_] != '\n') {
      body.push_back(text_[pos_]);
      ++pos_;
      ++col_;
    }
    return Comment{body};
  }

  Span here(int len) const {
    Span s;
    s.file = file_;
    s.start_line = s.end_line = line_;
    s.start_col = col_;
    s.end_col = col_ + len;
    return s;
  }

  Token next_token() {
    if (pos_ >= text_.size()) {
      Token t;
      t.kind = TokKind::Eof;
      t.span = here(0);
      return t;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      int start_col = col_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        ++pos_;
        ++col_;
      }
      Token t;
      t.text = std::string(text_.substr(start, pos_ - start));
      t.kind = keywords().count(t.text) ? TokKind::Keyword : TokKind::Ident;
      t.span = here(0);
      t.span.start_col = start_col;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      int start_col = col_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++col_;
      }
      Token t;
      t.kind = TokKind::Int;
      t.text = std::string(text_.substr(start, pos_ - start));
      t.span = here(0);
      t.span.start_col = start_col;
      return t;
    }
    if (c == '"') {
      int start_line = line_;
      int start_col = col_;
      std::string raw;
      raw.push_back('"');
      ++pos_;
      ++col_;
      for (;;) {
        if (pos_ >= text_.size() || text_[pos_] == '\n') {
          throw SyntaxError(here(0), "closing '\"' before end of line");
        }
        char d = text_[pos_];
        raw.push_back(d);
        ++pos_;
        ++col_;
        if (d == '\\') {
          if (pos_ >= text_.size()) {
            throw SyntaxError(here(0), "escape character");
          }
          raw.push_back(text_[pos_]);
          ++pos_;
          ++col_;
          continue;
        }
        if (d == '"') break;
      }
      Token t;
      t.kind = TokKind::Str;
      t.text = std::move(raw);
      t.span = here(0);
      t.span.start_line = start_line;
      t.span.start_col = start_col;
      return t;
    }
    static const std::string punct = ".,;(){}=*";
    if (punct.find(c) != std::string::npos) {
      Token t;
      t.kind = TokKind::Punct;
      t.text = std::string(1, c);
      t.span = here(1);
      ++pos_;
      ++col_;
      return t;
    }
    throw SyntaxError(here(1), "a valid token (found '" + std::string(1, c) + "')");
  }

  std::string_view text_;
  std::string file_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string file)
      : tokens_(std::move(tokens)), file_(std::move(file)) {}

  CompilationUnit run() {
    CompilationUnit unit;
    unit.file = file_;
    unit.span.file = file_;
    if (!tokens_.empty()) {
      unit.span.start_line = 1;
      unit.span.start_col = 1;
      const Span& last = tokens_.back().span;
      unit.span.end_line = last.end_line;
      unit.span.end_col = last.end_col;
    }
    if (at_keyword("package")) {
      Span start = peek().span;
      take_comments_into(unit.trailing_comments); // package comments kept on unit
      expect_keyword("package");
      unit.package_name = parse_qualified_name();
      Span end = expect_punct(";");
      unit.package_span = join(start, end);
    }
    while (at_keyword("import")) {
      ImportDecl imp;
      imp.leading_comments = take_comments();
      Span start = peek().span;
      expect_keyword("import");
      imp.qualified = parse_qualified_name();
      if (at_punct(".")) {
        // only reachable for `a.b.*` since parse_qualified_name stops
        // before `.` followed by `*`
        advance();
        expect_punct("*");
        imp.wildcard = true;
      } else if (at_punct("*")) {
        throw SyntaxError(peek().span, "';'");
      }
      Span end = expect_punct(";");
      imp.span = join(start, end);
      unit.imports.push_back(std::move(imp));
    }
    std::set<std::string> names;
    while (!at_eof()) {
      TypeDecl decl = parse_type_decl();
      if (!names.insert(decl.name).second) {
        throw SyntaxError(decl.name_span,
                          "a unique type name ('" + decl.name + "' is already declared in this unit)");
      }
      unit.types.push_back(std::move(decl));
    }
    unit.trailing_comments = take_comments();
    return unit;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    if (i >= tokens_.size()) i = tokens_.size() - 1;
    return tokens_[i];
  }
  void advance() {
    if (pos_ + 1 < tokens_.size()) ++pos_;
  }
  bool at_eof() const { return peek().kind == TokKind::Eof; }
  bool at_keyword(const char* kw) const {
    return peek().kind == TokKind::Keyword && peek().text == kw;
  }
  bool at_punct(const char* p) const {
    return peek().kind == TokKind::Punct && peek().text == p;
  }
  bool at_ident() const { return peek().kind == TokKind::Ident; }

  Span expect_keyword(const char* kw) {
    if (!at_keyword(kw)) throw SyntaxError(peek().span, "'" + std::string(kw) + "'");
    Span s = peek().span;
    advance();
    return s;
  }
  Span expect_punct(const char* p) {
    if (!at_punct(p)) throw SyntaxError(peek().span, "'" + std::string(p) + "'");
    Span s = peek().span;
    advance();
    return s;
  }
  Token expect_ident(const char* what) {
    if (!at_ident()) throw SyntaxError(peek().span, what);
    Token t = peek();
    advance();
    return t;
  }

  std::vector<Comment> take_comments() {
    auto& tok = tokens_[pos_];
    std::vector<Comment> out = std::move(tok.leading_comments);
    tok.leading_comments.clear();
    return out;
  }
  void take_comments_into(std::vector<Comment>& sink) {
    for (auto& c : take_comments()) sink.push_back(std::move(c));
  }

  static Span join(const Span& a, const Span& b) {
    Span s = a;
    s.end_line = b.end_line;
    s.end_col = b.end_col;
    return s;
  }

  std::string parse_qualified_name() {
    std::string name = expect_ident("an identifier").text;
    while (at_punct(".") && peek(1).kind == TokKind::Ident) {
      advance();
      name += "." + expect_ident("an identifier").text;
    }
    return name;
  }

  bool at_primitive() const {
    return at_keyword("bool") || at_keyword("int") || at_keyword("string");
  }

  TypeName parse_type(bool allow_void) {
    if (at_primitive() || (allow_void && at_keyword("void"))) {
      TypeName t{peek().text, peek().span};
      advance();
      return t;
    }
    Span start = peek().span;
    std::string name = parse_qualified_name();
    Span end = tokens_[pos_ - 1].span;
    return TypeName{name, join(start, end)};
  }

  struct Modifiers {
    Visibility vis = Visibility::Public;
    bool is_static = false;
    bool is_abstract = false;
    std::optional<Span> start;
  };

  Modifiers parse_modifiers() {
    Modifiers m;
    for (;;) {
      if (at_keyword("public") || at_keyword("private")) {
        m.vis = at_keyword("private") ? Visibility::Private : Visibility::Public;
      } else if (at_keyword("static")) {
        m.is_static = true;
      } else if (at_keyword("abstract")) {
        m.is_abstract = true;
      } else {
        break;
      }
      if (!m.start) m.start = peek().span;
      advance();
    }
    return m;
  }

  TypeDecl parse_type_decl() {
    TypeDecl decl;
    decl.leading_comments = take_comments();
    Modifiers mods = parse_modifiers();
    decl.vis = mods.vis;
    decl.is_abstract = mods.is_abstract;
    Span start = mods.start.value_or(peek().span);
    if (at_keyword("interface")) {
      decl.kind = TypeDeclKind::Interface;
      advance();
    } else if (at_keyword("class")) {
      decl.kind = TypeDeclKind::Class;
      advance();
    } else {
      throw SyntaxError(peek().span, "'class' or 'interface'");
    }
    Token name = expect_ident("a type name");
    decl.name = name.text;
    decl.name_span = name.span;
    if (decl.kind == TypeDeclKind::Class) {
      if (at_keyword("extends")) {
        advance();
        decl.superclass = parse_type(false);
      }
      if (at_keyword("implements")) {
        advance();
        decl.interfaces.push_back(parse_type(false));
        while (at_punct(",")) {
          advance();
          decl.interfaces.push_back(parse_type(false));
        }
      }
    } else if (at_keyword("extends")) {
      advance();
      decl.interfaces.push_back(parse_type(false));
      while (at_punct(",")) {
        advance();
        decl.interfaces.push_back(parse_type(false));
      }
    }
    decl.body_lbrace = expect_punct("{");
    while (!at_punct("}")) {
      if (at_eof()) throw SyntaxError(peek().span, "'}' to close the type body");
      decl.members.push_back(parse_member(decl));
    }
    // comments just before the closing brace stay with the last member; a
    // type-level trailing slot is not tracked
    decl.body_rbrace = peek().span;
    Span end = expect_punct("}");
    decl.span = join(start, end);
    validate_type(decl);
    return decl;
  }

  void validate_type(const TypeDecl& decl) {
    std::set<std::string> field_names;
    for (const auto& member : decl.members) {
      if (const auto* f = std::get_if<FieldDecl>(&member)) {
        if (!field_names.insert(f->name).second) {
          throw SyntaxError(f->name_span, "a unique field name in " + decl.name);
        }
      }
      if (const auto* m = std::get_if<MethodDecl>(&member)) {
        if (decl.kind == TypeDeclKind::Class && m->is_abstract && !decl.is_abstract) {
          throw SyntaxError(m->name_span,
                            "a concrete method ('" + decl.name + "' is not abstract)");
        }
      }
    }
  }

  Member parse_member(const TypeDecl& owner) {
    std::vector<Comment> comments = take_comments();
    Modifiers mods = parse_modifiers();
    Span start = mods.start.value_or(peek().span);

    if (owner.kind == TypeDeclKind::Interface) {
      if (mods.vis == Visibility::Private || mods.is_static) {
        throw SyntaxError(peek().span, "a public abstract method (interface member)");
      }
      MethodDecl m = parse_method_rest(mods, start, /*force_abstract=*/true);
      m.leading_comments = std::move(comments);
      return m;
    }

    // constructor: the owner's name followed by `(`
    if (at_ident() && peek().text == owner.name && peek(1).kind == TokKind::Punct &&
        peek(1).text == "(") {
      ConstructorDecl c;
      Token name = expect_ident("a constructor name");
      c.vis = mods.vis;
      c.name = name.text;
      c.name_span = name.span;
      parse_params_and_throws(c.params, c.throws, c.sig_end);
      if (at_punct(";")) {
        Span end = peek().span;
        advance();
        c.span = join(start, end);
      } else {
        Block body = parse_block();
        Span end = body.rbrace;
        c.body = std::move(body);
        c.span = join(start, end);
      }
      c.leading_comments = std::move(comments);
      return c;
    }

    TypeName type = parse_type(true);
    Token name = expect_ident("a member name");
    if (at_punct("(")) {
      MethodDecl m;
      m.vis = mods.vis;
      m.is_static = mods.is_static;
      m.is_abstract = mods.is_abstract;
      m.return_type = std::move(type);
      m.name = name.text;
      m.name_span = name.span;
      parse_params_and_throws(m.params, m.throws, m.sig_end);
      if (m.is_abstract || at_punct(";")) {
        Span end = expect_punct(";");
        m.span = join(start, end);
      } else {
        Block body = parse_block();
        Span end = body.rbrace;
        m.body = std::move(body);
        m.span = join(start, end);
      }
      m.leading_comments = std::move(comments);
      return m;
    }
    if (type.name == "void") {
      throw SyntaxError(type.span, "a field type (void is not allowed)");
    }
    FieldDecl f;
    f.vis = mods.vis;
    f.is_static = mods.is_static;
    f.type = std::move(type);
    f.name = name.text;
    f.name_span = name.span;
    Span end = expect_punct(";");
    f.span = join(start, end);
    f.leading_comments = std::move(comments);
    return f;
  }

  MethodDecl parse_method_rest(const Modifiers& mods, Span start, bool force_abstract) {
    MethodDecl m;
    m.vis = mods.vis;
    m.is_static = mods.is_static;
    m.is_abstract = mods.is_abstract || force_abstract;
    m.return_type = parse_type(true);
    Token name = expect_ident("a method name");
    m.name = name.text;
    m.name_span = name.span;
    parse_params_and_throws(m.params, m.throws, m.sig_end);
    Span end = expect_punct(";");
    m.span = join(start, end);
    return m;
  }

  void parse_params_and_throws(std::vector<Param>& params,
                               std::vector<TypeName>& throws, Span& sig_end) {
    expect_punct("(");
    if (!at_punct(")")) {
      for (;;) {
        Param p;
        Span start = peek().span;
        p.type = parse_type(false);
        Token name = expect_ident("a parameter name");
        p.name = name.text;
        p.span = join(start, name.span);
        for (const auto& existing : params) {
          if (existing.name == p.name) {
            throw SyntaxError(name.span, "a unique parameter name");
          }
        }
        params.push_back(std::move(p));
        if (at_punct(",")) {
          advance();
          continue;
        }
        break;
      }
    }
    Span rparen = expect_punct(")");
    Span last = rparen;
    if (at_keyword("throws")) {
      advance();
      throws.push_back(parse_type(false));
      while (at_punct(",")) {
        advance();
        throws.push_back(parse_type(false));
      }
      last = throws.back().span;
    }
    sig_end = last;
    sig_end.start_line = sig_end.end_line;
    sig_end.start_col = sig_end.end_col;
  }

  Block parse_block() {
    Block block;
    block.lbrace = expect_punct("{");
    while (!at_punct("}")) {
      if (at_eof()) throw SyntaxError(peek().span, "'}' to close the block");
      block.stmts.push_back(std::make_unique<Stmt>(parse_stmt()));
    }
    block.trailing_comments = take_comments();
    block.rbrace = expect_punct("}");
    return block;
  }

  Stmt parse_stmt() {
    Stmt stmt;
    stmt.leading_comments = take_comments();
    Span start = peek().span;
    if (at_keyword("return")) {
      advance();
      ReturnStmt node;
      if (!at_punct(";")) node.value = std::make_unique<Expr>(parse_expr());
      Span end = expect_punct(";");
      stmt.span = join(start, end);
      stmt.node = std::move(node);
      return stmt;
    }
    if (at_keyword("throw")) {
      advance();
      ThrowStmt node;
      node.value = std::make_unique<Expr>(parse_expr());
      Span end = expect_punct(";");
      stmt.span = join(start, end);
      stmt.node = std::move(node);
      return stmt;
    }
    if (at_keyword("try")) {
      advance();
      TryCatchStmt node;
      node.body = parse_block();
      if (!at_keyword("catch")) throw SyntaxError(peek().span, "'catch'");
      while (at_keyword("catch")) {
        CatchClause clause;
        Span cstart = peek().span;
        advance();
        expect_punct("(");
        clause.type = parse_type(false);
        clause.var = expect_ident("an exception variable name").text;
        expect_punct(")");
        clause.body = parse_block();
        clause.span = join(cstart, clause.body.rbrace);
        node.catches.push_back(std::move(clause));
      }
      Span end = node.catches.back().body.rbrace;
      stmt.span = join(start, end);
      stmt.node = std::move(node);
      return stmt;
    }
    if (at_primitive() || looks_like_var_decl()) {
      VarDeclStmt node;
      node.type = parse_type(false);
      Token name = expect_ident("a variable name");
      node.name = name.text;
      node.name_span = name.span;
      if (at_punct("=")) {
        advance();
        node.init = std::make_unique<Expr>(parse_expr());
      }
      Span end = expect_punct(";");
      stmt.span = join(start, end);
      stmt.node = std::move(node);
      return stmt;
    }
    ExprStmt node;
    node.expr = std::make_unique<Expr>(parse_expr());
    Span end = expect_punct(";");
    stmt.span = join(start, end);
    stmt.node = std::move(node);
    return stmt;
  }

  /// Distinguishes `a.b.C x ...` (a declaration) from an expression
  /// statement by scanning the dotted-name prefix.
  bool looks_like_var_decl() const {
    if (!at_ident()) return false;
    std::size_t i = 0;
    while (peek(i + 1).kind == TokKind::Punct && peek(i + 1).text == "." &&
           peek(i + 2).kind == TokKind::Ident) {
      i += 2;
    }
    return peek(i + 1).kind == TokKind::Ident;
  }

  Expr parse_expr() { return parse_assign(); }

  Expr parse_assign() {
    Expr lhs = parse_unary();
    if (at_punct("=")) {
      if (!std::holds_alternative<NameExpr>(lhs.node) &&
          !std::holds_alternative<FieldAccessExpr>(lhs.node)) {
        throw SyntaxError(peek().span, "a name or field access on the left of '='");
      }
      advance();
      Expr rhs = parse_assign();
      AssignExpr node;
      Span span = join(lhs.span, rhs.span);
      node.lhs = std::make_unique<Expr>(std::move(lhs));
      node.rhs = std::make_unique<Expr>(std::move(rhs));
      Expr out;
      out.span = span;
      out.node = std::move(node);
      return out;
    }
    return lhs;
  }

  Expr parse_unary() {
    if (at_punct("(")) {
      Span start = peek().span;
      advance();
      TypeName type = parse_type(false);
      expect_punct(")");
      Expr operand = parse_unary();
      CastExpr node;
      node.type = std::move(type);
      Span span = join(start, operand.span);
      node.operand = std::make_unique<Expr>(std::move(operand));
      Expr out;
      out.span = span;
      out.node = std::move(node);
      return out;
    }
    return parse_postfix();
  }

  Expr parse_postfix() {
    Expr expr = parse_primary();
    while (at_punct(".")) {
      advance();
      Token name = expect_ident("a member name");
      if (at_punct("(")) {
        CallExpr node;
        node.method = name.text;
        node.method_span = name.span;
        advance();
        if (!at_punct(")")) {
          node.args.push_back(std::make_unique<Expr>(parse_expr()));
          while (at_punct(",")) {
            advance();
            node.args.push_back(std::make_unique<Expr>(parse_expr()));
          }
        }
        Span end = expect_punct(")");
        Span span = join(expr.span, end);
        node.recv = std::make_unique<Expr>(std::move(expr));
        Expr out;
        out.span = span;
        out.node = std::move(node);
        expr = std::move(out);
      } else {
        FieldAccessExpr node;
        node.field = name.text;
        node.field_span = name.span;
        Span span = join(expr.span, name.span);
        node.recv = std::make_unique<Expr>(std::move(expr));
        Expr out;
        out.span = span;
        out.node = std::move(node);
        expr = std::move(out);
      }
    }
    return expr;
  }

  Expr parse_primary() {
    const Token& tok = peek();
    if (tok.kind == TokKind::Ident) {
      Expr out;
      out.span = tok.span;
      out.node = NameExpr{tok.text};
      advance();
      return out;
    }
    if (tok.kind == TokKind::Int) {
      Expr out;
      out.span = tok.span;
      out.node = LiteralExpr{LiteralKind::Int, tok.text};
      advance();
      return out;
    }
    if (tok.kind == TokKind::Str) {
      Expr out;
      out.span = tok.span;
      out.node = LiteralExpr{LiteralKind::Str, tok.text};
      advance();
      return out;
    }
    if (at_keyword("true") || at_keyword("false")) {
      Expr out;
      out.span = tok.span;
      out.node = LiteralExpr{LiteralKind::Bool, tok.text};
      advance();
      return out;
    }
    if (at_keyword("null")) {
      Expr out;
      out.span = tok.span;
      out.node = LiteralExpr{LiteralKind::Null, tok.text};
      advance();
      return out;
    }
    if (at_keyword("new")) {
      Span start = tok.span;
      advance();
      NewExpr node;
      node.type = parse_type(false);
      expect_punct("(");
      if (!at_punct(")")) {
        node.args.push_back(std::make_unique<Expr>(parse_expr()));
        while (at_punct(",")) {
          advance();
          node.args.push_back(std::make_unique<Expr>(parse_expr()));
        }
      }
      Span end = expect_punct(")");
      Expr out;
      out.span = join(start, end);
      out.node = std::move(node);
      return out;
    }
    throw SyntaxError(tok.span, "an expression");
  }

  std::vector<Token> tokens_;
  std::string file_;
  std::size_t pos_ = 0;
};

}  // namespace

CompilationUnit parse(std::string_view text, const std::string& file) {
  Lexer lexer(text, file);
  Parser parser(lexer.run(), file);
  return parser.run();
}

}  // namespace miniup
