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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "miniup/ast_query.hpp"
#include "miniup/parser.hpp"

using namespace miniup;

namespace {

const char* kSample = R"(package app;

import auth.IAuthority;
import util.*;

public class Gate implements IAuthority {
  private string owner;

  public Gate(string owner) {
    this_owner.store(owner);
  }

  public PermissionSet authorize(string user) {
    AuthenticatedUser u = new AuthenticatedUser(user);
    string name = u.getName();
    //checked by the gate keeper
    try {
      registry.grant(name);
    } catch (AccessError e) {
      log.warn(name);
    }
    return Permission.defaults();
  }
}
)";

void expect_contains(const Span& outer, const Span& inner) {
  CAPTURE(outer.to_string());
  CAPTURE(inner.to_string());
  CHECK(outer.contains(inner));
}

void walk_spans(const Expr& e) {
  if (const auto* fa = std::get_if<FieldAccessExpr>(&e.node)) {
    expect_contains(e.span, fa->recv->span);
    walk_spans(*fa->recv);
  } else if (const auto* call = std::get_if<CallExpr>(&e.node)) {
    expect_contains(e.span, call->recv->span);
    walk_spans(*call->recv);
    for (const auto& a : call->args) {
      expect_contains(e.span, a->span);
      walk_spans(*a);
    }
  } else if (const auto* n = std::get_if<NewExpr>(&e.node)) {
    for (const auto& a : n->args) {
      expect_contains(e.span, a->span);
      walk_spans(*a);
    }
  } else if (const auto* c = std::get_if<CastExpr>(&e.node)) {
    expect_contains(e.span, c->operand->span);
    walk_spans(*c->operand);
  } else if (const auto* a = std::get_if<AssignExpr>(&e.node)) {
    expect_contains(e.span, a->lhs->span);
    expect_contains(e.span, a->rhs->span);
    walk_spans(*a->lhs);
    walk_spans(*a->rhs);
  }
}

}  // namespace

TEST_CASE("empty input parses to an empty unit") {
  CompilationUnit unit = parse("", "empty.ml0");
  CHECK(unit.package_name.empty());
  CHECK(unit.imports.empty());
  CHECK(unit.types.empty());
}

TEST_CASE("one class with one method matches the hand-built tree") {
  CompilationUnit unit = parse("class A { void m() {} }", "a.ml0");

  // expected tree assembled by hand
  CompilationUnit expected;
  expected.file = "a.ml0";
  TypeDecl decl;
  decl.kind = TypeDeclKind::Class;
  decl.vis = Visibility::Public;
  decl.name = "A";
  MethodDecl m;
  m.vis = Visibility::Public;
  m.return_type.name = "void";
  m.name = "m";
  m.body = Block{};
  decl.members.push_back(std::move(m));
  expected.types.push_back(std::move(decl));

  CHECK(dump(unit) == dump(expected));
  CHECK(dump(unit) == "(unit (class A public (method m () -> void public {})))");
}

TEST_CASE("unbalanced brace is a syntax error at end of input") {
  CHECK_THROWS_AS(parse("class A {", "a.ml0"), SyntaxError);
  try {
    parse("class A {", "a.ml0");
  } catch (const SyntaxError& e) {
    CHECK(e.span().start_line == 1);
    CHECK(e.expected().find("}") != std::string::npos);
  }
}

TEST_CASE("duplicate type names in one unit are rejected") {
  CHECK_THROWS_AS(parse("class A {} interface A {}", "a.ml0"), SyntaxError);
}

TEST_CASE("abstract methods in a concrete class are rejected") {
  CHECK_THROWS_AS(parse("class A { abstract void m(); }", "a.ml0"), SyntaxError);
  CHECK_NOTHROW(parse("abstract class A { abstract void m(); }", "a.ml0"));
}

TEST_CASE("duplicate parameter names are rejected") {
  CHECK_THROWS_AS(parse("class A { void m(int x, string x) {} }", "a.ml0"),
                  SyntaxError);
}

TEST_CASE("statement lookahead separates declarations from expressions") {
  CompilationUnit unit = parse(R"(package p;
class A {
  void m(Box b) {
    util.Box c = b;
    c.store(b);
    c = b;
  }
}
)",
                               "a.ml0");
  const auto& method = std::get<MethodDecl>(unit.types[0].members[0]);
  REQUIRE(method.body->stmts.size() == 3);
  CHECK(std::holds_alternative<VarDeclStmt>(method.body->stmts[0]->node));
  CHECK(std::get<VarDeclStmt>(method.body->stmts[0]->node).type.name == "util.Box");
  CHECK(std::holds_alternative<ExprStmt>(method.body->stmts[1]->node));
  CHECK(std::holds_alternative<ExprStmt>(method.body->stmts[2]->node));
}

TEST_CASE("round trip: print(parse(s)) reparses to the same structure") {
  std::vector<std::string> samples = {
      kSample,
      "package p;\nclass A { int f; A(int f) { this_f = f; } }\n",
      "package q;\nimport a.b.*;\npublic interface I extends J { void m() throws E; }\n",
      "package r;\nabstract class B extends A implements I, J {\n"
      "  private static string cache;\n"
      "  abstract int size();\n"
      "  bool has(string k) { return lookup.test(k); }\n"
      "}\n",
      "package s;\nclass C { void m() { x = (perm.PermissionSet) Permission.ALL; "
      "throw new Error(\"bad \\\"quote\\\"\"); } }\n",
  };
  for (const auto& s : samples) {
    CAPTURE(s);
    CompilationUnit first = parse(s, "t.ml0");
    std::string printed = print(first);
    CompilationUnit second = parse(printed, "t.ml0");
    CHECK(dump(first) == dump(second));
  }
}

TEST_CASE("printing keeps an empty class on a single declaration") {
  CompilationUnit unit = parse("package p; public class Only {}", "t.ml0");
  std::string printed = print(unit);
  CHECK(printed.find("public class Only {") != std::string::npos);
  CHECK(printed.find("interface") == std::string::npos);
}

TEST_CASE("comments survive printing as trivia") {
  CompilationUnit unit = parse(R"(package p;
class A {
  bool m() {
    //todo: Please implement the method.
    return false;
  }
  void n() {
    //nothing yet
  }
}
)",
                               "t.ml0");
  std::string printed = print(unit);
  CHECK(printed.find("//todo: Please implement the method.") != std::string::npos);
  CHECK(printed.find("//nothing yet") != std::string::npos);
}

TEST_CASE("child spans nest inside parent spans") {
  CompilationUnit unit = parse(kSample, "sample.ml0");
  for (const auto& decl : unit.types) {
    expect_contains(unit.span, decl.span);
    for (const auto& member : decl.members) {
      std::visit([&](const auto& m) { expect_contains(decl.span, m.span); }, member);
    }
  }
  for_each_expr(unit, [&](const Expr& e) { walk_spans(e); });
  auto enclosing = find_enclosing(unit, unit.types[0].span);
  (void)enclosing;
}

TEST_CASE("parser is total over noisy inputs") {
  std::mt19937_64 rng(20260811);
  std::string base = kSample;
  for (int trial = 0; trial < 300; ++trial) {
    std::string input;
    if (trial % 3 == 0) {
      // random bytes
      std::size_t len = rng() % 120;
      for (std::size_t i = 0; i < len; ++i) {
        input.push_back(static_cast<char>(rng() % 256));
      }
    } else {
      // mutated sample: drop, duplicate, or scramble a slice
      input = base;
      std::size_t at = rng() % input.size();
      std::size_t len = rng() % 20;
      switch (rng() % 3) {
        case 0: input.erase(at, len); break;
        case 1: input.insert(at, input.substr(0, len)); break;
        default:
          for (std::size_t i = at; i < std::min(input.size(), at + len); ++i) {
            input[i] = static_cast<char>(rng() % 127 + 1);
          }
      }
    }
    try {
      CompilationUnit unit = parse(input, "fuzz.ml0");
      // valid parses must round-trip
      CompilationUnit again = parse(print(unit), "fuzz.ml0");
      CHECK(dump(unit) == dump(again));
    } catch (const SyntaxError&) {
      // fine: totality means AST or SyntaxError, never a crash
    }
  }
}

TEST_CASE("source text slicing and splicing") {
  SourceText text("t.ml0", "alpha\nbeta\ngamma\n");
  Span span{"t.ml0", 2, 1, 2, 5};
  CHECK(text.slice(span) == "beta");
  CHECK(text.splice(span, "delta") == "alpha\ndelta\ngamma\n");
  auto [line, col] = text.position_of(text.offset_of(3, 2));
  CHECK(line == 3);
  CHECK(col == 2);
}

TEST_CASE("every corpus file round-trips through the printer") {
  std::size_t seen = 0;
  for (const auto& entry :
       std::filesystem::recursive_directory_iterator(MINIUP_CORPUS_DIR)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".ml0") continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    CAPTURE(entry.path().string());
    CompilationUnit first = parse(text, entry.path().filename().string());
    CompilationUnit second = parse(print(first), entry.path().filename().string());
    CHECK(dump(first) == dump(second));
    ++seen;
  }
  CHECK(seen > 40);
}
