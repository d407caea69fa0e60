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

#include "miniup/symbols.hpp"
#include "test_util.hpp"

using namespace miniup;
using miniup::test::make_lib;

TEST_CASE("an empty unit list builds an empty table") {
  ApiSymbolTable table = build_symbol_table({}, "v0");
  CHECK(table.types().empty());
  CHECK(table.all_methods().empty());
}

TEST_CASE("declared elements are counted exactly") {
  ApiSymbolTable table = make_lib(
      {{"a.ml0", R"(package a;
public class B {
  public int size;
  public string name() { return null; }
  public static B of(int size);
})"}},
      "v1");
  CHECK(table.types().size() == 1);
  CHECK(table.all_methods().size() == 2);
  CHECK(table.all_fields().size() == 1);
  const TypeEntry* b = table.find("a.B");
  REQUIRE(b != nullptr);
  CHECK(b->fields[0].type == "int");
  CHECK(full_name(b->methods[0]) == "a.B.name()");
  CHECK(full_name(*table.all_methods()[1]) == "a.B.of(int)");
}

TEST_CASE("two units declaring the same qualified name collide") {
  std::vector<CompilationUnit> units;
  units.push_back(parse("package a; class B {}", "one.ml0"));
  units.push_back(parse("package a; class B {}", "two.ml0"));
  std::vector<const CompilationUnit*> ptrs{&units[0], &units[1]};
  CHECK_THROWS_AS(build_symbol_table(ptrs, "v1"), DuplicateTypeError);
}

TEST_CASE("subtyping is reflexive and transitive over both edge kinds") {
  ApiSymbolTable table = make_lib(
      {{"a.ml0", R"(package a;
public interface I {}
public class A implements I {}
public class B extends A {}
public class C extends B {}
public class D {}
)"}},
      "v1");
  CHECK(table.is_subtype("a.C", "a.C"));
  CHECK(table.is_subtype("a.C", "a.A"));
  CHECK(table.is_subtype("a.C", "a.I"));
  CHECK(table.is_subtype("a.B", "a.A"));
  CHECK_FALSE(table.is_subtype("a.D", "a.A"));
  CHECK_FALSE(table.is_subtype("a.A", "a.B"));
  CHECK_THROWS_AS(table.is_subtype("a.Missing", "a.A"), UnknownTypeError);
}

TEST_CASE("subtyping is antisymmetric on acyclic tables") {
  ApiSymbolTable table = make_lib(
      {{"a.ml0", R"(package a;
public class A {}
public class B extends A {}
public class C extends B {}
)"}},
      "v1");
  std::vector<std::string> names{"a.A", "a.B", "a.C"};
  for (const auto& x : names) {
    for (const auto& y : names) {
      if (x != y && table.is_subtype(x, y)) {
        CHECK_FALSE(table.is_subtype(y, x));
      }
    }
  }
}

TEST_CASE("inheritance cycles are rejected at build time") {
  std::vector<CompilationUnit> units;
  units.push_back(parse("package a; class X extends Y {} class Y extends X {}", "x.ml0"));
  std::vector<const CompilationUnit*> ptrs{&units[0]};
  CHECK_THROWS_AS(build_symbol_table(ptrs, "v1"), InheritanceCycleError);
}

TEST_CASE("cross-package references resolve through imports") {
  ApiSymbolTable table = make_lib(
      {{"a.ml0", "package a; public class Key {}"},
       {"b.ml0", R"(package b;
import a.Key;
public class Store {
  public void put(Key k);
})"}},
      "v1");
  const TypeEntry* store = table.find("b.Store");
  REQUIRE(store != nullptr);
  CHECK(store->methods[0].param_types[0] == "a.Key");
}

TEST_CASE("interface members are public and abstract") {
  ApiSymbolTable table =
      make_lib({{"i.ml0", "package a; public interface I { void m(); }"}}, "v1");
  const TypeEntry* i = table.find("a.I");
  REQUIRE(i != nullptr);
  CHECK(i->is_abstract);
  CHECK(i->methods[0].is_abstract);
  CHECK(i->methods[0].vis == Visibility::Public);
}

TEST_CASE("universe walks member lookups through supertypes") {
  ApiSymbolTable table = make_lib(
      {{"a.ml0", R"(package a;
public class Base {
  public int shared;
  public void ping();
}
public class Derived extends Base {
  public void pong();
})"}},
      "v1");
  TypeUniverse universe({&table});
  CHECK(universe.methods_named("a.Derived", "ping").size() == 1);
  CHECK(universe.field_named("a.Derived", "shared") != nullptr);
  CHECK(universe.field_named("a.Derived", "missing") == nullptr);
  CHECK(universe.is_subtype("a.Derived", "a.Base"));
  CHECK_FALSE(universe.is_subtype("a.Base", "a.Missing"));
}
