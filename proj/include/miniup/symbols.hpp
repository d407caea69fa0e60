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

#ifndef MINIUP_SYMBOLS_HPP
#define MINIUP_SYMBOLS_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "miniup/ast.hpp"

namespace miniup {

class BuildError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class DuplicateTypeError : public BuildError {
 public:
  explicit DuplicateTypeError(const std::string& qualified)
      : BuildError("duplicate type: " + qualified), qualified_(qualified) {}
  const std::string& qualified() const { return qualified_; }

 private:
  std::string qualified_;
};

class InheritanceCycleError : public BuildError {
 public:
  explicit InheritanceCycleError(const std::string& qualified)
      : BuildError("inheritance cycle through: " + qualified) {}
};

class UnknownTypeError : public std::runtime_error {
 public:
  explicit UnknownTypeError(const std::string& name)
      : std::runtime_error("unknown type: " + name) {}
};

struct MethodEntry {
  std::string owner;  // qualified owner name
  std::string name;
  std::vector<std::string> param_types;  // resolved qualified names or primitives
  std::vector<std::string> param_names;
  std::string return_type;
  std::vector<std::string> throws;
  bool is_static = false;
  bool is_abstract = false;
  Visibility vis = Visibility::Public;
};

struct FieldEntry {
  std::string owner;
  std::string name;
  std::string type;
  bool is_static = false;
  Visibility vis = Visibility::Public;
};

struct ConstructorEntry {
  std::string owner;
  std::vector<std::string> param_types;
  std::vector<std::string> param_names;
  std::vector<std::string> throws;
  Visibility vis = Visibility::Public;
};

struct TypeEntry {
  std::string qualified;
  std::string package;
  std::string simple;
  TypeDeclKind kind = TypeDeclKind::Class;
  Visibility vis = Visibility::Public;
  bool is_abstract = false;
  std::optional<std::string> superclass;
  std::vector<std::string> interfaces;
  std::vector<MethodEntry> methods;
  std::vector<FieldEntry> fields;
  std::vector<ConstructorEntry> constructors;
};

/// `pkg.Owner.name(t1,t2)` for methods, `pkg.Owner.name` for fields.
std::string full_name(const MethodEntry& m);
std::string full_name(const FieldEntry& f);
std::string render_param_types(const std::vector<std::string>& types);

/// All types, methods and fields of one library version. Immutable after
/// build; iteration order is lexicographic by qualified name.
class ApiSymbolTable {
 public:
  ApiSymbolTable() = default;
  ApiSymbolTable(std::map<std::string, TypeEntry> types, std::string version_label);

  const std::map<std::string, TypeEntry>& types() const { return types_; }
  const std::string& version_label() const { return version_label_; }

  const TypeEntry* find(const std::string& qualified) const;

  /// Reflexive transitive closure over superclass and interface edges.
  /// Throws UnknownTypeError when either name does not resolve.
  bool is_subtype(const std::string& sub, const std::string& sup) const;

  std::vector<const TypeEntry*> all_types() const;
  std::vector<const MethodEntry*> all_methods() const;
  std::vector<const FieldEntry*> all_fields() const;

 private:
  std::map<std::string, TypeEntry> types_;
  std::string version_label_;
};

/// Builds a table from declaration-only units (bodies are ignored).
/// Throws DuplicateTypeError and InheritanceCycleError.
ApiSymbolTable build_symbol_table(const std::vector<const CompilationUnit*>& units,
                                  const std::string& version_label);

/// Merged resolution scope over library and client declarations. Member
/// lookups walk the supertype closure nearest-first.
class TypeUniverse {
 public:
  TypeUniverse() = default;
  /// Later tables shadow earlier ones on qualified-name clashes.
  explicit TypeUniverse(std::vector<const ApiSymbolTable*> tables);

  const TypeEntry* find(std::string_view fqn) const;
  bool contains(std::string_view fqn) const { return find(fqn) != nullptr; }

  /// False (never throws) when either side is unknown; cycle-safe.
  bool is_subtype(std::string_view sub, std::string_view sup) const;

  /// Methods with the given name on `owner` and its supertypes.
  std::vector<const MethodEntry*> methods_named(std::string_view owner,
                                                std::string_view name) const;
  /// Nearest field of that name in the supertype closure.
  const FieldEntry* field_named(std::string_view owner, std::string_view name) const;
  std::vector<const ConstructorEntry*> constructors(std::string_view owner) const;

  /// All abstract methods a concrete subtype of `owner` must provide.
  std::vector<const MethodEntry*> abstract_methods(std::string_view owner) const;
  /// All concrete methods available on `owner` (own and inherited).
  std::vector<const MethodEntry*> concrete_methods(std::string_view owner) const;

  /// Supertype closure including `owner` itself, nearest first.
  std::vector<const TypeEntry*> supertype_closure(std::string_view owner) const;

 private:
  std::map<std::string, const TypeEntry*, std::less<>> types_;
};

}  // namespace miniup

#endif  // MINIUP_SYMBOLS_HPP
