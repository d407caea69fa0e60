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

#include "miniup/symbols.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace miniup {
namespace {

bool is_primitive(const std::string& name) {
  return name == "bool" || name == "int" || name == "string" || name == "void";
}

/// Resolves a type reference written in `unit` against the table being
/// built. Dotted names are taken as absolute; unresolvable simple names
/// are kept as written (they may refer to client declarations checked
/// against the same universe later).
std::string resolve_written_type(const std::string& written,
                                 const CompilationUnit& unit,
                                 const std::map<std::string, TypeEntry>& types) {
  if (is_primitive(written) || written.find('.') != std::string::npos) {
    return written;
  }
  for (const auto& imp : unit.imports) {
    if (imp.wildcard) continue;
    auto dot = imp.qualified.rfind('.');
    std::string simple = dot == std::string::npos ? imp.qualified
                                                  : imp.qualified.substr(dot + 1);
    if (simple == written) return imp.qualified;
  }
  std::vector<std::string> wildcard_hits;
  for (const auto& imp : unit.imports) {
    if (!imp.wildcard) continue;
    std::string candidate = imp.qualified + "." + written;
    if (types.count(candidate)) wildcard_hits.push_back(candidate);
  }
  if (wildcard_hits.size() == 1) return wildcard_hits.front();
  std::string same_pkg =
      unit.package_name.empty() ? written : unit.package_name + "." + written;
  if (types.count(same_pkg)) return same_pkg;
  return written;
}

}  // namespace

std::string render_param_types(const std::vector<std::string>& types) {
  std::string out = "(";
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (i > 0) out += ",";
    out += types[i];
  }
  return out + ")";
}

std::string full_name(const MethodEntry& m) {
  return m.owner + "." + m.name + render_param_types(m.param_types);
}

std::string full_name(const FieldEntry& f) { return f.owner + "." + f.name; }

ApiSymbolTable::ApiSymbolTable(std::map<std::string, TypeEntry> types,
                               std::string version_label)
    : types_(std::move(types)), version_label_(std::move(version_label)) {}

const TypeEntry* ApiSymbolTable::find(const std::string& qualified) const {
  auto it = types_.find(qualified);
  return it == types_.end() ? nullptr : &it->second;
}

bool ApiSymbolTable::is_subtype(const std::string& sub, const std::string& sup) const {
  if (!find(sub)) throw UnknownTypeError(sub);
  if (!find(sup)) throw UnknownTypeError(sup);
  TypeUniverse universe({this});
  return universe.is_subtype(sub, sup);
}

std::vector<const TypeEntry*> ApiSymbolTable::all_types() const {
  std::vector<const TypeEntry*> out;
  for (const auto& [_, entry] : types_) out.push_back(&entry);
  return out;
}

std::vector<const MethodEntry*> ApiSymbolTable::all_methods() const {
  std::vector<const MethodEntry*> out;
  for (const auto& [_, entry] : types_) {
    for (const auto& m : entry.methods) out.push_back(&m);
  }
  std::sort(out.begin(), out.end(), [](const MethodEntry* a, const MethodEntry* b) {
    return full_name(*a) < full_name(*b);
  });
  return out;
}

std::vector<const FieldEntry*> ApiSymbolTable::all_fields() const {
  std::vector<const FieldEntry*> out;
  for (const auto& [_, entry] : types_) {
    for (const auto& f : entry.fields) out.push_back(&f);
  }
  std::sort(out.begin(), out.end(), [](const FieldEntry* a, const FieldEntry* b) {
    return full_name(*a) < full_name(*b);
  });
  return out;
}

ApiSymbolTable build_symbol_table(const std::vector<const CompilationUnit*>& units,
                                  const std::string& version_label) {
  std::map<std::string, TypeEntry> types;
  // First pass: register all declared type names.
  for (const auto* unit : units) {
    for (const auto& decl : unit->types) {
      std::string qualified = unit->package_name.empty()
                                  ? decl.name
                                  : unit->package_name + "." + decl.name;
      if (types.count(qualified)) throw DuplicateTypeError(qualified);
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
  // Second pass: resolve signatures now that every type name is known.
  for (const auto* unit : units) {
    auto resolve = [&](const std::string& written) {
      return resolve_written_type(written, *unit, types);
    };
    for (const auto& decl : unit->types) {
      std::string qualified = unit->package_name.empty()
                                  ? decl.name
                                  : unit->package_name + "." + decl.name;
      TypeEntry& entry = types.at(qualified);
      if (decl.superclass) entry.superclass = resolve(decl.superclass->name);
      for (const auto& iface : decl.interfaces) {
        entry.interfaces.push_back(resolve(iface.name));
      }
      for (const auto& member : decl.members) {
        if (const auto* f = std::get_if<FieldDecl>(&member)) {
          FieldEntry fe;
          fe.owner = qualified;
          fe.name = f->name;
          fe.type = resolve(f->type.name);
          fe.is_static = f->is_static;
          fe.vis = f->vis;
          entry.fields.push_back(std::move(fe));
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
  // Reject inheritance cycles: depth-first walk with colors.
  std::map<std::string, int> color;  // 0 unseen, 1 on stack, 2 done
  std::function<void(const std::string&)> visit = [&](const std::string& name) {
    auto it = types.find(name);
    if (it == types.end()) return;
    int& c = color[name];
    if (c == 1) throw InheritanceCycleError(name);
    if (c == 2) return;
    c = 1;
    if (it->second.superclass) visit(*it->second.superclass);
    for (const auto& iface : it->second.interfaces) visit(iface);
    c = 2;
  };
  for (const auto& [name, _] : types) visit(name);
  return ApiSymbolTable(std::move(types), version_label);
}

TypeUniverse::TypeUniverse(std::vector<const ApiSymbolTable*> tables) {
  for (const auto* table : tables) {
    if (!table) continue;
    for (const auto& [name, entry] : table->types()) {
      types_[name] = &entry;  // later tables shadow earlier ones
    }
  }
}

const TypeEntry* TypeUniverse::find(std::string_view fqn) const {
  auto it = types_.find(fqn);
  return it == types_.end() ? nullptr : it->second;
}

std::vector<const TypeEntry*> TypeUniverse::supertype_closure(
    std::string_view owner) const {
  std::vector<const TypeEntry*> out;
  std::set<std::string> seen;
  std::vector<std::string> work{std::string(owner)};
  while (!work.empty()) {
    std::string name = work.front();
    work.erase(work.begin());
    if (!seen.insert(name).second) continue;
    const TypeEntry* entry = find(name);
    if (!entry) continue;
    out.push_back(entry);
    if (entry->superclass) work.push_back(*entry->superclass);
    for (const auto& iface : entry->interfaces) work.push_back(iface);
  }
  return out;
}

bool TypeUniverse::is_subtype(std::string_view sub, std::string_view sup) const {
  if (sub == sup) return contains(sub);
  for (const auto* entry : supertype_closure(sub)) {
    if (entry->qualified == sup) return true;
  }
  return false;
}

std::vector<const MethodEntry*> TypeUniverse::methods_named(
    std::string_view owner, std::string_view name) const {
  std::vector<const MethodEntry*> out;
  for (const auto* entry : supertype_closure(owner)) {
    for (const auto& m : entry->methods) {
      if (m.name == name) out.push_back(&m);
    }
  }
  return out;
}

const FieldEntry* TypeUniverse::field_named(std::string_view owner,
                                            std::string_view name) const {
  for (const auto* entry : supertype_closure(owner)) {
    for (const auto& f : entry->fields) {
      if (f.name == name) return &f;
    }
  }
  return nullptr;
}

std::vector<const ConstructorEntry*> TypeUniverse::constructors(
    std::string_view owner) const {
  std::vector<const ConstructorEntry*> out;
  const TypeEntry* entry = find(owner);
  if (!entry) return out;
  for (const auto& c : entry->constructors) out.push_back(&c);
  return out;
}

std::vector<const MethodEntry*> TypeUniverse::abstract_methods(
    std::string_view owner) const {
  std::vector<const MethodEntry*> out;
  for (const auto* entry : supertype_closure(owner)) {
    for (const auto& m : entry->methods) {
      if (m.is_abstract) out.push_back(&m);
    }
  }
  return out;
}

std::vector<const MethodEntry*> TypeUniverse::concrete_methods(
    std::string_view owner) const {
  std::vector<const MethodEntry*> out;
  for (const auto* entry : supertype_closure(owner)) {
    for (const auto& m : entry->methods) {
      if (!m.is_abstract) out.push_back(&m);
    }
  }
  return out;
}

}  // namespace miniup
