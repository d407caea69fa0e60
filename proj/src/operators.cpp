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

#include "miniup/operators.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

#include "miniup/ast_query.hpp"
#include "miniup/distance.hpp"
#include "miniup/parser.hpp"

namespace miniup {

const char* to_string(OperatorId id) {
  static const char* names[] = {"MA1", "MA2",  "MA3",  "MA4",  "MA5",  "MA6", "MA7",
                                "MA8", "MA9",  "MA10", "MA11", "MA12", "MA13"};
  return names[static_cast<int>(id)];
}

OperatorId operator_id_from_string(const std::string& name) {
  for (int i = 0; i <= static_cast<int>(OperatorId::MA13); ++i) {
    if (name == to_string(static_cast<OperatorId>(i))) {
      return static_cast<OperatorId>(i);
    }
  }
  throw std::invalid_argument("unknown operator id: " + name);
}

ParentScope::ParentScope(const Candidate& parent, const ApiSymbolTable& new_lib,
                         const MappingTable& mappings)
    : client_table_(build_client_table(parent.program.units(), &new_lib)),
      universe_({&new_lib, &client_table_}) {
  context_.new_lib = &new_lib;
  context_.mappings = &mappings;
  context_.universe = &universe_;
  context_.analysis = parent.analysis.get();
  const ApiSymbolTable* lib = &new_lib;
  context_.check = [lib](const Program& program) {
    return check_program(program.units(), *lib);
  };
}

std::vector<OperatorId> route(ErrorKind kind) {
  using Id = OperatorId;
  switch (kind) {
    case ErrorKind::UndefinedType: return {Id::MA1};
    case ErrorKind::UndefinedMethod: return {Id::MA1, Id::MA2, Id::MA7, Id::MA11};
    case ErrorKind::UndefinedVariable: return {Id::MA1, Id::MA2, Id::MA11};
    case ErrorKind::UndefinedField: return {Id::MA1, Id::MA3};
    case ErrorKind::UndefinedConstructor: return {Id::MA4};
    case ErrorKind::IncompatibleType: return {Id::MA5};
    case ErrorKind::IncompatibleMethodArgs: return {Id::MA6, Id::MA7, Id::MA8};
    case ErrorKind::UnimplementedAbstractMethod: return {Id::MA9};
    case ErrorKind::UnhandledException: return {Id::MA10};
    case ErrorKind::AmbiguousType: return {Id::MA12};
    case ErrorKind::InvisibleField: return {Id::MA13};
  }
  return {};
}

std::vector<OperatorId> route(const CompileError& error) { return route(error.kind); }

namespace {

bool is_primitive_name(const std::string& name) {
  return name == "bool" || name == "int" || name == "string" || name == "void";
}

std::string simple_of(const std::string& qualified) {
  auto dot = qualified.rfind('.');
  return dot == std::string::npos ? qualified : qualified.substr(dot + 1);
}

std::string package_of(const std::string& qualified) {
  auto dot = qualified.rfind('.');
  return dot == std::string::npos ? "" : qualified.substr(0, dot);
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

bool compat(const TypeUniverse& universe, const std::string& actual,
            const std::string& expected) {
  if (actual.empty() || expected.empty()) return true;
  if (actual == "null") {
    return expected != "int" && expected != "bool" && expected != "void";
  }
  if (actual == expected) return true;
  if (is_primitive_name(actual) || is_primitive_name(expected)) return false;
  return universe.is_subtype(actual, expected);
}

/// Checker resolution order (explicit, wildcard, same package), public or
/// same-package types only. Returns nullopt when unresolved or ambiguous.
std::optional<std::string> resolve_simple(const CompilationUnit& unit,
                                          const TypeUniverse& universe,
                                          const std::string& simple) {
  for (const auto& imp : unit.imports) {
    if (!imp.wildcard && simple_of(imp.qualified) == simple) {
      const TypeEntry* e = universe.find(imp.qualified);
      if (e && (e->vis == Visibility::Public || e->package == unit.package_name)) {
        return imp.qualified;
      }
      return std::nullopt;  // dangling or hidden explicit import wins anyway
    }
  }
  std::vector<std::string> hits;
  for (const auto& imp : unit.imports) {
    if (!imp.wildcard) continue;
    std::string candidate = imp.qualified + "." + simple;
    const TypeEntry* e = universe.find(candidate);
    if (e && (e->vis == Visibility::Public || e->package == unit.package_name)) {
      hits.push_back(candidate);
    }
  }
  std::sort(hits.begin(), hits.end());
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
  if (hits.size() > 1) return std::nullopt;
  if (hits.size() == 1) return hits.front();
  std::string same_pkg =
      unit.package_name.empty() ? simple : unit.package_name + "." + simple;
  if (universe.find(same_pkg)) return same_pkg;
  return std::nullopt;
}

enum class ImportNeed { None, Add, Conflict };

ImportNeed import_need(const CompilationUnit& unit, const TypeUniverse& universe,
                       const std::string& fqn) {
  std::string simple = simple_of(fqn);
  auto resolved = resolve_simple(unit, universe, simple);
  if (resolved && *resolved == fqn) return ImportNeed::None;
  for (const auto& imp : unit.imports) {
    if (!imp.wildcard && simple_of(imp.qualified) == simple && imp.qualified != fqn) {
      return ImportNeed::Conflict;
    }
  }
  for (const auto& decl : unit.types) {
    if (decl.name == simple) return ImportNeed::Conflict;
  }
  return ImportNeed::Add;
}

/// Insertion edit for `import fqn;` after the last import (or the package
/// declaration, or at the top of the file).
TextEdit import_insertion(const CompilationUnit& unit, const std::string& fqn) {
  Span at;
  at.file = unit.file;
  if (!unit.imports.empty()) {
    const Span& last = unit.imports.back().span;
    at.start_line = at.end_line = last.end_line;
    at.start_col = at.end_col = last.end_col;
  } else if (!unit.package_name.empty()) {
    at.start_line = at.end_line = unit.package_span.end_line;
    at.start_col = at.end_col = unit.package_span.end_col;
  } else {
    at.start_line = at.end_line = 1;
    at.start_col = at.end_col = 1;
    TextEdit edit;
    edit.span = at;
    edit.replacement = "import " + fqn + ";\n";
    return edit;
  }
  TextEdit edit;
  edit.span = at;
  edit.replacement = "\nimport " + fqn + ";";
  return edit;
}

/// The simple name when it resolves to `fqn` in this unit, otherwise the
/// qualified name (valid in type positions).
std::string render_type(const CompilationUnit& unit, const TypeUniverse& universe,
                        const std::string& fqn) {
  if (is_primitive_name(fqn) || fqn.find('.') == std::string::npos) return fqn;
  auto resolved = resolve_simple(unit, universe, simple_of(fqn));
  if (resolved && *resolved == fqn) return simple_of(fqn);
  return fqn;
}

Span whole_file_span(const ProgramFile& file) {
  Span span;
  span.file = file.path;
  span.start_line = 1;
  span.start_col = 1;
  auto [line, col] = file.source.position_of(file.source.text().size());
  span.end_line = line;
  span.end_col = col;
  return span;
}

/// Extends a statement span to cover its whole line(s), including the
/// trailing newline, so a deletion leaves no blank line behind.
Span line_span(const ProgramFile& file, const Span& span) {
  Span out = span;
  out.start_col = 1;
  const std::string& text = file.source.text();
  std::size_t end = file.source.offset_of(span.end_line, span.end_col);
  while (end < text.size() && text[end] != '\n') ++end;
  if (end < text.size()) ++end;  // include the newline
  auto [line, col] = file.source.position_of(end);
  out.end_line = line;
  out.end_col = col;
  return out;
}

struct CandidateBuilder {
  const Candidate* parent;
  const OperatorContext* ctx;
  std::vector<Candidate> out;

  /// Applies `edits` to one file, reparses, checks, and appends the
  /// resulting candidate. Multi-site edits log a whole-file action so the
  /// edit list replays exactly.
  bool add(const std::string& path, std::vector<TextEdit> edits, OperatorId op,
           std::string description) {
    if (edits.empty()) return false;
    const ProgramFile* file = parent->program.find(path);
    if (!file) return false;
    std::sort(edits.begin(), edits.end(), [](const TextEdit& a, const TextEdit& b) {
      return a.span < b.span;
    });
    edits.erase(std::unique(edits.begin(), edits.end(),
                            [](const TextEdit& a, const TextEdit& b) {
                              return a.span == b.span;
                            }),
                edits.end());
    std::string new_text = apply_edits(file->source, edits);
    if (new_text == file->source.text()) return false;
    CompilationUnit new_unit;
    try {
      new_unit = parse(new_text, path);
    } catch (const SyntaxError&) {
      return false;  // operators must not introduce syntax errors
    }
    Candidate candidate;
    candidate.program = parent->program;
    for (auto& f : candidate.program.files) {
      if (f.path == path) {
        f.source = SourceText(path, new_text);
        f.unit = std::make_shared<const CompilationUnit>(std::move(new_unit));
      }
    }
    EditAction action;
    action.op = op;
    action.description = std::move(description);
    if (edits.size() == 1) {
      action.target = edits[0].span;
      action.before = file->source.slice(edits[0].span);
      action.after = edits[0].replacement;
    } else {
      action.target = whole_file_span(*file);
      action.before = file->source.text();
      action.after = new_text;
    }
    candidate.edits = parent->edits;
    candidate.edits.push_back(std::move(action));
    candidate.analysis =
        std::make_shared<const CheckResult>(ctx->check(candidate.program));
    candidate.edits.back().fitness_after = candidate.fitness();
    // identical rewrites reached through different elements collapse
    for (const Candidate& existing : out) {
      if (existing.program.find(path) &&
          existing.program.find(path)->source.text() == new_text) {
        return false;
      }
    }
    out.push_back(std::move(candidate));
    return true;
  }
};

std::string arg_type_of(const OperatorContext& ctx, const Expr& arg) {
  auto it = ctx.analysis->expr_types.find(arg.span);
  return it == ctx.analysis->expr_types.end() ? "" : it->second;
}

const AccessInfo* access_info_of(const OperatorContext& ctx, const Span& span) {
  auto it = ctx.analysis->access_info.find(span);
  return it == ctx.analysis->access_info.end() ? nullptr : &it->second;
}

std::string slice_of(const ProgramFile& file, const Span& span) {
  return file.source.slice(span);
}

std::string rebuild_call(const ProgramFile& file, const std::string& receiver,
                         const std::string& method,
                         const std::vector<const Expr*>& args) {
  std::string out = receiver + "." + method + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) out += ", ";
    out += slice_of(file, args[i]->span);
  }
  return out + ")";
}

// ---------------------------------------------------------------- MA1

std::vector<Candidate> ma1_type(const Candidate& parent, const CompileError& error,
                                const OperatorContext& ctx) {
  const Mapping* mapping = ctx.mappings->find(ElementKind::Type, error.subject);
  if (!mapping) return {};
  const ProgramFile* file = parent.program.find(error.span.file);
  if (!file) return {};
  const CompilationUnit& unit = *file->unit;
  const std::string& old_fqn = mapping->old_element;
  const std::string& new_fqn = mapping->new_element;
  std::string old_simple = simple_of(old_fqn);
  std::string new_simple = simple_of(new_fqn);

  std::vector<TextEdit> edits;
  bool import_rewritten = false;
  for (const auto& imp : unit.imports) {
    if (!imp.wildcard && imp.qualified == old_fqn) {
      edits.push_back({imp.span, "import " + new_fqn + ";"});
      import_rewritten = true;
    }
  }
  for_each_type_ref(unit, [&](const TypeName& ref) {
    if (ref.name == old_simple) {
      edits.push_back({ref.span, new_simple});
    } else if (ref.name == old_fqn) {
      edits.push_back({ref.span, new_fqn});
    }
  });
  // static receivers written with the old simple name
  for_each_expr(unit, [&](const Expr& e) {
    const Expr* recv = nullptr;
    if (const auto* call = std::get_if<CallExpr>(&e.node)) recv = call->recv.get();
    if (const auto* fa = std::get_if<FieldAccessExpr>(&e.node)) recv = fa->recv.get();
    if (!recv) return;
    const auto* name = std::get_if<NameExpr>(&recv->node);
    if (!name || name->id != old_simple) return;
    const AccessInfo* info = access_info_of(ctx, e.span);
    if (!info || info->receiver_type.empty() || info->static_receiver) {
      edits.push_back({recv->span, new_simple});
    }
  });
  if (edits.empty()) return {};
  if (!import_rewritten) {
    ImportNeed need = import_need(unit, *ctx.universe, new_fqn);
    if (need == ImportNeed::Conflict) return {};
    if (need == ImportNeed::Add) edits.push_back(import_insertion(unit, new_fqn));
  }
  CandidateBuilder builder{&parent, &ctx, {}};
  builder.add(error.span.file, std::move(edits), OperatorId::MA1,
              "replace type " + old_fqn + " with " + new_fqn);
  return std::move(builder.out);
}

std::vector<Candidate> ma1_method(const Candidate& parent, const CompileError& error,
                                  const OperatorContext& ctx) {
  const Mapping* mapping = ctx.mappings->find(ElementKind::Method, error.subject);
  if (!mapping) return {};
  const MethodEntry* target = find_method_by_full_name(*ctx.new_lib, mapping->new_element);
  if (!target) return {};
  const ProgramFile* file = parent.program.find(error.span.file);
  if (!file) return {};
  const Expr* expr = find_expr_at(*file->unit, error.span);
  if (!expr) return {};
  const auto* call = std::get_if<CallExpr>(&expr->node);
  if (!call) return {};
  const AccessInfo* info = access_info_of(ctx, error.span);
  if (!info) return {};

  std::vector<TextEdit> edits;
  if (info->static_receiver) {
    if (!target->is_static) return {};
    edits.push_back({call->recv->span, simple_of(target->owner)});
    edits.push_back({call->method_span, target->name});
    ImportNeed need = import_need(*file->unit, *ctx.universe, target->owner);
    if (need == ImportNeed::Conflict) return {};
    if (need == ImportNeed::Add) {
      edits.push_back(import_insertion(*file->unit, target->owner));
    }
  } else {
    if (target->is_static) return {};
    edits.push_back({call->method_span, target->name});
  }
  CandidateBuilder builder{&parent, &ctx, {}};
  builder.add(error.span.file, std::move(edits), OperatorId::MA1,
              "replace " + error.subject + " with mapped " + mapping->new_element);
  return std::move(builder.out);
}

std::vector<Candidate> ma1_field(const Candidate& parent, const CompileError& error,
                                 const OperatorContext& ctx) {
  const Mapping* mapping = ctx.mappings->find(ElementKind::Field, error.subject);
  if (!mapping) return {};
  const FieldEntry* target = find_field_by_full_name(*ctx.new_lib, mapping->new_element);
  if (!target) return {};
  const ProgramFile* file = parent.program.find(error.span.file);
  if (!file) return {};
  const Expr* expr = find_expr_at(*file->unit, error.span);
  if (!expr) return {};

  std::vector<TextEdit> edits;
  if (const auto* fa = std::get_if<FieldAccessExpr>(&expr->node)) {
    const AccessInfo* info = access_info_of(ctx, error.span);
    if (!info) return {};
    edits.push_back({fa->field_span, target->name});
    if (info->static_receiver) {
      if (!target->is_static) return {};
      edits.push_back({fa->recv->span, simple_of(target->owner)});
      ImportNeed need = import_need(*file->unit, *ctx.universe, target->owner);
      if (need == ImportNeed::Conflict) return {};
      if (need == ImportNeed::Add) {
        edits.push_back(import_insertion(*file->unit, target->owner));
      }
    }
  } else if (std::get_if<NameExpr>(&expr->node)) {
    if (!target->is_static) return {};
    edits.push_back({expr->span, simple_of(target->owner) + "." + target->name});
    ImportNeed need = import_need(*file->unit, *ctx.universe, target->owner);
    if (need == ImportNeed::Conflict) return {};
    if (need == ImportNeed::Add) {
      edits.push_back(import_insertion(*file->unit, target->owner));
    }
  } else {
    return {};
  }
  CandidateBuilder builder{&parent, &ctx, {}};
  builder.add(error.span.file, std::move(edits), OperatorId::MA1,
              "replace " + error.subject + " with mapped " + mapping->new_element);
  return std::move(builder.out);
}

}  // namespace

std::vector<Candidate> apply_ma1(const Candidate& parent, const CompileError& error,
                                 const OperatorContext& ctx) {
  switch (error.kind) {
    case ErrorKind::UndefinedType: return ma1_type(parent, error, ctx);
    case ErrorKind::UndefinedMethod: return ma1_method(parent, error, ctx);
    case ErrorKind::UndefinedField: return ma1_field(parent, error, ctx);
    case ErrorKind::UndefinedVariable: return ma1_field(parent, error, ctx);
    default: return {};
  }
}

namespace {

// ---------------------------------------------------------------- MA2

template <typename Entry>
std::vector<const Entry*> top_ten_by_distance(std::vector<const Entry*> elements,
                                              const std::string& subject) {
  std::sort(elements.begin(), elements.end(), [&](const Entry* a, const Entry* b) {
    auto da = levenshtein(subject, full_name(*a));
    auto db = levenshtein(subject, full_name(*b));
    if (da != db) return da < db;
    return full_name(*a) < full_name(*b);
  });
  if (elements.size() > 10) elements.resize(10);
  return elements;
}

}  // namespace

std::vector<Candidate> apply_ma2(const Candidate& parent, const CompileError& error,
                                 const OperatorContext& ctx) {
  const ProgramFile* file = parent.program.find(error.span.file);
  if (!file) return {};
  const Expr* expr = find_expr_at(*file->unit, error.span);
  if (!expr) return {};
  CandidateBuilder builder{&parent, &ctx, {}};

  if (error.kind == ErrorKind::UndefinedMethod) {
    const auto* call = std::get_if<CallExpr>(&expr->node);
    const AccessInfo* info = access_info_of(ctx, error.span);
    if (!call || !info) return {};
    for (const MethodEntry* m :
         top_ten_by_distance(ctx.new_lib->all_methods(), error.subject)) {
      if (m->vis != Visibility::Public) continue;
      if (m->is_static != info->static_receiver) continue;  // keep the call shape
      std::vector<TextEdit> edits;
      edits.push_back({call->method_span, m->name});
      if (info->static_receiver) {
        edits.push_back({call->recv->span, simple_of(m->owner)});
        ImportNeed need = import_need(*file->unit, *ctx.universe, m->owner);
        if (need == ImportNeed::Conflict) continue;
        if (need == ImportNeed::Add) {
          edits.push_back(import_insertion(*file->unit, m->owner));
        }
      }
      builder.add(error.span.file, std::move(edits), OperatorId::MA2,
                  "replace " + error.subject + " with compatible " + full_name(*m));
    }
  } else if (error.kind == ErrorKind::UndefinedVariable) {
    for (const FieldEntry* f :
         top_ten_by_distance(ctx.new_lib->all_fields(), error.subject)) {
      if (f->vis != Visibility::Public || !f->is_static) continue;
      std::vector<TextEdit> edits;
      edits.push_back({expr->span, simple_of(f->owner) + "." + f->name});
      ImportNeed need = import_need(*file->unit, *ctx.universe, f->owner);
      if (need == ImportNeed::Conflict) continue;
      if (need == ImportNeed::Add) {
        edits.push_back(import_insertion(*file->unit, f->owner));
      }
      builder.add(error.span.file, std::move(edits), OperatorId::MA2,
                  "replace " + error.subject + " with compatible " + full_name(*f));
    }
  } else {
    return {};
  }
  // a compatible element "introduces no more compilation errors"
  std::vector<Candidate> survivors;
  for (Candidate& c : builder.out) {
    if (c.fitness() <= parent.fitness()) survivors.push_back(std::move(c));
  }
  return survivors;
}

namespace {

// ---------------------------------------------------------- MA3 / MA13

struct AccessorPick {
  const MethodEntry* method = nullptr;
  std::int64_t distance = 0;
};

/// Nearest accessor by Levenshtein distance between the lower-cased
/// prefix-stripped method name and the field name.
std::optional<AccessorPick> pick_accessor(const TypeUniverse& universe,
                                          const std::string& owner,
                                          const std::string& field,
                                          const std::string& prefix, bool is_static,
                                          std::size_t arity) {
  std::optional<AccessorPick> best;
  for (const TypeEntry* entry : universe.supertype_closure(owner)) {
    for (const MethodEntry& m : entry->methods) {
      if (m.vis != Visibility::Public || m.is_abstract) continue;
      if (m.is_static != is_static) continue;
      if (m.param_types.size() != arity) continue;
      if (m.name.rfind(prefix, 0) != 0 || m.name.size() <= prefix.size()) continue;
      if (arity == 0 && m.return_type == "void") continue;
      std::string stripped = lower(m.name.substr(prefix.size()));
      auto d = levenshtein(stripped, lower(field));
      if (!best || d < best->distance ||
          (d == best->distance && m.name < best->method->name)) {
        best = AccessorPick{&m, d};
      }
    }
  }
  return best;
}

std::vector<Candidate> accessor_rewrite(const Candidate& parent,
                                        const CompileError& error,
                                        const OperatorContext& ctx, OperatorId op) {
  const ProgramFile* file = parent.program.find(error.span.file);
  if (!file) return {};
  const Expr* expr = find_expr_at(*file->unit, error.span);
  if (!expr) return {};
  const auto* fa = std::get_if<FieldAccessExpr>(&expr->node);
  const AccessInfo* info = access_info_of(ctx, error.span);
  if (!fa || !info) return {};
  std::string owner = package_of(error.subject);  // subject is owner.field
  std::string field = simple_of(error.subject);
  std::string recv = slice_of(*file, fa->recv->span);
  CandidateBuilder builder{&parent, &ctx, {}};
  if (info->is_write) {
    const Expr* assign = find_assign_with_lhs(*file->unit, error.span);
    if (!assign) return {};
    auto pick = pick_accessor(*ctx.universe, owner, field, "set",
                              info->static_receiver, 1);
    if (!pick) return {};
    const auto& a = std::get<AssignExpr>(assign->node);
    std::string rhs = slice_of(*file, a.rhs->span);
    builder.add(error.span.file,
                {{assign->span, recv + "." + pick->method->name + "(" + rhs + ")"}},
                op, "replace write of " + error.subject + " with setter " +
                        pick->method->name);
  } else {
    auto pick = pick_accessor(*ctx.universe, owner, field, "get",
                              info->static_receiver, 0);
    if (!pick) return {};
    builder.add(error.span.file,
                {{expr->span, recv + "." + pick->method->name + "()"}}, op,
                "replace read of " + error.subject + " with getter " +
                    pick->method->name);
  }
  return std::move(builder.out);
}

/// The reverse direction: a vanished getter/setter call becomes a field
/// access when a near-named public field exists.
std::vector<Candidate> accessor_to_field(const Candidate& parent,
                                         const CompileError& error,
                                         const OperatorContext& ctx) {
  const ProgramFile* file = parent.program.find(error.span.file);
  if (!file) return {};
  const Expr* expr = find_expr_at(*file->unit, error.span);
  if (!expr) return {};
  const auto* call = std::get_if<CallExpr>(&expr->node);
  const AccessInfo* info = access_info_of(ctx, error.span);
  if (!call || !info || info->receiver_type.empty()) return {};
  std::string prefix;
  if (call->method.rfind("get", 0) == 0 && call->args.empty()) {
    prefix = "get";
  } else if (call->method.rfind("set", 0) == 0 && call->args.size() == 1) {
    prefix = "set";
  } else {
    return {};
  }
  if (call->method.size() <= prefix.size()) return {};
  std::string stripped = lower(call->method.substr(prefix.size()));
  const FieldEntry* best = nullptr;
  std::int64_t best_distance = 0;
  for (const TypeEntry* entry : ctx.universe->supertype_closure(info->receiver_type)) {
    for (const FieldEntry& f : entry->fields) {
      if (f.vis != Visibility::Public) continue;
      if (f.is_static != info->static_receiver) continue;
      auto d = levenshtein(stripped, lower(f.name));
      if (!best || d < best_distance || (d == best_distance && f.name < best->name)) {
        best = &f;
        best_distance = d;
      }
    }
  }
  if (!best) return {};
  std::string recv = slice_of(*file, call->recv->span);
  CandidateBuilder builder{&parent, &ctx, {}};
  if (prefix == "get") {
    builder.add(error.span.file, {{expr->span, recv + "." + best->name}},
                OperatorId::MA3,
                "replace " + call->method + "() with field " + best->name);
  } else {
    std::string value = slice_of(*file, call->args[0]->span);
    builder.add(error.span.file,
                {{expr->span, recv + "." + best->name + " = " + value}},
                OperatorId::MA3,
                "replace " + call->method + "(..) with field write " + best->name);
  }
  return std::move(builder.out);
}

}  // namespace

std::vector<Candidate> apply_ma3(const Candidate& parent, const CompileError& error,
                                 const OperatorContext& ctx) {
  if (error.kind == ErrorKind::UndefinedField) {
    return accessor_rewrite(parent, error, ctx, OperatorId::MA3);
  }
  if (error.kind == ErrorKind::UndefinedMethod) {
    return accessor_to_field(parent, error, ctx);
  }
  return {};
}

std::vector<Candidate> apply_ma13(const Candidate& parent, const CompileError& error,
                                  const OperatorContext& ctx) {
  if (error.kind != ErrorKind::InvisibleField) return {};
  return accessor_rewrite(parent, error, ctx, OperatorId::MA13);
}

// ---------------------------------------------------------------- MA4

std::vector<Candidate> apply_ma4(const Candidate& parent, const CompileError& error,
                                 const OperatorContext& ctx) {
  if (error.kind != ErrorKind::UndefinedConstructor) return {};
  const ProgramFile* file = parent.program.find(error.span.file);
  if (!file) return {};
  const Expr* expr = find_expr_at(*file->unit, error.span);
  if (!expr) return {};
  const auto* new_expr = std::get_if<NewExpr>(&expr->node);
  if (!new_expr) return {};
  std::string type = error.subject.substr(0, error.subject.find('('));

  std::vector<std::string> arg_types;
  std::vector<const Expr*> args;
  for (const auto& a : new_expr->args) {
    args.push_back(a.get());
    arg_types.push_back(arg_type_of(ctx, *a));
  }

  // creators on the constructed type first, then any other type
  std::vector<const MethodEntry*> creators;
  for (const MethodEntry* m : ctx.new_lib->all_methods()) {
    if (m->is_static && m->vis == Visibility::Public && m->return_type == type) {
      creators.push_back(m);
    }
  }
  std::stable_sort(creators.begin(), creators.end(),
                   [&](const MethodEntry* a, const MethodEntry* b) {
                     bool a_own = a->owner == type;
                     bool b_own = b->owner == type;
                     if (a_own != b_own) return a_own;
                     return full_name(*a) < full_name(*b);
                   });

  CandidateBuilder builder{&parent, &ctx, {}};
  for (const MethodEntry* creator : creators) {
    std::size_t k = creator->param_types.size();
    if (k > args.size()) continue;
    // match params right to left, dropping unmatched leading arguments
    std::vector<int> picked(k);
    int cursor = static_cast<int>(args.size()) - 1;
    bool ok = true;
    for (int p = static_cast<int>(k) - 1; p >= 0; --p) {
      while (cursor >= 0 &&
             !compat(*ctx.universe, arg_types[static_cast<std::size_t>(cursor)],
                     creator->param_types[static_cast<std::size_t>(p)])) {
        --cursor;
      }
      if (cursor < 0) {
        ok = false;
        break;
      }
      picked[static_cast<std::size_t>(p)] = cursor--;
    }
    if (!ok) continue;
    std::vector<const Expr*> kept;
    for (int idx : picked) kept.push_back(args[static_cast<std::size_t>(idx)]);
    std::vector<TextEdit> edits;
    edits.push_back(
        {expr->span, rebuild_call(*file, simple_of(creator->owner), creator->name, kept)});
    ImportNeed need = import_need(*file->unit, *ctx.universe, creator->owner);
    if (need == ImportNeed::Conflict) continue;
    if (need == ImportNeed::Add) {
      edits.push_back(import_insertion(*file->unit, creator->owner));
    }
    builder.add(error.span.file, std::move(edits), OperatorId::MA4,
                "replace constructor " + error.subject + " with creator " +
                    full_name(*creator));
  }
  return std::move(builder.out);
}

// ---------------------------------------------------------------- MA5

std::vector<Candidate> apply_ma5(const Candidate& parent, const CompileError& error,
                                 const OperatorContext& ctx) {
  if (error.kind != ErrorKind::IncompatibleType || error.expected.empty()) return {};
  if (error.expected == "void") return {};
  const ProgramFile* file = parent.program.find(error.span.file);
  if (!file) return {};
  const Expr* expr = find_expr_at(*file->unit, error.span);
  if (!expr) return {};
  if (const auto* cast = std::get_if<CastExpr>(&expr->node)) {
    // idempotence guard: do not stack an identical cast
    if (cast->type.name == error.expected ||
        cast->type.name == simple_of(error.expected)) {
      return {};
    }
  }
  if (!is_primitive_name(error.expected) && !ctx.universe->find(error.expected)) {
    return {};  // cast target unresolvable
  }
  std::string target = render_type(*file->unit, *ctx.universe, error.expected);
  CandidateBuilder builder{&parent, &ctx, {}};
  builder.add(error.span.file,
              {{expr->span, "(" + target + ") " + slice_of(*file, expr->span)}},
              OperatorId::MA5, "cast expression to " + error.expected);
  return std::move(builder.out);
}

namespace {

// ---------------------------------------------------------------- MA6

struct CallSite {
  const Expr* expr = nullptr;
  std::vector<const Expr*> args;
  std::vector<std::string> arg_types;
  bool is_new = false;
  const CallExpr* call = nullptr;
  const NewExpr* new_expr = nullptr;
};

std::optional<CallSite> call_site_at(const ProgramFile& file,
                                     const OperatorContext& ctx, const Span& span) {
  const Expr* expr = find_expr_at(*file.unit, span);
  if (!expr) return std::nullopt;
  CallSite site;
  site.expr = expr;
  if (const auto* call = std::get_if<CallExpr>(&expr->node)) {
    site.call = call;
    for (const auto& a : call->args) {
      site.args.push_back(a.get());
      site.arg_types.push_back(arg_type_of(ctx, *a));
    }
    return site;
  }
  if (const auto* n = std::get_if<NewExpr>(&expr->node)) {
    site.is_new = true;
    site.new_expr = n;
    for (const auto& a : n->args) {
      site.args.push_back(a.get());
      site.arg_types.push_back(arg_type_of(ctx, *a));
    }
    return site;
  }
  return std::nullopt;
}

struct TargetSignature {
  std::vector<std::string> param_types;
  std::string label;
};

std::vector<TargetSignature> signatures_at(const CallSite& site,
                                           const OperatorContext& ctx) {
  std::vector<TargetSignature> out;
  if (site.is_new) {
    std::string type = site.new_expr->type.name;
    // resolve the written constructor type through the parent analysis
    auto it = ctx.analysis->expr_types.find(site.expr->span);
    std::string fqn = it != ctx.analysis->expr_types.end() && !it->second.empty()
                          ? it->second
                          : type;
    for (const ConstructorEntry* c : ctx.universe->constructors(fqn)) {
      if (c->vis != Visibility::Public) continue;
      out.push_back({c->param_types, fqn + render_param_types(c->param_types)});
    }
  } else {
    const AccessInfo* info = access_info_of(ctx, site.expr->span);
    if (!info || info->receiver_type.empty()) return out;
    for (const MethodEntry* m :
         ctx.universe->methods_named(info->receiver_type, site.call->method)) {
      if (m->vis != Visibility::Public) continue;
      if (m->is_static != info->static_receiver) continue;
      out.push_back({m->param_types, full_name(*m)});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const TargetSignature& a, const TargetSignature& b) {
              return a.label < b.label;
            });
  return out;
}

std::string rebuild_site(const ProgramFile& file, const CallSite& site,
                         const std::vector<const Expr*>& args) {
  std::string head;
  if (site.is_new) {
    head = "new " + site.new_expr->type.name + "(";
  } else {
    head = slice_of(file, site.call->recv->span) + "." + site.call->method + "(";
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) head += ", ";
    head += slice_of(file, args[i]->span);
  }
  return head + ")";
}

}  // namespace

std::vector<Candidate> apply_ma6(const Candidate& parent, const CompileError& error,
                                 const OperatorContext& ctx) {
  if (error.kind != ErrorKind::IncompatibleMethodArgs) return {};
  const ProgramFile* file = parent.program.find(error.span.file);
  if (!file) return {};
  auto site = call_site_at(*file, ctx, error.span);
  if (!site) return {};
  CandidateBuilder builder{&parent, &ctx, {}};
  for (const TargetSignature& sig : signatures_at(*site, ctx)) {
    std::size_t k = sig.param_types.size();
    std::size_t n = site->args.size();
    if (k < n) {
      // delete arguments: earliest subsequence matching the new signature
      std::vector<const Expr*> kept;
      std::size_t cursor = 0;
      bool ok = true;
      for (std::size_t p = 0; p < k; ++p) {
        while (cursor < n && !compat(*ctx.universe, site->arg_types[cursor],
                                     sig.param_types[p])) {
          ++cursor;
        }
        if (cursor == n) {
          ok = false;
          break;
        }
        kept.push_back(site->args[cursor++]);
      }
      if (ok) {
        builder.add(error.span.file,
                    {{site->expr->span, rebuild_site(*file, *site, kept)}},
                    OperatorId::MA6,
                    "drop arguments to match " + sig.label);
      }
    } else if (k == n && k > 1) {
      // reorder by parameter type; ambiguous with duplicate types
      std::vector<std::string> sorted_params = sig.param_types;
      std::sort(sorted_params.begin(), sorted_params.end());
      if (std::adjacent_find(sorted_params.begin(), sorted_params.end()) !=
          sorted_params.end()) {
        continue;
      }
      std::vector<std::string> sorted_args = site->arg_types;
      std::sort(sorted_args.begin(), sorted_args.end());
      if (sorted_args != sorted_params) continue;
      if (site->arg_types == sig.param_types) continue;  // already in order
      std::vector<const Expr*> reordered;
      for (const std::string& p : sig.param_types) {
        for (std::size_t i = 0; i < n; ++i) {
          if (site->arg_types[i] == p) {
            reordered.push_back(site->args[i]);
            break;
          }
        }
      }
      builder.add(error.span.file,
                  {{site->expr->span, rebuild_site(*file, *site, reordered)}},
                  OperatorId::MA6, "reorder arguments to match " + sig.label);
    }
  }
  return std::move(builder.out);
}

// ---------------------------------------------------------------- MA7

std::vector<Candidate> apply_ma7(const Candidate& parent, const CompileError& error,
                                 const OperatorContext& ctx) {
  if (error.kind != ErrorKind::UndefinedMethod &&
      error.kind != ErrorKind::IncompatibleMethodArgs) {
    return {};
  }
  const ProgramFile* file = parent.program.find(error.span.file);
  if (!file) return {};
  const Expr* expr = find_expr_at(*file->unit, error.span);
  if (!expr) return {};
  const auto* call = std::get_if<CallExpr>(&expr->node);
  const AccessInfo* info = access_info_of(ctx, error.span);
  if (!call || !info) return {};
  CandidateBuilder builder{&parent, &ctx, {}};

  if (info->static_receiver) {
    // static T.m(a1, rest...) -> a1.m'(rest...)
    if (call->args.empty()) return {};
    std::string first_type = arg_type_of(ctx, *call->args[0]);
    if (first_type.empty() || is_primitive_name(first_type) || first_type == "null") {
      return {};
    }
    std::vector<const MethodEntry*> instance_methods;
    for (const TypeEntry* entry : ctx.universe->supertype_closure(first_type)) {
      for (const MethodEntry& m : entry->methods) {
        if (!m.is_static && !m.is_abstract && m.vis == Visibility::Public) {
          instance_methods.push_back(&m);
        }
      }
    }
    for (const MethodEntry* m : top_ten_by_distance(instance_methods, error.subject)) {
      std::vector<const Expr*> rest(call->args.size() > 1 ? call->args.size() - 1 : 0);
      for (std::size_t i = 1; i < call->args.size(); ++i) {
        rest[i - 1] = call->args[i].get();
      }
      std::string receiver = slice_of(*file, call->args[0]->span);
      builder.add(error.span.file,
                  {{expr->span, rebuild_call(*file, receiver, m->name, rest)}},
                  OperatorId::MA7,
                  "replace static call with instance call " + full_name(*m));
    }
  } else {
    // instance r.m(args...) -> T.m'(r, args...)
    if (info->receiver_type.empty()) return {};
    std::vector<const MethodEntry*> statics;
    for (const MethodEntry* m : ctx.new_lib->all_methods()) {
      if (!m->is_static || m->vis != Visibility::Public) continue;
      if (m->param_types.empty()) continue;
      if (!compat(*ctx.universe, info->receiver_type, m->param_types[0])) continue;
      statics.push_back(m);
    }
    for (const MethodEntry* m : top_ten_by_distance(statics, error.subject)) {
      std::vector<const Expr*> args;
      args.push_back(call->recv.get());
      for (const auto& a : call->args) args.push_back(a.get());
      std::vector<TextEdit> edits;
      edits.push_back(
          {expr->span, rebuild_call(*file, simple_of(m->owner), m->name, args)});
      ImportNeed need = import_need(*file->unit, *ctx.universe, m->owner);
      if (need == ImportNeed::Conflict) continue;
      if (need == ImportNeed::Add) {
        edits.push_back(import_insertion(*file->unit, m->owner));
      }
      builder.add(error.span.file, std::move(edits), OperatorId::MA7,
                  "replace instance call with static call " + full_name(*m));
    }
  }
  return std::move(builder.out);
}

// ---------------------------------------------------------------- MA8

std::vector<Candidate> apply_ma8(const Candidate& parent, const CompileError& error,
                                 const OperatorContext& ctx) {
  if (error.kind != ErrorKind::IncompatibleMethodArgs) return {};
  const ProgramFile* file = parent.program.find(error.span.file);
  if (!file) return {};
  auto site = call_site_at(*file, ctx, error.span);
  if (!site) return {};
  CandidateBuilder builder{&parent, &ctx, {}};
  for (const TargetSignature& sig : signatures_at(*site, ctx)) {
    if (sig.param_types.size() != site->args.size()) continue;
    for (std::size_t i = 0; i < site->args.size(); ++i) {
      const std::string& actual = site->arg_types[i];
      const std::string& wanted = sig.param_types[i];
      if (compat(*ctx.universe, actual, wanted)) continue;
      if (actual.empty() || is_primitive_name(actual) || actual == "null") continue;
      std::string arg_text = slice_of(*file, site->args[i]->span);
      // fields of the argument's type with the wanted type
      for (const TypeEntry* entry : ctx.universe->supertype_closure(actual)) {
        for (const FieldEntry& f : entry->fields) {
          if (f.vis != Visibility::Public || f.is_static) continue;
          if (!compat(*ctx.universe, f.type, wanted)) continue;
          builder.add(error.span.file,
                      {{site->args[i]->span, arg_text + "." + f.name}},
                      OperatorId::MA8,
                      "pass field " + f.name + " of incompatible argument");
        }
        for (const MethodEntry& m : entry->methods) {
          if (m.vis != Visibility::Public || m.is_static || m.is_abstract) continue;
          if (!m.param_types.empty()) continue;
          if (m.return_type == "void" || !compat(*ctx.universe, m.return_type, wanted)) {
            continue;
          }
          builder.add(error.span.file,
                      {{site->args[i]->span, arg_text + "." + m.name + "()"}},
                      OperatorId::MA8,
                      "call " + m.name + "() on incompatible argument");
        }
      }
    }
  }
  return std::move(builder.out);
}

namespace {

// ---------------------------------------------------------------- MA9

struct ParsedSignature {
  std::string ret;
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> throws;
};

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto pos = text.find(sep, start);
    std::string part = pos == std::string::npos ? text.substr(start)
                                                : text.substr(start, pos - start);
    while (!part.empty() && part.front() == ' ') part.erase(part.begin());
    while (!part.empty() && part.back() == ' ') part.pop_back();
    if (!part.empty()) out.push_back(part);
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::optional<ParsedSignature> parse_signature_text(const std::string& text) {
  auto lparen = text.find('(');
  auto rparen = text.find(')', lparen == std::string::npos ? 0 : lparen);
  if (lparen == std::string::npos || rparen == std::string::npos) return std::nullopt;
  std::string head = text.substr(0, lparen);
  auto space = head.rfind(' ');
  if (space == std::string::npos) return std::nullopt;
  ParsedSignature sig;
  sig.ret = head.substr(0, space);
  sig.name = head.substr(space + 1);
  for (const std::string& part : split_list(text.substr(lparen + 1, rparen - lparen - 1), ',')) {
    auto sep = part.rfind(' ');
    if (sep == std::string::npos) return std::nullopt;
    sig.params.emplace_back(part.substr(0, sep), part.substr(sep + 1));
  }
  std::string tail = text.substr(rparen + 1);
  auto throws_pos = tail.find("throws");
  if (throws_pos != std::string::npos) {
    sig.throws = split_list(tail.substr(throws_pos + 6), ',');
  }
  return sig;
}

}  // namespace

std::vector<Candidate> apply_ma9(const Candidate& parent, const CompileError& error,
                                 const OperatorContext& ctx) {
  if (error.kind != ErrorKind::UnimplementedAbstractMethod) return {};
  const ProgramFile* file = parent.program.find(error.span.file);
  if (!file) return {};
  auto sig = parse_signature_text(error.expected);
  if (!sig) return {};
  // the class that must implement the method is in `actual`
  const TypeDecl* decl = nullptr;
  for (const auto& d : file->unit->types) {
    std::string fqn = file->unit->package_name.empty()
                          ? d.name
                          : file->unit->package_name + "." + d.name;
    if (fqn == error.actual) {
      decl = &d;
      break;
    }
  }
  if (!decl) return {};

  std::string params;
  for (std::size_t i = 0; i < sig->params.size(); ++i) {
    if (i > 0) params += ", ";
    params += sig->params[i].first + " " + sig->params[i].second;
  }
  std::string throws;
  if (!sig->throws.empty()) {
    throws = " throws ";
    for (std::size_t i = 0; i < sig->throws.size(); ++i) {
      if (i > 0) throws += ", ";
      throws += sig->throws[i];
    }
  }
  std::string body = "    //todo: Please implement the method.\n";
  if (sig->ret == "bool") {
    body += "    return false;\n";
  } else if (sig->ret == "int") {
    body += "    return 0;\n";
  } else if (sig->ret != "void") {
    body += "    return null;\n";
  }
  std::string stub = "  public " + sig->ret + " " + sig->name + "(" + params + ")" +
                     throws + " {\n" + body + "  }\n";

  Span at = decl->body_rbrace;
  at.end_line = at.start_line;
  at.end_col = at.start_col;
  CandidateBuilder builder{&parent, &ctx, {}};
  builder.add(error.span.file, {{at, stub}}, OperatorId::MA9,
              "generate stub for " + error.subject);
  return std::move(builder.out);
}

// ---------------------------------------------------------------- MA10

std::vector<Candidate> apply_ma10(const Candidate& parent, const CompileError& error,
                                  const OperatorContext& ctx) {
  if (error.kind != ErrorKind::UnhandledException) return {};
  const ProgramFile* file = parent.program.find(error.span.file);
  if (!file) return {};
  auto enclosing = find_enclosing(*file->unit, error.span);
  if (!enclosing || !enclosing->stmt) return {};
  const std::string& exc = error.subject;

  // guard: already inside a try whose body covers the span and whose
  // catches name the exception type (handlers are not protected)
  for (const Stmt* stmt : enclosing->chain) {
    if (const auto* tc = std::get_if<TryCatchStmt>(&stmt->node)) {
      Span body_range = tc->body.lbrace;
      body_range.end_line = tc->body.rbrace.end_line;
      body_range.end_col = tc->body.rbrace.end_col;
      if (!body_range.contains(error.span)) continue;
      for (const auto& clause : tc->catches) {
        if (clause.type.name == exc || clause.type.name == simple_of(exc)) return {};
      }
    }
  }

  std::string rendered = render_type(*file->unit, *ctx.universe, exc);
  const Stmt* stmt = enclosing->stmt;
  std::string indent(static_cast<std::size_t>(std::max(stmt->span.start_col - 1, 0)), ' ');
  std::string stmt_text = slice_of(*file, stmt->span);

  CandidateBuilder builder{&parent, &ctx, {}};
  std::string wrapped = "try {\n" + indent + "  " + stmt_text + "\n" + indent +
                        "} catch (" + rendered + " e) {\n" + indent + "}";
  builder.add(error.span.file, {{stmt->span, wrapped}}, OperatorId::MA10,
              "wrap statement in try/catch for " + exc);

  // declare the exception on the enclosing method instead
  const std::vector<TypeName>* declared = nullptr;
  Span sig_end;
  if (enclosing->method) {
    declared = &enclosing->method->throws;
    sig_end = enclosing->method->sig_end;
  } else if (enclosing->ctor) {
    declared = &enclosing->ctor->throws;
    sig_end = enclosing->ctor->sig_end;
  }
  if (declared) {
    bool already = false;
    for (const auto& t : *declared) {
      if (t.name == exc || t.name == simple_of(exc)) already = true;
    }
    if (!already) {
      std::string insertion =
          declared->empty() ? " throws " + rendered : ", " + rendered;
      builder.add(error.span.file, {{sig_end, insertion}}, OperatorId::MA10,
                  "declare thrown exception " + exc);
    }
  }
  return std::move(builder.out);
}

// ---------------------------------------------------------------- MA11

std::vector<Candidate> apply_ma11(const Candidate& parent, const CompileError& error,
                                  const OperatorContext& ctx) {
  if (error.kind != ErrorKind::UndefinedMethod &&
      error.kind != ErrorKind::UndefinedVariable) {
    return {};
  }
  const ProgramFile* file = parent.program.find(error.span.file);
  if (!file) return {};
  auto enclosing = find_enclosing(*file->unit, error.span);
  if (!enclosing || !enclosing->stmt) return {};  // never delete declarations
  const Stmt* stmt = enclosing->stmt;
  if (std::holds_alternative<TryCatchStmt>(stmt->node)) {
    return {};  // the error sits in a control-structure header
  }
  CandidateBuilder builder{&parent, &ctx, {}};
  builder.add(error.span.file, {{line_span(*file, stmt->span), ""}}, OperatorId::MA11,
              "remove the statement causing " + std::string(to_string(error.kind)) +
                  " on " + error.subject);
  return std::move(builder.out);
}

// ---------------------------------------------------------------- MA12

std::vector<Candidate> apply_ma12(const Candidate& parent, const CompileError& error,
                                  const OperatorContext& ctx) {
  if (error.kind != ErrorKind::AmbiguousType) return {};
  std::vector<std::string> candidates = split_list(error.expected, ',');
  if (candidates.size() < 2) return {};
  const ProgramFile* file = parent.program.find(error.span.file);
  if (!file) return {};
  const CompilationUnit& unit = *file->unit;

  std::set<std::string> conflict_packages;
  for (const std::string& q : candidates) conflict_packages.insert(package_of(q));
  std::vector<const ImportDecl*> conflicting;
  for (const auto& imp : unit.imports) {
    if (imp.wildcard && conflict_packages.count(imp.qualified)) {
      conflicting.push_back(&imp);
    }
  }
  if (conflicting.empty()) return {};

  // other simple names that currently resolve through the removed wildcards
  std::set<std::string> used_names;
  for_each_type_ref(unit, [&](const TypeName& ref) {
    if (ref.name.find('.') == std::string::npos && !is_primitive_name(ref.name)) {
      used_names.insert(ref.name);
    }
  });
  for_each_expr(unit, [&](const Expr& e) {
    const Expr* recv = nullptr;
    if (const auto* call = std::get_if<CallExpr>(&e.node)) recv = call->recv.get();
    if (const auto* fa = std::get_if<FieldAccessExpr>(&e.node)) recv = fa->recv.get();
    if (!recv) return;
    const AccessInfo* info = access_info_of(ctx, e.span);
    if (!info || !info->static_receiver) return;
    if (const auto* name = std::get_if<NameExpr>(&recv->node)) {
      used_names.insert(name->id);
    }
  });
  used_names.erase(error.subject);
  std::vector<std::string> narrowing;
  for (const std::string& name : used_names) {
    auto resolved = resolve_simple(unit, *ctx.universe, name);
    if (!resolved) continue;
    if (conflict_packages.count(package_of(*resolved))) {
      narrowing.push_back(*resolved);
    }
  }
  std::sort(narrowing.begin(), narrowing.end());

  CandidateBuilder builder{&parent, &ctx, {}};
  for (const std::string& chosen : candidates) {
    std::vector<TextEdit> edits;
    std::string replacement = "import " + chosen + ";";
    for (const std::string& extra : narrowing) {
      replacement += "\nimport " + extra + ";";
    }
    edits.push_back({conflicting.front()->span, replacement});
    for (std::size_t i = 1; i < conflicting.size(); ++i) {
      edits.push_back({line_span(*file, conflicting[i]->span), ""});
    }
    builder.add(error.span.file, std::move(edits), OperatorId::MA12,
                "import " + chosen + " explicitly to disambiguate " + error.subject);
  }
  return std::move(builder.out);
}

std::vector<Candidate> apply_operator(OperatorId op, const Candidate& parent,
                                      const CompileError& error,
                                      const OperatorContext& ctx) {
  // stale errors are never applicable
  bool present = false;
  for (const CompileError& e : parent.errors()) {
    if (e == error) {
      present = true;
      break;
    }
  }
  if (!present) return {};
  switch (op) {
    case OperatorId::MA1: return apply_ma1(parent, error, ctx);
    case OperatorId::MA2: return apply_ma2(parent, error, ctx);
    case OperatorId::MA3: return apply_ma3(parent, error, ctx);
    case OperatorId::MA4: return apply_ma4(parent, error, ctx);
    case OperatorId::MA5: return apply_ma5(parent, error, ctx);
    case OperatorId::MA6: return apply_ma6(parent, error, ctx);
    case OperatorId::MA7: return apply_ma7(parent, error, ctx);
    case OperatorId::MA8: return apply_ma8(parent, error, ctx);
    case OperatorId::MA9: return apply_ma9(parent, error, ctx);
    case OperatorId::MA10: return apply_ma10(parent, error, ctx);
    case OperatorId::MA11: return apply_ma11(parent, error, ctx);
    case OperatorId::MA12: return apply_ma12(parent, error, ctx);
    case OperatorId::MA13: return apply_ma13(parent, error, ctx);
  }
  return {};
}

Candidate initial_candidate(Program program, const OperatorContext& ctx) {
  Candidate candidate;
  candidate.program = std::move(program);
  candidate.analysis = std::make_shared<const CheckResult>(ctx.check(candidate.program));
  return candidate;
}

}  // namespace miniup
