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

#include "miniup/mapping.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "miniup/assignment.hpp"
#include "miniup/distance.hpp"

namespace miniup {

const char* to_string(ElementKind kind) {
  switch (kind) {
    case ElementKind::Type: return "type";
    case ElementKind::Method: return "method";
    case ElementKind::Field: return "field";
  }
  return "?";
}

namespace {

ElementKind element_kind_from_string(const std::string& name) {
  if (name == "type") return ElementKind::Type;
  if (name == "method") return ElementKind::Method;
  if (name == "field") return ElementKind::Field;
  throw std::invalid_argument("unknown element kind: " + name);
}

/// Pairs identical names at distance 0, then assigns the rest by
/// minimal total Levenshtein distance. Exact pre-matching preserves
/// global optimality because the distance is a metric.
void mine_kind(ElementKind kind, std::vector<std::string> old_names,
               std::vector<std::string> new_names, MappingTable& out) {
  std::sort(old_names.begin(), old_names.end());
  std::sort(new_names.begin(), new_names.end());
  std::set<std::string> new_set(new_names.begin(), new_names.end());
  std::vector<std::string> old_rest, new_rest;
  for (const auto& name : old_names) {
    if (new_set.count(name)) {
      out.add({name, name, kind, 0});
    } else {
      old_rest.push_back(name);
    }
  }
  std::set<std::string> old_set(old_names.begin(), old_names.end());
  for (const auto& name : new_names) {
    if (!old_set.count(name)) new_rest.push_back(name);
  }
  if (old_rest.empty() || new_rest.empty()) return;
  std::vector<std::vector<std::int64_t>> cost(old_rest.size(),
                                              std::vector<std::int64_t>(new_rest.size()));
  for (std::size_t i = 0; i < old_rest.size(); ++i) {
    for (std::size_t j = 0; j < new_rest.size(); ++j) {
      cost[i][j] = levenshtein(old_rest[i], new_rest[j]);
    }
  }
  AssignmentResult assignment = hungarian(cost);
  for (const auto& [row, col] : assignment.pairs) {
    const std::string& old_name = old_rest[static_cast<std::size_t>(row)];
    const std::string& new_name = new_rest[static_cast<std::size_t>(col)];
    out.add({old_name, new_name, kind, levenshtein(old_name, new_name)});
  }
}

}  // namespace

void MappingTable::add(Mapping mapping) {
  auto& bucket = per_kind_[static_cast<int>(mapping.kind)];
  bucket[mapping.old_element] = std::move(mapping);
}

const Mapping* MappingTable::find(ElementKind kind,
                                  const std::string& old_full_name) const {
  const auto& bucket = per_kind_[static_cast<int>(kind)];
  auto it = bucket.find(old_full_name);
  return it == bucket.end() ? nullptr : &it->second;
}

std::vector<const Mapping*> MappingTable::all() const {
  std::vector<const Mapping*> out;
  for (const auto& bucket : per_kind_) {
    for (const auto& [_, mapping] : bucket) out.push_back(&mapping);
  }
  return out;
}

std::size_t MappingTable::size() const {
  std::size_t total = 0;
  for (const auto& bucket : per_kind_) total += bucket.size();
  return total;
}

MappingTable mine(const ApiSymbolTable& old_table, const ApiSymbolTable& new_table) {
  MappingTable out;
  auto names_of_types = [](const ApiSymbolTable& t) {
    std::vector<std::string> names;
    for (const TypeEntry* e : t.all_types()) names.push_back(e->qualified);
    return names;
  };
  auto names_of_methods = [](const ApiSymbolTable& t) {
    std::vector<std::string> names;
    for (const MethodEntry* m : t.all_methods()) names.push_back(full_name(*m));
    return names;
  };
  auto names_of_fields = [](const ApiSymbolTable& t) {
    std::vector<std::string> names;
    for (const FieldEntry* f : t.all_fields()) names.push_back(full_name(*f));
    return names;
  };
  mine_kind(ElementKind::Type, names_of_types(old_table), names_of_types(new_table), out);
  mine_kind(ElementKind::Method, names_of_methods(old_table), names_of_methods(new_table), out);
  mine_kind(ElementKind::Field, names_of_fields(old_table), names_of_fields(new_table), out);
  return out;
}

std::string to_tsv(const MappingTable& table) {
  std::string out;
  for (const Mapping* m : table.all()) {
    out += std::string(to_string(m->kind)) + "\t" + m->old_element + "\t" +
           m->new_element + "\t" + std::to_string(m->distance) + "\n";
  }
  return out;
}

MappingTable mapping_table_from_tsv(const std::string& text) {
  MappingTable out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> cols;
    std::size_t start = 0;
    for (;;) {
      auto tab = line.find('\t', start);
      if (tab == std::string::npos) {
        cols.push_back(line.substr(start));
        break;
      }
      cols.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    if (cols.size() != 4) {
      throw std::invalid_argument("mapping file line " + std::to_string(lineno) +
                                  ": expected 4 tab-separated columns");
    }
    Mapping m;
    m.kind = element_kind_from_string(cols[0]);
    m.old_element = cols[1];
    m.new_element = cols[2];
    m.distance = std::stoll(cols[3]);
    out.add(std::move(m));
  }
  return out;
}

const MethodEntry* find_method_by_full_name(const ApiSymbolTable& table,
                                            const std::string& name) {
  for (const MethodEntry* m : table.all_methods()) {
    if (full_name(*m) == name) return m;
  }
  return nullptr;
}

const FieldEntry* find_field_by_full_name(const ApiSymbolTable& table,
                                          const std::string& name) {
  for (const FieldEntry* f : table.all_fields()) {
    if (full_name(*f) == name) return f;
  }
  return nullptr;
}

}  // namespace miniup
