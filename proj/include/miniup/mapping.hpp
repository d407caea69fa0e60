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

#ifndef MINIUP_MAPPING_HPP
#define MINIUP_MAPPING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "miniup/symbols.hpp"

namespace miniup {

enum class ElementKind { Type, Method, Field };

const char* to_string(ElementKind kind);

/// One mined one-to-one correspondence between API elements of two
/// library versions; `distance` is the Levenshtein distance of the full
/// code names.
struct Mapping {
  std::string old_element;
  std::string new_element;
  ElementKind kind = ElementKind::Type;
  std::int64_t distance = 0;
};

class MappingTable {
 public:
  void add(Mapping mapping);

  /// Lookup by the old element's full name; injective per kind.
  const Mapping* find(ElementKind kind, const std::string& old_full_name) const;

  /// All mappings sorted by kind (type, method, field) then old name.
  std::vector<const Mapping*> all() const;

  std::size_t size() const;

 private:
  std::map<std::string, Mapping> per_kind_[3];
};

/// Mines per-kind one-to-one mappings between two versions: identical
/// full names pair at distance 0, the rest go through the Hungarian
/// assignment on the Levenshtein cost matrix.
MappingTable mine(const ApiSymbolTable& old_table, const ApiSymbolTable& new_table);

/// Line format: KIND<TAB>old_full_name<TAB>new_full_name<TAB>distance.
std::string to_tsv(const MappingTable& table);
MappingTable mapping_table_from_tsv(const std::string& text);

const MethodEntry* find_method_by_full_name(const ApiSymbolTable& table,
                                            const std::string& name);
const FieldEntry* find_field_by_full_name(const ApiSymbolTable& table,
                                          const std::string& name);

}  // namespace miniup

#endif  // MINIUP_MAPPING_HPP
