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

#ifndef MINIUP_SEARCH_HPP
#define MINIUP_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>

#include "miniup/operators.hpp"

namespace miniup {

class TaskSetupError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultSeed = 9;

/// Budgets follow the migration algorithm's termination condition:
/// stop at fitness zero, after `patience` stagnant generations, or at
/// `max_generations`; the pool keeps the ten best unique candidates.
struct SearchConfig {
  int max_generations = 100;
  int patience = 10;
  int pool_cap = 10;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::set<OperatorId>> operator_whitelist;
};

struct MigrationInput {
  Program client;
  const ApiSymbolTable* new_lib = nullptr;
  const MappingTable* mappings = nullptr;
};

struct MigrationResult {
  Program final_program;
  int initial_errors = 0;
  int final_errors = 0;
  bool fully_migrated = false;
  int generations_used = 0;
  long solutions_generated = 0;
  std::vector<EditAction> edit_log;
  std::vector<CompileError> final_error_list;
};

/// Number of compilation errors of the program against `lib`.
int fitness(const Program& program, const ApiSymbolTable& lib);

/// Canonical string of the candidate's error multiset: equal keys iff the
/// (kind, subject, span) multisets are identical.
std::string dedup_key(const Candidate& candidate);

/// The generational migration loop. Deterministic for a given seed.
MigrationResult migrate(const MigrationInput& input, const SearchConfig& config);

}  // namespace miniup

#endif  // MINIUP_SEARCH_HPP
