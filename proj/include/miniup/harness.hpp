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

#ifndef MINIUP_HARNESS_HPP
#define MINIUP_HARNESS_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "miniup/search.hpp"

namespace miniup {

struct ExpectedOutcome {
  std::optional<int> initial_errors;
  std::optional<int> final_errors;
  std::optional<std::set<std::string>> operators;  // distinct ids in the edit log
};

/// A migration task on disk: client written for v1, checked against v2.
struct MigrationTask {
  std::string name;
  std::string client_dir;
  std::string old_lib_dir;
  std::string new_lib_dir;
  std::optional<ExpectedOutcome> expected;
};

enum class TaskClass { Clean, Reduced, Unchanged, Migrated };
const char* to_string(TaskClass c);

struct TaskOutcome {
  std::string name;
  TaskClass classification = TaskClass::Clean;
  int initial_errors = 0;
  int final_errors = 0;
  long solutions_generated = 0;
  int generations_used = 0;
  std::optional<bool> golden_ok;  // only when the task ships expectations
  MigrationResult result;
};

/// Table-style suite totals. `percent` is migrated/(total - clean) and is
/// absent when every task is clean; the averages run over non-clean tasks.
struct Report {
  int total = 0;
  int clean = 0;
  int reduced = 0;    // 0 < final < initial
  int unchanged = 0;  // final == initial > 0
  int increased = 0;  // structurally impossible; asserted 0
  int migrated = 0;   // final == 0 < initial
  std::optional<double> percent;
  std::optional<double> avg_errors_reduced;
  std::optional<double> avg_solutions;
};

/// Loads `dir` as a task: client/, libs/v1/, libs/v2/, expected.json.
MigrationTask load_task(const std::string& task_dir);

/// All task directories directly under `corpus_dir`, sorted by name.
std::vector<MigrationTask> load_suite(const std::string& corpus_dir);

/// Runs one task end to end. Throws TaskSetupError when inputs do not
/// parse, tables do not build, or the client does not compile cleanly
/// against the old library version.
TaskOutcome run_task(const MigrationTask& task, const SearchConfig& config);

Report aggregate(const std::vector<TaskOutcome>& outcomes);

nlohmann::ordered_json errors_to_json(const std::vector<CompileError>& errors);
nlohmann::ordered_json edit_to_json(const EditAction& edit);
nlohmann::ordered_json migration_log_json(const MigrationResult& result,
                                          const SearchConfig& config);
nlohmann::ordered_json report_to_json(const Report& report,
                                      const std::vector<TaskOutcome>& outcomes,
                                      const SearchConfig& config,
                                      const std::string& suite_name);
std::string report_to_text(const Report& report,
                           const std::vector<TaskOutcome>& outcomes,
                           const std::string& suite_name);

/// Writes migrated sources under out_dir/client, a unified diff of every
/// changed file, and migration_log.json.
void write_migration_outputs(const Program& original, const MigrationResult& result,
                             const SearchConfig& config, const std::string& out_dir);

}  // namespace miniup

#endif  // MINIUP_HARNESS_HPP
