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

#include "miniup/harness.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "miniup/diff.hpp"
#include "miniup/parser.hpp"

namespace miniup {
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TaskSetupError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << text;
}

ApiSymbolTable load_library(const std::string& dir, const std::string& label) {
  Program program;
  try {
    program = load_program(dir);
  } catch (const std::exception& e) {
    throw TaskSetupError("library " + label + ": " + e.what());
  }
  try {
    return build_symbol_table(program.units(), label);
  } catch (const BuildError& e) {
    throw TaskSetupError("library " + label + ": " + e.what());
  }
}

std::string format_1dp(double value) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(1) << value;
  return out.str();
}

}  // namespace

const char* to_string(TaskClass c) {
  switch (c) {
    case TaskClass::Clean: return "clean";
    case TaskClass::Reduced: return "reduced";
    case TaskClass::Unchanged: return "unchanged";
    case TaskClass::Migrated: return "migrated";
  }
  return "?";
}

MigrationTask load_task(const std::string& task_dir) {
  fs::path dir(task_dir);
  if (!fs::is_directory(dir)) throw TaskSetupError("no such task: " + task_dir);
  MigrationTask task;
  task.name = dir.filename().string();
  task.client_dir = (dir / "client").string();
  task.old_lib_dir = (dir / "libs" / "v1").string();
  task.new_lib_dir = (dir / "libs" / "v2").string();
  for (const char* piece : {"client", "libs/v1", "libs/v2"}) {
    if (!fs::is_directory(dir / piece)) {
      throw TaskSetupError("task " + task.name + " is missing " + piece);
    }
  }
  fs::path expected = dir / "expected.json";
  if (fs::exists(expected)) {
    auto json = nlohmann::json::parse(read_file(expected));
    ExpectedOutcome out;
    if (json.contains("initial_errors")) out.initial_errors = json["initial_errors"];
    if (json.contains("final_errors")) out.final_errors = json["final_errors"];
    if (json.contains("operators")) {
      std::set<std::string> ops;
      for (const auto& op : json["operators"]) ops.insert(op.get<std::string>());
      out.operators = std::move(ops);
    }
    task.expected = std::move(out);
  }
  return task;
}

std::vector<MigrationTask> load_suite(const std::string& corpus_dir) {
  if (!fs::is_directory(corpus_dir)) {
    throw TaskSetupError("no such corpus directory: " + corpus_dir);
  }
  std::vector<std::string> names;
  for (const auto& entry : fs::directory_iterator(corpus_dir)) {
    if (entry.is_directory()) names.push_back(entry.path().string());
  }
  std::sort(names.begin(), names.end());
  std::vector<MigrationTask> tasks;
  for (const auto& name : names) tasks.push_back(load_task(name));
  return tasks;
}

TaskOutcome run_task(const MigrationTask& task, const SearchConfig& config) {
  Program client;
  try {
    client = load_program(task.client_dir);
  } catch (const std::exception& e) {
    throw TaskSetupError("task " + task.name + ": " + e.what());
  }
  ApiSymbolTable old_lib = load_library(task.old_lib_dir, "v1");
  ApiSymbolTable new_lib = load_library(task.new_lib_dir, "v2");
  // sanity: the client must be a working v1 program
  auto v1_errors = check(client.units(), old_lib);
  if (!v1_errors.empty()) {
    throw TaskSetupError("task " + task.name + ": client does not compile against " +
                         "the old library (" + std::to_string(v1_errors.size()) +
                         " errors, first: " + v1_errors.front().message + ")");
  }
  MappingTable mappings = mine(old_lib, new_lib);
  MigrationInput input;
  input.client = std::move(client);
  input.new_lib = &new_lib;
  input.mappings = &mappings;
  MigrationResult result = migrate(input, config);

  TaskOutcome outcome;
  outcome.name = task.name;
  outcome.initial_errors = result.initial_errors;
  outcome.final_errors = result.final_errors;
  outcome.solutions_generated = result.solutions_generated;
  outcome.generations_used = result.generations_used;
  if (result.initial_errors == 0) {
    outcome.classification = TaskClass::Clean;
  } else if (result.final_errors == 0) {
    outcome.classification = TaskClass::Migrated;
  } else if (result.final_errors < result.initial_errors) {
    outcome.classification = TaskClass::Reduced;
  } else {
    outcome.classification = TaskClass::Unchanged;
  }
  if (task.expected) {
    bool ok = true;
    if (task.expected->initial_errors &&
        *task.expected->initial_errors != result.initial_errors) {
      ok = false;
    }
    if (task.expected->final_errors &&
        *task.expected->final_errors != result.final_errors) {
      ok = false;
    }
    if (task.expected->operators) {
      std::set<std::string> used;
      for (const auto& e : result.edit_log) used.insert(to_string(e.op));
      if (used != *task.expected->operators) ok = false;
    }
    outcome.golden_ok = ok;
  }
  outcome.result = std::move(result);
  return outcome;
}

Report aggregate(const std::vector<TaskOutcome>& outcomes) {
  Report report;
  report.total = static_cast<int>(outcomes.size());
  long reduced_errors = 0;
  long solutions = 0;
  for (const auto& o : outcomes) {
    switch (o.classification) {
      case TaskClass::Clean: ++report.clean; break;
      case TaskClass::Reduced: ++report.reduced; break;
      case TaskClass::Unchanged: ++report.unchanged; break;
      case TaskClass::Migrated: ++report.migrated; break;
    }
    if (o.final_errors > o.initial_errors) ++report.increased;
    if (o.classification != TaskClass::Clean) {
      reduced_errors += o.initial_errors - o.final_errors;
      solutions += o.solutions_generated;
    }
  }
  int attempted = report.total - report.clean;
  if (attempted > 0) {
    report.percent = 100.0 * report.migrated / attempted;
    report.avg_errors_reduced = static_cast<double>(reduced_errors) / attempted;
    report.avg_solutions = static_cast<double>(solutions) / attempted;
  }
  return report;
}

nlohmann::ordered_json errors_to_json(const std::vector<CompileError>& errors) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& e : errors) {
    out.push_back({{"file", e.span.file},
                   {"line", e.span.start_line},
                   {"col", e.span.start_col},
                   {"kind", to_string(e.kind)},
                   {"subject", e.subject},
                   {"expected", e.expected},
                   {"actual", e.actual},
                   {"message", e.message}});
  }
  return out;
}

nlohmann::ordered_json edit_to_json(const EditAction& edit) {
  return {{"generation", edit.generation},
          {"operator", to_string(edit.op)},
          {"file", edit.target.file},
          {"span",
           {{"start_line", edit.target.start_line},
            {"start_col", edit.target.start_col},
            {"end_line", edit.target.end_line},
            {"end_col", edit.target.end_col}}},
          {"before", edit.before},
          {"after", edit.after},
          {"fitness_after", edit.fitness_after},
          {"description", edit.description}};
}

nlohmann::ordered_json migration_log_json(const MigrationResult& result,
                                          const SearchConfig& config) {
  nlohmann::ordered_json edits = nlohmann::ordered_json::array();
  for (const auto& e : result.edit_log) edits.push_back(edit_to_json(e));
  return {{"seed", config.seed},
          {"max_generations", config.max_generations},
          {"patience", config.patience},
          {"pool", config.pool_cap},
          {"initial_errors", result.initial_errors},
          {"final_errors", result.final_errors},
          {"fully_migrated", result.fully_migrated},
          {"generations_used", result.generations_used},
          {"solutions_generated", result.solutions_generated},
          {"edits", edits},
          {"remaining_errors", errors_to_json(result.final_error_list)}};
}

nlohmann::ordered_json report_to_json(const Report& report,
                                      const std::vector<TaskOutcome>& outcomes,
                                      const SearchConfig& config,
                                      const std::string& suite_name) {
  nlohmann::ordered_json tasks = nlohmann::ordered_json::array();
  for (const auto& o : outcomes) {
    nlohmann::ordered_json task = {{"name", o.name},
                                   {"class", to_string(o.classification)},
                                   {"initial_errors", o.initial_errors},
                                   {"final_errors", o.final_errors},
                                   {"generations_used", o.generations_used},
                                   {"solutions_generated", o.solutions_generated}};
    if (o.golden_ok) task["golden_ok"] = *o.golden_ok;
    tasks.push_back(std::move(task));
  }
  nlohmann::ordered_json totals = {{"total", report.total},
                                   {"clean", report.clean},
                                   {"reduced", report.reduced},
                                   {"unchanged", report.unchanged},
                                   {"increased", report.increased},
                                   {"migrated", report.migrated}};
  totals["percent"] = report.percent ? nlohmann::ordered_json(*report.percent)
                                     : nlohmann::ordered_json(nullptr);
  totals["avg_errors_reduced"] =
      report.avg_errors_reduced ? nlohmann::ordered_json(*report.avg_errors_reduced)
                                : nlohmann::ordered_json(nullptr);
  totals["avg_solutions"] = report.avg_solutions
                                ? nlohmann::ordered_json(*report.avg_solutions)
                                : nlohmann::ordered_json(nullptr);
  return {{"suite", suite_name},
          {"seed", config.seed},
          {"max_generations", config.max_generations},
          {"patience", config.patience},
          {"pool", config.pool_cap},
          {"totals", totals},
          {"tasks", tasks}};
}

std::string report_to_text(const Report& report,
                           const std::vector<TaskOutcome>& outcomes,
                           const std::string& suite_name) {
  std::ostringstream out;
  out << "suite: " << suite_name << "\n";
  out << "# 'reduced' (-) counts tasks with 0 < final < initial; 'migrated' (m)\n";
  out << "# is final == 0 and reported separately, so the two are disjoint.\n";
  out << std::left << std::setw(32) << "task" << std::setw(11) << "class"
      << std::right << std::setw(8) << "initial" << std::setw(7) << "final"
      << std::setw(6) << "gens" << std::setw(11) << "solutions"
      << "  golden\n";
  for (const auto& o : outcomes) {
    out << std::left << std::setw(32) << o.name << std::setw(11)
        << to_string(o.classification) << std::right << std::setw(8)
        << o.initial_errors << std::setw(7) << o.final_errors << std::setw(6)
        << o.generations_used << std::setw(11) << o.solutions_generated << "  "
        << (o.golden_ok ? (*o.golden_ok ? "ok" : "MISMATCH") : "-") << "\n";
  }
  out << "total " << report.total << "  clean " << report.clean << "  -(reduced) "
      << report.reduced << "  s(unchanged) " << report.unchanged << "  +(increased) "
      << report.increased << "  m(migrated) " << report.migrated;
  out << "  % " << (report.percent ? format_1dp(*report.percent) : "n/a");
  out << "  error "
      << (report.avg_errors_reduced ? format_1dp(*report.avg_errors_reduced) : "n/a");
  out << "  solution "
      << (report.avg_solutions ? format_1dp(*report.avg_solutions) : "n/a") << "\n";
  return out.str();
}

void write_migration_outputs(const Program& original, const MigrationResult& result,
                             const SearchConfig& config, const std::string& out_dir) {
  fs::path out(out_dir);
  fs::create_directories(out);
  std::string diff;
  for (const auto& file : result.final_program.files) {
    write_file(out / "client" / file.path, file.source.text());
    const ProgramFile* before = original.find(file.path);
    if (before) {
      diff += unified_diff(file.path, before->source.text(), file.source.text());
    }
  }
  write_file(out / "migration.diff", diff);
  write_file(out / "migration_log.json", migration_log_json(result, config).dump(2) + "\n");
}

}  // namespace miniup
