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

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "miniup/harness.hpp"
#include "miniup/parser.hpp"

namespace fs = std::filesystem;
using namespace miniup;

namespace {

constexpr const char* kVersion = "miniup 0.1.0 (corpus format 1)";

struct GlobalFlags {
  bool json = false;
  bool quiet = false;
};

void write_text_file(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << text;
}

std::optional<std::set<OperatorId>> parse_only(const std::string& only) {
  if (only.empty()) return std::nullopt;
  std::set<OperatorId> out;
  std::stringstream in(only);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (!part.empty()) out.insert(operator_id_from_string(part));
  }
  return out;
}

int run_check(const std::string& client_dir, const std::string& lib_dir,
              const GlobalFlags& flags) {
  Program client = load_program(client_dir);
  Program lib_units = load_program(lib_dir);
  ApiSymbolTable lib = build_symbol_table(lib_units.units(), "lib");
  std::vector<CompileError> errors = check(client.units(), lib);
  if (flags.json) {
    std::cout << errors_to_json(errors).dump(2) << "\n";
  } else {
    for (const auto& e : errors) {
      std::cout << e.span.file << ":" << e.span.start_line << ":" << e.span.start_col
                << " " << to_string(e.kind) << " " << e.subject << " " << e.message
                << "\n";
    }
    if (!flags.quiet) {
      std::cerr << errors.size() << " error(s)\n";
    }
  }
  return errors.empty() ? 0 : 2;
}

int run_mine(const std::string& old_dir, const std::string& new_dir,
             const std::string& out_file, const GlobalFlags& flags) {
  Program old_units = load_program(old_dir);
  Program new_units = load_program(new_dir);
  ApiSymbolTable old_lib = build_symbol_table(old_units.units(), "v1");
  ApiSymbolTable new_lib = build_symbol_table(new_units.units(), "v2");
  MappingTable table = mine(old_lib, new_lib);
  std::string tsv = to_tsv(table);
  if (!out_file.empty()) {
    write_text_file(out_file, tsv);
  }
  if (flags.json) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const Mapping* m : table.all()) {
      out.push_back({{"kind", to_string(m->kind)},
                     {"old", m->old_element},
                     {"new", m->new_element},
                     {"distance", m->distance}});
    }
    std::cout << out.dump(2) << "\n";
  } else if (out_file.empty()) {
    std::cout << tsv;
  } else if (!flags.quiet) {
    std::cerr << table.size() << " mapping(s) written to " << out_file << "\n";
  }
  return 0;
}

int run_migrate(const std::string& client_dir, const std::string& old_dir,
                const std::string& new_dir, const std::string& mappings_file,
                const std::string& out_dir, const SearchConfig& config,
                const GlobalFlags& flags) {
  Program client = load_program(client_dir);
  Program old_units = load_program(old_dir);
  Program new_units = load_program(new_dir);
  ApiSymbolTable old_lib = build_symbol_table(old_units.units(), "v1");
  ApiSymbolTable new_lib = build_symbol_table(new_units.units(), "v2");
  MappingTable mappings;
  if (!mappings_file.empty()) {
    std::ifstream in(mappings_file, std::ios::binary);
    if (!in) throw TaskSetupError("cannot read mappings file " + mappings_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    mappings = mapping_table_from_tsv(buf.str());
  } else {
    mappings = mine(old_lib, new_lib);
  }
  MigrationInput input;
  input.client = client;
  input.new_lib = &new_lib;
  input.mappings = &mappings;
  MigrationResult result = migrate(input, config);
  write_migration_outputs(client, result, config, out_dir);
  if (flags.json) {
    std::cout << migration_log_json(result, config).dump(2) << "\n";
  } else if (!flags.quiet) {
    std::cerr << "errors " << result.initial_errors << " -> " << result.final_errors
              << " in " << result.generations_used << " generation(s), "
              << result.solutions_generated << " candidate(s); outputs in "
              << out_dir << "\n";
  }
  return result.final_errors == 0 ? 0 : 2;
}

int run_bench(const std::string& corpus_dir, const std::string& out_dir,
              const SearchConfig& config, int jobs, const GlobalFlags& flags) {
  std::vector<MigrationTask> tasks = load_suite(corpus_dir);
  std::vector<TaskOutcome> outcomes(tasks.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      outcomes[i] = run_task(tasks[i], config);
    }
  } else {
    std::vector<std::future<TaskOutcome>> futures;
    futures.reserve(tasks.size());
    std::size_t next = 0;
    while (next < tasks.size() || !futures.empty()) {
      while (next < tasks.size() &&
             futures.size() < static_cast<std::size_t>(jobs)) {
        const MigrationTask* task = &tasks[next++];
        futures.push_back(std::async(std::launch::async, [task, &config] {
          return run_task(*task, config);
        }));
      }
      futures.front().wait();
      TaskOutcome outcome = futures.front().get();
      futures.erase(futures.begin());
      for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (tasks[i].name == outcome.name) outcomes[i] = std::move(outcome);
      }
    }
  }
  Report report = aggregate(outcomes);
  std::string suite = fs::path(corpus_dir).filename().string();
  write_text_file(fs::path(out_dir) / "report.json",
                  report_to_json(report, outcomes, config, suite).dump(2) + "\n");
  write_text_file(fs::path(out_dir) / "report.txt",
                  report_to_text(report, outcomes, suite));
  for (const auto& outcome : outcomes) {
    Program original = load_program(corpus_dir + "/" + outcome.name + "/client");
    write_migration_outputs(original, outcome.result, config,
                            (fs::path(out_dir) / "tasks" / outcome.name).string());
  }
  if (flags.json) {
    std::cout << report_to_json(report, outcomes, config, suite).dump(2) << "\n";
  } else if (!flags.quiet) {
    std::cout << report_to_text(report, outcomes, suite);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"miniup: compiler-directed API migration for MiniLang projects"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalFlags flags;
  app.add_flag("--json", flags.json, "machine-readable output on stdout");
  app.add_flag("--quiet", flags.quiet, "suppress progress messages");

  SearchConfig config;
  int jobs = 1;

  auto* check_cmd = app.add_subcommand("check", "type-check a client against a library");
  std::string client_dir, lib_dir;
  check_cmd->add_option("--client", client_dir, "client source directory")->required();
  check_cmd->add_option("--lib", lib_dir, "library declaration directory")->required();

  auto* mine_cmd = app.add_subcommand("mine", "mine element mappings between versions");
  std::string old_dir, new_dir, mine_out;
  mine_cmd->add_option("--old", old_dir, "old library directory")->required();
  mine_cmd->add_option("--new", new_dir, "new library directory")->required();
  mine_cmd->add_option("--out", mine_out, "mapping file to write (TSV)");

  auto* migrate_cmd = app.add_subcommand("migrate", "search for a migrated client");
  std::string m_client, m_old, m_new, m_mappings, m_out, m_only;
  migrate_cmd->add_option("--client", m_client)->required();
  migrate_cmd->add_option("--old-lib", m_old)->required();
  migrate_cmd->add_option("--new-lib", m_new)->required();
  migrate_cmd->add_option("--mappings", m_mappings, "pre-mined mapping file");
  migrate_cmd->add_option("--seed", config.seed, "search seed");
  migrate_cmd->add_option("--max-generations", config.max_generations);
  migrate_cmd->add_option("--patience", config.patience);
  migrate_cmd->add_option("--pool", config.pool_cap);
  migrate_cmd->add_option("--only", m_only, "comma-separated operator whitelist");
  migrate_cmd->add_option("--jobs", jobs, "parallel evaluation bound");
  migrate_cmd->add_option("--out", m_out, "output directory")->required();

  auto* bench_cmd = app.add_subcommand("bench", "run a corpus of migration tasks");
  std::string b_corpus, b_out, b_only;
  bench_cmd->add_option("--corpus", b_corpus)->required();
  bench_cmd->add_option("--out", b_out)->required();
  bench_cmd->add_option("--seed", config.seed);
  bench_cmd->add_option("--max-generations", config.max_generations);
  bench_cmd->add_option("--patience", config.patience);
  bench_cmd->add_option("--pool", config.pool_cap);
  bench_cmd->add_option("--only", b_only, "comma-separated operator whitelist");
  bench_cmd->add_option("--jobs", jobs, "tasks evaluated in parallel");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // usage problems exit 1; --help and --version exit 0
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (check_cmd->parsed()) return run_check(client_dir, lib_dir, flags);
    if (mine_cmd->parsed()) return run_mine(old_dir, new_dir, mine_out, flags);
    if (migrate_cmd->parsed()) {
      config.operator_whitelist = parse_only(m_only);
      return run_migrate(m_client, m_old, m_new, m_mappings, m_out, config, flags);
    }
    if (bench_cmd->parsed()) {
      config.operator_whitelist = parse_only(b_only);
      return run_bench(b_corpus, b_out, config, jobs, flags);
    }
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
