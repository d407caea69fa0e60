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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "miniup/assignment.hpp"
#include "miniup/distance.hpp"
#include "miniup/harness.hpp"

using namespace miniup;
namespace fs = std::filesystem;

namespace {

const char* kOperatorTasks[] = {
    "ma01_type_rename",      "ma02_method_moved",     "ma03_field_to_getter",
    "ma04_ctor_to_creator",  "ma05_cast_insertion",   "ma06_param_drop",
    "ma07_static_to_instance", "ma08_member_exploration", "ma09_method_stub",
    "ma10_exception_wrap",   "ma11_call_removal",     "ma12_ambiguous_import",
    "ma13_invisible_field"};

const char* kMultiErrorTasks[] = {"composite_auth_upgrade", "multi_stub_and_getter",
                                  "multi_ctor_and_cast", "multi_exception_and_params"};

std::string corpus_dir() { return MINIUP_CORPUS_DIR; }
std::string cli_path() { return MINIUP_CLI_PATH; }

fs::path fresh_out_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("miniup_acceptance_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing file: " << path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool trees_identical(const fs::path& a, const fs::path& b) {
  std::vector<std::string> rel_a, rel_b;
  for (const auto& e : fs::recursive_directory_iterator(a)) {
    if (e.is_regular_file()) rel_a.push_back(fs::relative(e.path(), a).generic_string());
  }
  for (const auto& e : fs::recursive_directory_iterator(b)) {
    if (e.is_regular_file()) rel_b.push_back(fs::relative(e.path(), b).generic_string());
  }
  std::sort(rel_a.begin(), rel_a.end());
  std::sort(rel_b.begin(), rel_b.end());
  if (rel_a != rel_b) return false;
  for (const auto& rel : rel_a) {
    if (read_file(a / rel) != read_file(b / rel)) return false;
  }
  return true;
}

TaskOutcome run_corpus_task(const std::string& name, const SearchConfig& config) {
  return run_task(load_task(corpus_dir() + "/" + name), config);
}

void pass(int criterion, const std::string& what) {
  std::cout << "[acceptance] criterion " << criterion << " PASS: " << what << "\n";
}

int run_cli(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " > /dev/null 2>&1";
  return std::system(cmd.c_str());
}

std::int64_t brute_force_assignment(const std::vector<std::vector<std::int64_t>>& cost) {
  std::size_t n = cost.size(), m = cost.empty() ? 0 : cost[0].size();
  bool rows_short = n <= m;
  std::size_t k = std::min(n, m), big = std::max(n, m);
  std::vector<std::size_t> idx(big);
  std::iota(idx.begin(), idx.end(), 0);
  std::int64_t best = -1;
  do {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < k; ++i) {
      total += rows_short ? cost[i][idx[i]] : cost[idx[i]][i];
    }
    if (best < 0 || total < best) best = total;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return best;
}

std::int64_t oracle_levenshtein(const std::string& a, const std::string& b) {
  std::vector<std::vector<std::int64_t>> d(a.size() + 1,
                                           std::vector<std::int64_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = static_cast<std::int64_t>(i);
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = static_cast<std::int64_t>(j);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    }
  }
  return d[a.size()][b.size()];
}

}  // namespace

TEST_CASE("criterion 1: per-operator suite migrates 13/13 with matching goldens") {
  for (const char* name : kOperatorTasks) {
    CAPTURE(name);
    auto begin = std::chrono::steady_clock::now();
    TaskOutcome outcome = run_corpus_task(name, SearchConfig{});
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin);
    REQUIRE(outcome.classification == TaskClass::Migrated);
    REQUIRE(outcome.final_errors <= outcome.initial_errors);  // the "+" column stays 0
    REQUIRE(outcome.generations_used <= 5);
    REQUIRE_MESSAGE(elapsed.count() < 1.0, name << " took " << elapsed.count() << "s");
    REQUIRE(outcome.golden_ok.has_value());
    REQUIRE(*outcome.golden_ok);
    // the migrated sources byte-match the hand-written expectation
    fs::path expected = fs::path(corpus_dir()) / name / "expected_client";
    for (const auto& file : outcome.result.final_program.files) {
      REQUIRE(read_file(expected / file.path) == file.source.text());
    }
    // the checker oracle agrees the output compiles
    Program migrated = outcome.result.final_program;
    Program lib_units = load_program(corpus_dir() + "/" + name + "/libs/v2");
    ApiSymbolTable lib = build_symbol_table(lib_units.units(), "v2");
    REQUIRE(check(migrated.units(), lib).empty());
  }
  pass(1, "13/13 per-operator tasks migrated within budget, goldens byte-identical");
}

TEST_CASE("criterion 2: the composite task combines at least three operators") {
  auto begin = std::chrono::steady_clock::now();
  TaskOutcome outcome = run_corpus_task("composite_auth_upgrade", SearchConfig{});
  auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin);
  REQUIRE(outcome.classification == TaskClass::Migrated);
  std::set<std::string> distinct;
  for (const auto& e : outcome.result.edit_log) distinct.insert(to_string(e.op));
  REQUIRE(distinct.size() >= 3);
  REQUIRE(elapsed.count() < 10.0);
  pass(2, "composite task fully migrated with " + std::to_string(distinct.size()) +
              " distinct operators");
}

TEST_CASE("criterion 3: mappings alone fail on every multi-error task") {
  SearchConfig ma1_only;
  ma1_only.operator_whitelist = std::set<OperatorId>{OperatorId::MA1};
  long ma1_solutions = 0;
  long full_solutions = 0;
  for (const char* name : kMultiErrorTasks) {
    CAPTURE(name);
    TaskOutcome restricted = run_corpus_task(name, ma1_only);
    REQUIRE(restricted.classification != TaskClass::Migrated);
    REQUIRE(restricted.final_errors > 0);
    for (const auto& e : restricted.result.edit_log) {
      REQUIRE(e.op == OperatorId::MA1);
    }
    TaskOutcome full = run_corpus_task(name, SearchConfig{});
    REQUIRE(full.classification == TaskClass::Migrated);
    ma1_solutions += restricted.solutions_generated;
    full_solutions += full.solutions_generated;
  }
  REQUIRE(ma1_solutions < full_solutions);
  pass(3, "MA1-only migrated 0/4 multi-error tasks (full set: 4/4), with fewer solutions");
}

TEST_CASE("criterion 4: errors never increase, over the corpus and ten seeds") {
  std::vector<MigrationTask> tasks = load_suite(corpus_dir());
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    int increased = 0;
    for (const auto& task : tasks) {
      SearchConfig config;
      config.seed = seed;
      TaskOutcome outcome = run_task(task, config);
      CAPTURE(task.name);
      CAPTURE(seed);
      REQUIRE(outcome.final_errors <= outcome.initial_errors);
      if (outcome.final_errors > outcome.initial_errors) ++increased;
    }
    REQUIRE(increased == 0);
  }
  pass(4, "final <= initial for 19 tasks x 10 seeds; the '+' column is 0");
}

TEST_CASE("criterion 5: assignment cost equals the exhaustive minimum") {
  auto begin = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20260501);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + rng() % 6;
    std::size_t m = 1 + rng() % 6;
    std::vector<std::vector<std::int64_t>> cost(n, std::vector<std::int64_t>(m));
    for (auto& row : cost) {
      for (auto& c : row) c = static_cast<std::int64_t>(rng() % 30);
    }
    AssignmentResult result = hungarian(cost);
    CAPTURE(trial);
    REQUIRE(result.total_cost == brute_force_assignment(cost));
    REQUIRE(result.pairs.size() == std::min(n, m));
  }
  auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin);
  REQUIRE(elapsed.count() < 1.0);
  pass(5, "100 random assignments (up to 6x6, rectangular included) match brute force");
}

TEST_CASE("criterion 6: edit distance matches the dynamic-programming oracle") {
  std::mt19937_64 rng(20260601);
  auto word = [&rng]() {
    std::size_t len = rng() % 21;
    std::string out;
    for (std::size_t i = 0; i < len; ++i) {
      out.push_back(static_cast<char>('a' + rng() % 9));
    }
    return out;
  };
  for (int trial = 0; trial < 1000; ++trial) {
    std::string a = word(), b = word();
    CAPTURE(trial);
    REQUIRE(levenshtein(a, b) == oracle_levenshtein(a, b));
  }
  for (int trial = 0; trial < 200; ++trial) {
    std::string a = word(), b = word(), c = word();
    REQUIRE(levenshtein(a, a) == 0);
    REQUIRE(levenshtein(a, b) == levenshtein(b, a));
    REQUIRE(levenshtein(a, c) <= levenshtein(a, b) + levenshtein(b, c));
  }
  pass(6, "1000 random pairs match the oracle; identity, symmetry, triangle hold");
}

TEST_CASE("criterion 7: bench output is byte-identical across runs and job counts") {
  fs::path out1 = fresh_out_dir("det1");
  fs::path out2 = fresh_out_dir("det2");
  fs::path out8 = fresh_out_dir("det8");
  std::string base = "bench --corpus " + corpus_dir() + " --quiet --seed 9 --out ";
  REQUIRE(run_cli(base + out1.string() + " --jobs 1") == 0);
  REQUIRE(run_cli(base + out2.string() + " --jobs 1") == 0);
  REQUIRE(run_cli(base + out8.string() + " --jobs 8") == 0);
  REQUIRE(read_file(out1 / "report.json") == read_file(out2 / "report.json"));
  REQUIRE(trees_identical(out1, out2));
  REQUIRE(read_file(out1 / "report.json") == read_file(out8 / "report.json"));
  REQUIRE(trees_identical(out1, out8));
  pass(7, "two seeded runs and --jobs 1 vs --jobs 8 agree byte for byte");
}

TEST_CASE("criterion 8: budgets hold on a task no operator can touch") {
  SearchConfig config;
  TaskOutcome outcome = run_corpus_task("unsolvable_hidden_ctor", config);
  REQUIRE(outcome.classification == TaskClass::Unchanged);
  REQUIRE(outcome.generations_used <= 100);
  REQUIRE(outcome.generations_used == config.patience);
  REQUIRE(outcome.solutions_generated == 0);

  config.patience = 4;
  TaskOutcome shorter = run_corpus_task("unsolvable_hidden_ctor", config);
  REQUIRE(shorter.generations_used == 4);
  pass(8, "unsolvable task stops after exactly `patience` stagnant generations");
}

TEST_CASE("criterion 9: the fixture rewrites reproduce the published fragments") {
  struct Fragment {
    const char* task;
    const char* before;
    const char* after;
  };
  const Fragment fragments[] = {
      {"ma05_cast_insertion", "Permission.ALL", "(PermissionSet) Permission.ALL"},
      {"ma06_param_drop", "new QueryParser(Version.LUCENE_48, TEXT_FIELD, analyzer)",
       "new QueryParser(TEXT_FIELD, analyzer)"},
      {"ma07_static_to_instance", "ByteBufferUtil.bytes(key)", "key.getBytes()"},
      {"ma08_member_exploration", "termDocIndexDirectory",
       "termDocIndexDirectory.toPath()"},
  };
  for (const auto& fragment : fragments) {
    CAPTURE(fragment.task);
    TaskOutcome outcome = run_corpus_task(fragment.task, SearchConfig{});
    REQUIRE(outcome.classification == TaskClass::Migrated);
    bool found = false;
    for (const auto& e : outcome.result.edit_log) {
      if (e.before == fragment.before && e.after == fragment.after) found = true;
    }
    REQUIRE_MESSAGE(found, "fragment not found in the edit log");
  }
  // the stub keeps the todo comment and default return
  TaskOutcome stub = run_corpus_task("ma09_method_stub", SearchConfig{});
  REQUIRE(stub.classification == TaskClass::Migrated);
  std::string stub_text = stub.result.final_program.files[0].source.text();
  REQUIRE(stub_text.find("public bool requireAuthentication() {") != std::string::npos);
  REQUIRE(stub_text.find("//todo: Please implement the method.") != std::string::npos);
  REQUIRE(stub_text.find("return false;") != std::string::npos);
  // the ambiguity fix lands on the explicit import
  TaskOutcome imports = run_corpus_task("ma12_ambiguous_import", SearchConfig{});
  REQUIRE(imports.classification == TaskClass::Migrated);
  std::string import_text = imports.result.final_program.files[0].source.text();
  REQUIRE(import_text.find("import db.ConsistencyLevel;") != std::string::npos);
  REQUIRE(import_text.find("import db.*;") == std::string::npos);
  pass(9, "MA5/MA6/MA7/MA8 fragments, the MA9 stub, and the MA12 import all match");
}
