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

#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "miniup/distance.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string corpus() { return MINIUP_CORPUS_DIR; }
std::string schemas() { return MINIUP_SCHEMA_DIR; }

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
  fs::path out = fs::temp_directory_path() / "miniup_cli_stdout.txt";
  std::string cmd =
      std::string(MINIUP_CLI_PATH) + " " + args + " > " + out.string() + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out);
  std::ostringstream buf;
  buf << in.rdbuf();
  result.stdout_text = buf.str();
  return result;
}

/// Just enough JSON Schema to check the shipped documents: type unions,
/// required, properties, items, enum.
bool validates(const json& value, const json& schema, std::string* why) {
  if (schema.contains("type")) {
    auto matches = [&](const std::string& type) {
      if (type == "object") return value.is_object();
      if (type == "array") return value.is_array();
      if (type == "string") return value.is_string();
      if (type == "integer") return value.is_number_integer();
      if (type == "number") return value.is_number();
      if (type == "boolean") return value.is_boolean();
      if (type == "null") return value.is_null();
      return false;
    };
    bool ok = false;
    if (schema["type"].is_array()) {
      for (const auto& t : schema["type"]) ok = ok || matches(t.get<std::string>());
    } else {
      ok = matches(schema["type"].get<std::string>());
    }
    if (!ok) {
      *why = "type mismatch at " + value.dump().substr(0, 60);
      return false;
    }
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& candidate : schema["enum"]) ok = ok || candidate == value;
    if (!ok) {
      *why = "enum mismatch: " + value.dump();
      return false;
    }
  }
  if (value.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema["required"]) {
        if (!value.contains(key.get<std::string>())) {
          *why = "missing required key " + key.get<std::string>();
          return false;
        }
      }
    }
    if (schema.contains("properties")) {
      for (const auto& [key, sub] : schema["properties"].items()) {
        if (value.contains(key) && !validates(value.at(key), sub, why)) return false;
      }
    }
  }
  if (value.is_array() && schema.contains("items")) {
    for (const auto& item : value) {
      if (!validates(item, schema["items"], why)) return false;
    }
  }
  return true;
}

void check_against_schema(const std::string& payload, const std::string& schema_file) {
  json value = json::parse(payload);
  json schema = json::parse(std::ifstream(schemas() + "/" + schema_file));
  std::string why;
  CHECK_MESSAGE(validates(value, schema, &why), schema_file << ": " << why);
}

}  // namespace

TEST_CASE("check: clean client exits 0 with an empty error list") {
  auto clean = run_cli("check --client " + corpus() + "/clean_compatible/client" +
                       " --lib " + corpus() + "/clean_compatible/libs/v2 --quiet");
  CHECK(clean.exit_code == 0);
  CHECK(clean.stdout_text.empty());

  auto dirty = run_cli("check --client " + corpus() + "/ma01_type_rename/client" +
                       " --lib " + corpus() + "/ma01_type_rename/libs/v2 --quiet");
  CHECK(dirty.exit_code == 2);
  CHECK(dirty.stdout_text.find("gate.ml0:3:1 UndefinedType auth.IAuthority") !=
        std::string::npos);

  auto as_json = run_cli("check --client " + corpus() + "/ma01_type_rename/client" +
                         " --lib " + corpus() + "/ma01_type_rename/libs/v2 --json");
  check_against_schema(as_json.stdout_text, "check.schema.json");
}

TEST_CASE("mine: the fixture mapping file matches its golden bytes") {
  fs::path out = fs::temp_directory_path() / "miniup_cli_mine.tsv";
  fs::remove(out);
  auto result = run_cli("mine --old " + corpus() + "/ma01_type_rename/libs/v1" +
                        " --new " + corpus() + "/ma01_type_rename/libs/v2 --out " +
                        out.string() + " --quiet");
  CHECK(result.exit_code == 0);
  // distances frozen: both full names differ by the oracle-checked value 3
  CHECK(miniup::levenshtein("auth.IAuthority", "auth.IAuthorizer") == 3);
  std::ifstream in(out);
  std::ostringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() ==
        "type\tauth.IAuthority\tauth.IAuthorizer\t3\n"
        "method\tauth.IAuthority.grant(string)\tauth.IAuthorizer.grant(string)\t3\n");

  auto as_json = run_cli("mine --old " + corpus() + "/ma01_type_rename/libs/v1" +
                         " --new " + corpus() + "/ma01_type_rename/libs/v2 --json");
  check_against_schema(as_json.stdout_text, "mine.schema.json");
}

TEST_CASE("migrate: composite fixture exits 0 and writes the full output set") {
  fs::path out = fs::temp_directory_path() / "miniup_cli_migrate";
  fs::remove_all(out);
  std::string base = corpus() + "/composite_auth_upgrade";
  auto result = run_cli("migrate --client " + base + "/client --old-lib " + base +
                        "/libs/v1 --new-lib " + base + "/libs/v2 --out " +
                        out.string() + " --json");
  CHECK(result.exit_code == 0);
  check_against_schema(result.stdout_text, "migrate.schema.json");
  json log = json::parse(result.stdout_text);
  CHECK(log["fully_migrated"] == true);
  CHECK(log["edits"].size() >= 3);
  CHECK(fs::exists(out / "client/authorizer.ml0"));
  CHECK(fs::exists(out / "migration.diff"));
  CHECK(fs::exists(out / "migration_log.json"));
  // inputs stay untouched: the client directory still has the old text
  std::ifstream original(base + "/client/authorizer.ml0");
  std::ostringstream buf;
  buf << original.rdbuf();
  CHECK(buf.str().find("IAuthority") != std::string::npos);
}

TEST_CASE("migrate: a partial migration exits 2 but still writes outputs") {
  fs::path out = fs::temp_directory_path() / "miniup_cli_partial";
  fs::remove_all(out);
  std::string base = corpus() + "/unsolvable_hidden_ctor";
  auto result = run_cli("migrate --client " + base + "/client --old-lib " + base +
                        "/libs/v1 --new-lib " + base + "/libs/v2 --out " +
                        out.string() + " --quiet");
  CHECK(result.exit_code == 2);
  CHECK(fs::exists(out / "migration_log.json"));
}

TEST_CASE("migrate: a supplied mapping file short-circuits mining") {
  fs::path mapping = fs::temp_directory_path() / "miniup_cli_supplied.tsv";
  std::ofstream(mapping) << "type\tauth.IAuthority\tauth.IAuthorizer\t3\n";
  fs::path out = fs::temp_directory_path() / "miniup_cli_supplied_out";
  fs::remove_all(out);
  std::string base = corpus() + "/ma01_type_rename";
  auto result = run_cli("migrate --client " + base + "/client --old-lib " + base +
                        "/libs/v1 --new-lib " + base + "/libs/v2 --mappings " +
                        mapping.string() + " --out " + out.string() + " --quiet");
  CHECK(result.exit_code == 0);
}

TEST_CASE("bench: report.json validates against the shipped schema") {
  fs::path out = fs::temp_directory_path() / "miniup_cli_bench";
  fs::remove_all(out);
  auto result =
      run_cli("bench --corpus " + corpus() + " --out " + out.string() + " --json");
  CHECK(result.exit_code == 0);
  check_against_schema(result.stdout_text, "report.schema.json");
  json report = json::parse(result.stdout_text);
  CHECK(report["totals"]["increased"] == 0);
}

TEST_CASE("usage problems exit 1; --version exits 0") {
  CHECK(run_cli("check --client only").exit_code == 1);
  CHECK(run_cli("--version").exit_code == 0);
  CHECK(run_cli("bogus").exit_code == 1);
  CHECK(run_cli("mine --old nowhere --new nowhere").exit_code == 1);
}
