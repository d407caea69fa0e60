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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "miniup/assignment.hpp"
#include "miniup/distance.hpp"
#include "miniup/harness.hpp"
#include "miniup/parser.hpp"

namespace py = pybind11;
using namespace miniup;

namespace {

py::object json_to_py(const nlohmann::ordered_json& value) {
  switch (value.type()) {
    case nlohmann::ordered_json::value_t::null:
      return py::none();
    case nlohmann::ordered_json::value_t::boolean:
      return py::bool_(value.get<bool>());
    case nlohmann::ordered_json::value_t::number_integer:
      return py::int_(value.get<std::int64_t>());
    case nlohmann::ordered_json::value_t::number_unsigned:
      return py::int_(value.get<std::uint64_t>());
    case nlohmann::ordered_json::value_t::number_float:
      return py::float_(value.get<double>());
    case nlohmann::ordered_json::value_t::string:
      return py::str(value.get<std::string>());
    case nlohmann::ordered_json::value_t::array: {
      py::list out;
      for (const auto& item : value) out.append(json_to_py(item));
      return out;
    }
    case nlohmann::ordered_json::value_t::object: {
      py::dict out;
      for (const auto& [key, item] : value.items()) {
        out[py::str(key)] = json_to_py(item);
      }
      return out;
    }
    default:
      return py::none();
  }
}

ApiSymbolTable load_table(const std::string& dir, const std::string& label) {
  Program units = load_program(dir);
  return build_symbol_table(units.units(), label);
}

SearchConfig make_config(std::uint64_t seed, int max_generations, int patience,
                         int pool, const std::optional<std::vector<std::string>>& only) {
  SearchConfig config;
  config.seed = seed;
  config.max_generations = max_generations;
  config.patience = patience;
  config.pool_cap = pool;
  if (only) {
    std::set<OperatorId> whitelist;
    for (const auto& name : *only) whitelist.insert(operator_id_from_string(name));
    config.operator_whitelist = std::move(whitelist);
  }
  return config;
}

py::object py_check(const std::string& client_dir, const std::string& lib_dir) {
  Program client = load_program(client_dir);
  ApiSymbolTable lib = load_table(lib_dir, "lib");
  return json_to_py(errors_to_json(check(client.units(), lib)));
}

py::object py_mine(const std::string& old_dir, const std::string& new_dir) {
  ApiSymbolTable old_lib = load_table(old_dir, "v1");
  ApiSymbolTable new_lib = load_table(new_dir, "v2");
  MappingTable table = mine(old_lib, new_lib);
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const Mapping* m : table.all()) {
    out.push_back({{"kind", to_string(m->kind)},
                   {"old", m->old_element},
                   {"new", m->new_element},
                   {"distance", m->distance}});
  }
  return json_to_py(out);
}

py::object py_migrate(const std::string& client_dir, const std::string& old_lib_dir,
                      const std::string& new_lib_dir,
                      const std::optional<std::string>& out_dir, std::uint64_t seed,
                      int max_generations, int patience, int pool,
                      const std::optional<std::vector<std::string>>& only) {
  Program client = load_program(client_dir);
  ApiSymbolTable old_lib = load_table(old_lib_dir, "v1");
  ApiSymbolTable new_lib = load_table(new_lib_dir, "v2");
  MappingTable mappings = mine(old_lib, new_lib);
  SearchConfig config = make_config(seed, max_generations, patience, pool, only);
  MigrationInput input;
  input.client = client;
  input.new_lib = &new_lib;
  input.mappings = &mappings;
  MigrationResult result = migrate(input, config);
  if (out_dir) write_migration_outputs(client, result, config, *out_dir);
  nlohmann::ordered_json log = migration_log_json(result, config);
  nlohmann::ordered_json files = nlohmann::ordered_json::object();
  for (const auto& file : result.final_program.files) {
    files[file.path] = file.source.text();
  }
  log["files"] = files;
  return json_to_py(log);
}

py::object py_run_suite(const std::string& corpus_dir, std::uint64_t seed,
                        int max_generations, int patience, int pool,
                        const std::optional<std::vector<std::string>>& only) {
  SearchConfig config = make_config(seed, max_generations, patience, pool, only);
  std::vector<TaskOutcome> outcomes;
  for (const auto& task : load_suite(corpus_dir)) {
    outcomes.push_back(run_task(task, config));
  }
  return json_to_py(report_to_json(aggregate(outcomes), outcomes, config,
                                   std::filesystem::path(corpus_dir).filename().string()));
}

py::dict py_hungarian(const std::vector<std::vector<std::int64_t>>& cost) {
  AssignmentResult result = hungarian(cost);
  py::list pairs;
  for (auto [row, col] : result.pairs) pairs.append(py::make_tuple(row, col));
  py::dict out;
  out["pairs"] = pairs;
  out["total_cost"] = result.total_cost;
  return out;
}

std::string py_reprint(const std::string& source, const std::string& file) {
  return print(parse(source, file));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "miniup: compiler-directed API migration for MiniLang projects";

  m.def("levenshtein",
        [](const std::string& a, const std::string& b) { return levenshtein(a, b); },
        py::arg("a"), py::arg("b"),
        "Unit-cost edit distance between two strings.");

  m.def("hungarian", &py_hungarian, py::arg("cost"),
        "Minimum-cost assignment; returns {'pairs': [(row, col)...], 'total_cost': n}.");

  m.def("check", &py_check, py::arg("client_dir"), py::arg("lib_dir"),
        "Compile a client directory against a library directory; returns the "
        "classified error list.");

  m.def("mine", &py_mine, py::arg("old_dir"), py::arg("new_dir"),
        "Mine one-to-one element mappings between two library versions.");

  m.def("migrate", &py_migrate, py::arg("client_dir"), py::arg("old_lib_dir"),
        py::arg("new_lib_dir"), py::arg("out_dir") = py::none(),
        py::arg("seed") = kDefaultSeed, py::arg("max_generations") = 100,
        py::arg("patience") = 10, py::arg("pool") = 10, py::arg("only") = py::none(),
        "Run the migration search; returns the migration log plus final sources.");

  m.def("run_suite", &py_run_suite, py::arg("corpus_dir"),
        py::arg("seed") = kDefaultSeed, py::arg("max_generations") = 100,
        py::arg("patience") = 10, py::arg("pool") = 10, py::arg("only") = py::none(),
        "Run every task in a corpus directory and return the aggregate report.");

  m.def("reprint", &py_reprint, py::arg("source"), py::arg("file") = "input.ml0",
        "Parse a MiniLang source and print it in canonical layout.");

  m.attr("__version__") = "0.1.0";
  m.attr("DEFAULT_SEED") = kDefaultSeed;
}
