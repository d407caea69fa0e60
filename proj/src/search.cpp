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

#include "miniup/search.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <set>

namespace miniup {

int fitness(const Program& program, const ApiSymbolTable& lib) {
  return static_cast<int>(check(program.units(), lib).size());
}

std::string dedup_key(const Candidate& candidate) {
  std::vector<std::string> parts;
  for (const CompileError& e : candidate.errors()) {
    parts.push_back(std::string(to_string(e.kind)) + "|" + e.subject + "|" +
                    e.span.to_string());
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) {
    out += p;
    out += ";";
  }
  return out;
}

namespace {

/// The MA3 accessor-to-field direction runs as a fallback when both MA1
/// and MA2 produced nothing for an undefined method.
std::vector<Candidate> apply_picked(OperatorId op, const Candidate& parent,
                                    const CompileError& error,
                                    const OperatorContext& ctx,
                                    std::set<OperatorId>& returned_empty) {
  std::vector<Candidate> out = apply_operator(op, parent, error, ctx);
  if (!out.empty()) return out;
  returned_empty.insert(op);
  if (error.kind == ErrorKind::UndefinedMethod &&
      returned_empty.count(OperatorId::MA1) && returned_empty.count(OperatorId::MA2)) {
    return apply_ma3(parent, error, ctx);
  }
  return out;
}

}  // namespace

MigrationResult migrate(const MigrationInput& input, const SearchConfig& config) {
  if (!input.new_lib || !input.mappings) {
    throw TaskSetupError("migration input is missing a library table or mappings");
  }
  if (config.max_generations <= 0 || config.patience <= 0 || config.pool_cap <= 0) {
    throw TaskSetupError("search budgets must be positive");
  }
  const ApiSymbolTable& lib = *input.new_lib;
  OperatorContext boot;
  boot.check = [&lib](const Program& p) { return check_program(p.units(), lib); };
  Candidate initial = initial_candidate(input.client, boot);

  MigrationResult result;
  result.initial_errors = initial.fitness();

  std::vector<Candidate> pool;
  pool.push_back(initial);
  Candidate best = std::move(initial);

  std::mt19937_64 rng(config.seed);
  int nobetter = 0;
  int generation = 0;

  while (best.fitness() > 0 && nobetter < config.patience &&
         generation < config.max_generations) {
    std::vector<Candidate> nextpool;
    for (const Candidate& parent : pool) {
      ParentScope scope(parent, lib, *input.mappings);
      for (const CompileError& error : parent.errors()) {
        std::vector<OperatorId> ops = route(error.kind);
        if (config.operator_whitelist) {
          std::vector<OperatorId> filtered;
          for (OperatorId op : ops) {
            if (config.operator_whitelist->count(op)) filtered.push_back(op);
          }
          ops = std::move(filtered);
        }
        if (ops.empty()) continue;
        // Visiting a random permutation and keeping the first operator
        // that applies picks uniformly among the applicable ones.
        for (std::size_t i = ops.size(); i > 1; --i) {
          std::size_t j = static_cast<std::size_t>(rng() % i);
          std::swap(ops[i - 1], ops[j]);
        }
        std::set<OperatorId> returned_empty;
        for (OperatorId op : ops) {
          std::vector<Candidate> produced =
              apply_picked(op, parent, error, scope.context(), returned_empty);
          if (produced.empty()) continue;
          result.solutions_generated += static_cast<long>(produced.size());
          for (Candidate& c : produced) {
            if (!c.edits.empty()) c.edits.back().generation = generation + 1;
            nextpool.push_back(std::move(c));
          }
          break;  // one operator per error per candidate per generation
        }
      }
    }
    // duplicates: identical compilation errors
    std::vector<Candidate> unique;
    std::set<std::string> seen;
    for (Candidate& c : nextpool) {
      if (seen.insert(dedup_key(c)).second) unique.push_back(std::move(c));
    }
    if (!unique.empty()) {
      std::size_t best_index = 0;
      for (std::size_t i = 1; i < unique.size(); ++i) {
        if (unique[i].fitness() < unique[best_index].fitness()) best_index = i;
      }
      if (unique[best_index].fitness() < best.fitness()) {
        best = unique[best_index];
        nobetter = 0;
      } else {
        ++nobetter;
      }
    } else {
      ++nobetter;
    }
    std::stable_sort(unique.begin(), unique.end(),
                     [](const Candidate& a, const Candidate& b) {
                       return a.fitness() < b.fitness();
                     });
    if (unique.size() > static_cast<std::size_t>(config.pool_cap)) {
      unique.resize(static_cast<std::size_t>(config.pool_cap));
    }
#ifndef NDEBUG
    {
      std::set<std::string> keys;
      for (const Candidate& c : unique) assert(keys.insert(dedup_key(c)).second);
    }
#endif
    pool = std::move(unique);
    ++generation;
  }

  result.generations_used = generation;
  result.final_errors = best.fitness();
  result.fully_migrated = result.final_errors == 0;
  result.final_error_list = best.errors();
  result.edit_log = best.edits;
  result.final_program = std::move(best.program);
  return result;
}

}  // namespace miniup
