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

#ifndef MINIUP_OPERATORS_HPP
#define MINIUP_OPERATORS_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "miniup/checker.hpp"
#include "miniup/mapping.hpp"
#include "miniup/program.hpp"

namespace miniup {

enum class OperatorId {
  MA1, MA2, MA3, MA4, MA5, MA6, MA7, MA8, MA9, MA10, MA11, MA12, MA13,
};

const char* to_string(OperatorId id);
OperatorId operator_id_from_string(const std::string& name);

/// One applied rewrite. Multi-site rewrites (a type rename, an import
/// reshuffle) target the whole file so that replaying the edit list from
/// the initial program reproduces the candidate exactly.
struct EditAction {
  OperatorId op = OperatorId::MA1;
  Span target;
  std::string description;
  std::string before;
  std::string after;
  int generation = 0;
  int fitness_after = -1;
};

/// A rewritten client program, the edits that produced it, and its cached
/// diagnostics. Fitness is the number of compilation errors.
struct Candidate {
  Program program;
  std::vector<EditAction> edits;
  std::shared_ptr<const CheckResult> analysis;

  const std::vector<CompileError>& errors() const { return analysis->errors; }
  int fitness() const { return static_cast<int>(analysis->errors.size()); }
};

/// Everything an operator may consult: the new library, mined mappings, a
/// resolution view over library plus the parent's client declarations,
/// the parent's expression/access tables, and a checker callback for
/// candidate evaluation.
struct OperatorContext {
  const ApiSymbolTable* new_lib = nullptr;
  const MappingTable* mappings = nullptr;
  const TypeUniverse* universe = nullptr;
  const CheckResult* analysis = nullptr;
  std::function<CheckResult(const Program&)> check;
};

/// Owns the per-parent state an OperatorContext points into.
class ParentScope {
 public:
  ParentScope(const Candidate& parent, const ApiSymbolTable& new_lib,
              const MappingTable& mappings);

  const OperatorContext& context() const { return context_; }

 private:
  ApiSymbolTable client_table_;
  TypeUniverse universe_;
  OperatorContext context_;
};

/// Table I routing: error kind to the ordered list of applicable
/// operator families.
std::vector<OperatorId> route(ErrorKind kind);
std::vector<OperatorId> route(const CompileError& error);

/// Uniform application entry point: returns [] when the error is not in
/// the candidate's current diagnostics or the operator does not target
/// this error kind; otherwise dispatches to the operator.
std::vector<Candidate> apply_operator(OperatorId op, const Candidate& parent,
                                      const CompileError& error,
                                      const OperatorContext& ctx);

std::vector<Candidate> apply_ma1(const Candidate& parent, const CompileError& error,
                                 const OperatorContext& ctx);
std::vector<Candidate> apply_ma2(const Candidate& parent, const CompileError& error,
                                 const OperatorContext& ctx);
std::vector<Candidate> apply_ma3(const Candidate& parent, const CompileError& error,
                                 const OperatorContext& ctx);
std::vector<Candidate> apply_ma4(const Candidate& parent, const CompileError& error,
                                 const OperatorContext& ctx);
std::vector<Candidate> apply_ma5(const Candidate& parent, const CompileError& error,
                                 const OperatorContext& ctx);
std::vector<Candidate> apply_ma6(const Candidate& parent, const CompileError& error,
                                 const OperatorContext& ctx);
std::vector<Candidate> apply_ma7(const Candidate& parent, const CompileError& error,
                                 const OperatorContext& ctx);
std::vector<Candidate> apply_ma8(const Candidate& parent, const CompileError& error,
                                 const OperatorContext& ctx);
std::vector<Candidate> apply_ma9(const Candidate& parent, const CompileError& error,
                                 const OperatorContext& ctx);
std::vector<Candidate> apply_ma10(const Candidate& parent, const CompileError& error,
                                  const OperatorContext& ctx);
std::vector<Candidate> apply_ma11(const Candidate& parent, const CompileError& error,
                                  const OperatorContext& ctx);
std::vector<Candidate> apply_ma12(const Candidate& parent, const CompileError& error,
                                  const OperatorContext& ctx);
std::vector<Candidate> apply_ma13(const Candidate& parent, const CompileError& error,
                                  const OperatorContext& ctx);

/// Builds a checked candidate from an initial program (no edits).
Candidate initial_candidate(Program program, const OperatorContext& ctx);

}  // namespace miniup

#endif  // MINIUP_OPERATORS_HPP
