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

#ifndef MINIUP_ASSIGNMENT_HPP
#define MINIUP_ASSIGNMENT_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace miniup {

struct AssignmentResult {
  /// Matched (row, col) pairs, sorted by row; size is min(n, m).
  std::vector<std::pair<int, int>> pairs;
  std::int64_t total_cost = 0;
};

/// Minimum-cost assignment for an n x m matrix of non-negative costs.
/// Rectangular inputs are padded with dummy rows/columns of cost
/// 1 + max real cost; dummy pairs are excluded from the result. Among
/// equal-cost optima the lexicographically smallest pair list wins.
AssignmentResult hungarian(const std::vector<std::vector<std::int64_t>>& cost);

}  // namespace miniup

#endif  // MINIUP_ASSIGNMENT_HPP
