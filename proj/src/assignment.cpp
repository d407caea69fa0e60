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

#include "miniup/assignment.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace miniup {
namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

/// Classic shortest-augmenting-path solver for a square matrix; returns
/// the minimal total cost only.
std::int64_t solve_square(const std::vector<std::vector<std::int64_t>>& a) {
  int n = static_cast<int>(a.size());
  if (n == 0) return 0;
  std::vector<std::int64_t> u(n + 1), v(n + 1), minv(n + 1);
  std::vector<int> p(n + 1), way(n + 1);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0];
      int j1 = -1;
      std::int64_t delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        std::int64_t cur = a[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::int64_t total = 0;
  for (int j = 1; j <= n; ++j) total += a[p[j] - 1][j - 1];
  return total;
}

/// Cost of the optimal completion once some rows/cols are already fixed.
std::int64_t solve_remaining(const std::vector<std::vector<std::int64_t>>& padded,
                             const std::vector<char>& row_used,
                             const std::vector<char>& col_used) {
  std::vector<int> rows, cols;
  for (std::size_t i = 0; i < row_used.size(); ++i) {
    if (!row_used[i]) rows.push_back(static_cast<int>(i));
  }
  for (std::size_t j = 0; j < col_used.size(); ++j) {
    if (!col_used[j]) cols.push_back(static_cast<int>(j));
  }
  std::vector<std::vector<std::int64_t>> sub(rows.size(),
                                             std::vector<std::int64_t>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      sub[i][j] = padded[static_cast<std::size_t>(rows[i])]
                        [static_cast<std::size_t>(cols[j])];
    }
  }
  return solve_square(sub);
}

}  // namespace

AssignmentResult hungarian(const std::vector<std::vector<std::int64_t>>& cost) {
  AssignmentResult result;
  std::size_t n = cost.size();
  std::size_t m = n == 0 ? 0 : cost[0].size();
  for (const auto& row : cost) {
    if (row.size() != m) throw std::invalid_argument("ragged cost matrix");
    for (auto c : row) {
      if (c < 0) throw std::invalid_argument("negative cost");
    }
  }
  if (n == 0 || m == 0) return result;

  std::int64_t max_real = 0;
  for (const auto& row : cost) {
    for (auto c : row) max_real = std::max(max_real, c);
  }
  std::int64_t dummy = max_real + 1;
  std::size_t s = std::max(n, m);
  std::vector<std::vector<std::int64_t>> padded(s, std::vector<std::int64_t>(s, dummy));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) padded[i][j] = cost[i][j];
  }

  std::int64_t total = solve_square(padded);

  // Pin rows to columns in lexicographic order, keeping only choices that
  // still admit an optimal completion. Dummy columns (an unmatched row)
  // are tried last.
  std::vector<char> row_used(s, 0), col_used(s, 0);
  std::int64_t fixed_cost = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> candidates;
    for (std::size_t j = 0; j < m; ++j) {
      if (!col_used[j]) candidates.push_back(j);
    }
    for (std::size_t j = m; j < s; ++j) {
      if (!col_used[j]) {
        candidates.push_back(j);  // first free dummy column stands for all
        break;
      }
    }
    for (std::size_t j : candidates) {
      row_used[i] = 1;
      col_used[j] = 1;
      std::int64_t with = fixed_cost + padded[i][j] +
                          solve_remaining(padded, row_used, col_used);
      if (with == total) {
        fixed_cost += padded[i][j];
        if (j < m) {
          result.pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
          result.total_cost += padded[i][j];
        }
        break;
      }
      row_used[i] = 0;
      col_used[j] = 0;
    }
  }
  return result;
}

}  // namespace miniup
