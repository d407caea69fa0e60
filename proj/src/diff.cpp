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

#include "miniup/diff.hpp"

#include <algorithm>
#include <vector>

namespace miniup {
namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto pos = text.find('\n', start);
    if (pos == std::string::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return lines;
}

struct Op {
  char tag;  // ' ', '-', '+'
  const std::string* line;
};

}  // namespace

std::string unified_diff(const std::string& label, const std::string& before,
                         const std::string& after) {
  if (before == after) return "";
  std::vector<std::string> a = split_lines(before);
  std::vector<std::string> b = split_lines(after);
  std::size_t n = a.size(), m = b.size();
  // LCS table
  std::vector<std::vector<int>> lcs(n + 1, std::vector<int>(m + 1, 0));
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      lcs[i][j] = a[i] == b[j] ? lcs[i + 1][j + 1] + 1
                               : std::max(lcs[i + 1][j], lcs[i][j + 1]);
    }
  }
  std::vector<Op> ops;
  std::size_t i = 0, j = 0;
  while (i < n && j < m) {
    if (a[i] == b[j]) {
      ops.push_back({' ', &a[i]});
      ++i;
      ++j;
    } else if (lcs[i + 1][j] >= lcs[i][j + 1]) {
      ops.push_back({'-', &a[i++]});
    } else {
      ops.push_back({'+', &b[j++]});
    }
  }
  while (i < n) ops.push_back({'-', &a[i++]});
  while (j < m) ops.push_back({'+', &b[j++]});

  // group into hunks with three lines of context
  const int context = 3;
  std::string out = "--- a/" + label + "\n+++ b/" + label + "\n";
  std::size_t k = 0;
  int a_line = 1, b_line = 1;
  while (k < ops.size()) {
    if (ops[k].tag == ' ') {
      ++a_line;
      ++b_line;
      ++k;
      continue;
    }
    // found a change; extend to a hunk
    std::size_t hunk_start = k;
    int lead = 0;
    while (hunk_start > 0 && lead < context && ops[hunk_start - 1].tag == ' ') {
      --hunk_start;
      ++lead;
    }
    std::size_t hunk_end = k;
    std::size_t trailing = 0;
    std::size_t last_change = k;
    while (hunk_end < ops.size()) {
      if (ops[hunk_end].tag != ' ') {
        last_change = hunk_end;
        trailing = 0;
      } else if (++trailing > static_cast<std::size_t>(context * 2)) {
        break;  // enough blank context to split hunks
      }
      ++hunk_end;
    }
    hunk_end = std::min(hunk_end, last_change + static_cast<std::size_t>(context) + 1);

    int a_start = a_line - lead;
    int b_start = b_line - lead;
    int a_count = 0, b_count = 0;
    std::string body;
    for (std::size_t p = hunk_start; p < hunk_end; ++p) {
      body += ops[p].tag + *ops[p].line + "\n";
      if (ops[p].tag != '+') ++a_count;
      if (ops[p].tag != '-') ++b_count;
    }
    out += "@@ -" + std::to_string(a_start) + "," + std::to_string(a_count) + " +" +
           std::to_string(b_start) + "," + std::to_string(b_count) + " @@\n" + body;
    for (std::size_t p = k; p < hunk_end; ++p) {
      if (ops[p].tag != '+') ++a_line;
      if (ops[p].tag != '-') ++b_line;
    }
    k = hunk_end;
  }
  return out;
}

}  // namespace miniup
