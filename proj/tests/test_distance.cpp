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

#include <random>
#include <string>
#include <vector>

#include "miniup/distance.hpp"

using miniup::levenshtein;

namespace {

/// Independent full-matrix oracle, kept deliberately naive.
std::int64_t oracle_distance(const std::string& a, const std::string& b) {
  std::vector<std::vector<std::int64_t>> d(a.size() + 1,
                                           std::vector<std::int64_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = static_cast<std::int64_t>(i);
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = static_cast<std::int64_t>(j);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::int64_t best = d[i - 1][j] + 1;
      if (d[i][j - 1] + 1 < best) best = d[i][j - 1] + 1;
      std::int64_t sub = d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      if (sub < best) best = sub;
      d[i][j] = best;
    }
  }
  return d[a.size()][b.size()];
}

std::string random_word(std::mt19937_64& rng, std::size_t max_len) {
  std::size_t len = rng() % (max_len + 1);
  std::string out;
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back(static_cast<char>('a' + rng() % 6));
  }
  return out;
}

}  // namespace

TEST_CASE("identity, empty-string, and the classic pair") {
  CHECK(levenshtein("", "") == 0);
  CHECK(levenshtein("migration", "migration") == 0);
  CHECK(levenshtein("", "abref") == 5);
  CHECK(levenshtein("abref", "") == 5);
  // value frozen from the oracle
  CHECK(oracle_distance("kitten", "sitting") == 3);
  CHECK(levenshtein("kitten", "sitting") == 3);
}

TEST_CASE("matches the oracle on random pairs") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    std::string a = random_word(rng, 18);
    std::string b = random_word(rng, 18);
    CAPTURE(a);
    CAPTURE(b);
    CHECK(levenshtein(a, b) == oracle_distance(a, b));
  }
}

TEST_CASE("symmetry and triangle inequality, sampled") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    std::string a = random_word(rng, 12);
    std::string b = random_word(rng, 12);
    std::string c = random_word(rng, 12);
    CHECK(levenshtein(a, b) == levenshtein(b, a));
    CHECK(levenshtein(a, c) <= levenshtein(a, b) + levenshtein(b, c));
  }
}
