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

#ifndef MINIUP_DISTANCE_HPP
#define MINIUP_DISTANCE_HPP

#include <cstdint>
#include <string_view>

namespace miniup {

/// Unit-cost insert/delete/substitute edit distance.
std::int64_t levenshtein(std::string_view a, std::string_view b);

}  // namespace miniup

#endif  // MINIUP_DISTANCE_HPP
