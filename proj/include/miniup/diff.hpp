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

#ifndef MINIUP_DIFF_HPP
#define MINIUP_DIFF_HPP

#include <string>

namespace miniup {

/// Unified diff (three lines of context) between two texts; empty when
/// they are equal. `label` names the file in the ---/+++ headers.
std::string unified_diff(const std::string& label, const std::string& before,
                         const std::string& after);

}  // namespace miniup

#endif  // MINIUP_DIFF_HPP
