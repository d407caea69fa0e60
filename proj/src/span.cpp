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

#include "miniup/span.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace miniup {

std::string Span::to_string() const {
  return file + ":" + std::to_string(start_line) + ":" +
         std::to_string(start_col) + "-" + std::to_string(end_line) + ":" +
         std::to_string(end_col);
}

SourceText::SourceText(std::string file, std::string text)
    : file_(std::move(file)), text_(std::move(text)) {
  line_starts_.push_back(0);
  for (std::size_t i = 0; i < text_.size(); ++i) {
    if (text_[i] == '\n') line_starts_.push_back(i + 1);
  }
}

std::size_t SourceText::offset_of(int line, int col) const {
  if (line < 1 || static_cast<std::size_t>(line) > line_starts_.size()) {
    throw std::out_of_range("line out of range: " + std::to_string(line));
  }
  std::size_t off = line_starts_[static_cast<std::size_t>(line) - 1] +
                    static_cast<std::size_t>(col - 1);
  if (off > text_.size()) throw std::out_of_range("column out of range");
  return off;
}

std::pair<int, int> SourceText::position_of(std::size_t offset) const {
  if (offset > text_.size()) throw std::out_of_range("offset out of range");
  auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
  auto line = static_cast<int>(it - line_starts_.begin());
  auto col = static_cast<int>(offset - line_starts_[line - 1]) + 1;
  return {line, col};
}

std::string SourceText::slice(const Span& span) const {
  auto begin = offset_of(span.start_line, span.start_col);
  auto end = offset_of(span.end_line, span.end_col);
  assert(begin <= end);
  return text_.substr(begin, end - begin);
}

std::string SourceText::splice(const Span& span,
                               const std::string& replacement) const {
  auto begin = offset_of(span.start_line, span.start_col);
  auto end = offset_of(span.end_line, span.end_col);
  std::string out;
  out.reserve(text_.size() + replacement.size());
  out.append(text_, 0, begin);
  out.append(replacement);
  out.append(text_, end, text_.size() - end);
  return out;
}

std::string apply_edits(const SourceText& text, std::vector<TextEdit> edits) {
  // Apply back to front so earlier offsets stay valid.
  std::sort(edits.begin(), edits.end(), [&](const TextEdit& a, const TextEdit& b) {
    return text.offset_of(a.span.start_line, a.span.start_col) >
           text.offset_of(b.span.start_line, b.span.start_col);
  });
  std::string out = text.text();
  for (const auto& edit : edits) {
    auto begin = text.offset_of(edit.span.start_line, edit.span.start_col);
    auto end = text.offset_of(edit.span.end_line, edit.span.end_col);
    out.replace(begin, end - begin, edit.replacement);
  }
  return out;
}

}  // namespace miniup
