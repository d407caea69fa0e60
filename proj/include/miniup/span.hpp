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

#ifndef MINIUP_SPAN_HPP
#define MINIUP_SPAN_HPP

#include <string>
#include <tuple>
#include <vector>

namespace miniup {

/// A half-open source range. Lines and columns are 1-based; the end
/// position is exclusive, so a span with start == end is empty and marks
/// an insertion point.
struct Span {
  std::string file;
  int start_line = 1;
  int start_col = 1;
  int end_line = 1;
  int end_col = 1;

  bool empty() const { return start_line == end_line && start_col == end_col; }

  friend bool operator==(const Span& a, const Span& b) {
    return a.file == b.file && a.start_line == b.start_line &&
           a.start_col == b.start_col && a.end_line == b.end_line &&
           a.end_col == b.end_col;
  }

  friend bool operator<(const Span& a, const Span& b) {
    return std::tie(a.file, a.start_line, a.start_col, a.end_line, a.end_col) <
           std::tie(b.file, b.start_line, b.start_col, b.end_line, b.end_col);
  }

  /// True when `inner` lies fully inside this span (document order).
  bool contains(const Span& inner) const {
    if (file != inner.file) return false;
    auto begin_ok = std::tie(start_line, start_col) <=
                    std::tie(inner.start_line, inner.start_col);
    auto end_ok = std::tie(inner.end_line, inner.end_col) <=
                  std::tie(end_line, end_col);
    return begin_ok && end_ok;
  }

  std::string to_string() const;
};

/// Source text with a line index, used to convert between (line, col)
/// positions and byte offsets and to slice or splice ranges.
class SourceText {
 public:
  SourceText() = default;
  SourceText(std::string file, std::string text);

  const std::string& file() const { return file_; }
  const std::string& text() const { return text_; }

  std::size_t offset_of(int line, int col) const;
  std::pair<int, int> position_of(std::size_t offset) const;

  std::string slice(const Span& span) const;

  /// Returns a new text with `span` replaced by `replacement`.
  std::string splice(const Span& span, const std::string& replacement) const;

 private:
  std::string file_;
  std::string text_;
  std::vector<std::size_t> line_starts_;
};

/// One text replacement; `span` refers to the text it is applied to.
struct TextEdit {
  Span span;
  std::string replacement;
};

/// Applies a batch of non-overlapping edits to `text` in one pass.
std::string apply_edits(const SourceText& text, std::vector<TextEdit> edits);

}  // namespace miniup

#endif  // MINIUP_SPAN_HPP
