/*
 * Copyright 2026 The cdawg-lab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef CDAWG_TEXT_HPP
#define CDAWG_TEXT_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cdawg {

/// 1-based position into a Text.
using Position = std::size_t;

inline constexpr char kEndMarker = '$';

class InvalidText : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A string terminated by a unique end-marker `$`.
///
/// All positions exposed by the library are 1-based and inclusive, so
/// `at(size())` is always the end-marker.
class Text {
 public:
  /// Throws InvalidText unless `chars` is non-empty, ends with `$` and
  /// contains no other `$`.
  explicit Text(std::string chars);

  /// Appends the end-marker when `s` does not already end with one.
  static Text from_literal(std::string_view s);

  std::size_t size() const noexcept { return chars_.size(); }

  char at(Position i) const { return chars_.at(i - 1); }

  /// T[begin..end], 1-based inclusive; an empty view when end < begin.
  std::string_view substr(Position begin, Position end) const;

  const std::string& str() const noexcept { return chars_; }
  std::string_view view() const noexcept { return chars_; }

  /// Distinct symbols other than the end-marker, ascending by byte value.
  std::vector<char> alphabet() const;

  friend bool operator==(const Text&, const Text&) = default;

 private:
  std::string chars_;
};

/// Renders a symbol for human-readable output; bytes outside printable
/// ASCII become `\xHH`.
std::string printable(char c);
std::string printable(std::string_view s);

}  // namespace cdawg

#endif  // CDAWG_TEXT_HPP
