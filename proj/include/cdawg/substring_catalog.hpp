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

#ifndef CDAWG_SUBSTRING_CATALOG_HPP
#define CDAWG_SUBSTRING_CATALOG_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cdawg {

/// Every distinct substring of a string together with its occurrence list.
///
/// Built by refining occurrence classes one symbol at a time, which is the
/// suffix trie of the string: entry w of length L has one child per symbol
/// that follows some occurrence of w. Quadratic in the string length, so it
/// is meant for the short strings of the sensitivity lab and for
/// cross-checking the suffix-tree route.
///
/// Occurrence begins are 0-based and ascending. The string is not required
/// to carry an end-marker.
class SubstringCatalog {
 public:
  using EntryId = std::int32_t;
  static constexpr EntryId kEmpty = 0;

  explicit SubstringCatalog(std::string_view text);

  SubstringCatalog(const SubstringCatalog&) = delete;
  SubstringCatalog& operator=(const SubstringCatalog&) = delete;
  SubstringCatalog(SubstringCatalog&&) = default;
  SubstringCatalog& operator=(SubstringCatalog&&) = default;

  EntryId size() const { return static_cast<EntryId>(entries_.size()); }
  std::string_view text() const { return text_; }

  std::optional<EntryId> find(std::string_view x) const;
  std::optional<EntryId> child(EntryId id, char c) const;
  /// x with its last symbol removed; ε has no parent.
  EntryId parent(EntryId id) const { return entries_[id].parent; }

  std::size_t length(EntryId id) const { return entries_[id].length; }
  std::string_view value(EntryId id) const;
  /// Ascending 0-based begins. ε lists every position of the string.
  std::span<const std::int32_t> begins(EntryId id) const;
  std::size_t count(EntryId id) const { return entries_[id].count; }
  /// 0-based end of the leftmost occurrence; -1 for ε.
  std::int64_t first_end(EntryId id) const;

  bool is_prefix(EntryId id) const { return entries_[id].prefix; }
  bool is_suffix(EntryId id) const { return entries_[id].suffix; }
  bool is_left_maximal(EntryId id) const { return entries_[id].left_maximal; }
  bool is_right_maximal(EntryId id) const { return entries_[id].right_maximal; }
  bool is_maximal(EntryId id) const {
    return is_left_maximal(id) && is_right_maximal(id);
  }

  /// Distinct symbols following an occurrence, ascending.
  std::string right_extensions(EntryId id) const;
  std::size_t right_degree(EntryId id) const { return entries_[id].child_count; }
  /// Distinct symbols preceding an occurrence, ascending.
  std::string left_extensions(EntryId id) const;
  /// The unique left extension of an entry that is not left-maximal.
  char unique_left_symbol(EntryId id) const;

  /// Entry of the shortest right-maximal extension of the entry.
  EntryId rrep(EntryId id) const { return entries_[id].rrep; }

  /// Children occupy the contiguous id range
  /// [first_child(id), first_child(id) + right_degree(id)), ascending by symbol.
  EntryId first_child(EntryId id) const { return entries_[id].first_child; }

 private:
  struct Entry {
    std::int32_t length = 0;
    EntryId parent = -1;
    EntryId first_child = 0;
    std::int32_t child_count = 0;
    std::int32_t pool_offset = 0;
    std::int32_t count = 0;
    EntryId rrep = 0;
    bool prefix = false;
    bool suffix = false;
    bool left_maximal = false;
    bool right_maximal = false;
  };

  std::string text_;
  std::vector<Entry> entries_;
  std::vector<std::int32_t> pool_;
};

}  // namespace cdawg

#endif  // CDAWG_SUBSTRING_CATALOG_HPP
