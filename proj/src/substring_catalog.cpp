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

#include "cdawg/substring_catalog.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace cdawg {

namespace {

unsigned char byte(char c) { return static_cast<unsigned char>(c); }

}  // namespace

SubstringCatalog::SubstringCatalog(std::string_view text) : text_(text) {
  const auto n = static_cast<std::int32_t>(text_.size());

  Entry root;
  root.count = n;
  root.prefix = true;
  root.suffix = true;
  root.left_maximal = true;
  entries_.push_back(root);
  pool_.resize(n);
  for (std::int32_t i = 0; i < n; ++i) pool_[i] = i;

  std::vector<std::pair<unsigned char, std::int32_t>> keyed;
  for (EntryId k = 0; k < size(); ++k) {
    const std::int32_t len = entries_[k].length;
    keyed.clear();
    for (std::int32_t idx = 0; idx < entries_[k].count; ++idx) {
      std::int32_t b = pool_[entries_[k].pool_offset + idx];
      if (b + len < n) keyed.emplace_back(byte(text_[b + len]), b);
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& l, const auto& r) { return l.first < r.first; });

    entries_[k].first_child = size();
    for (std::size_t g = 0; g < keyed.size();) {
      std::size_t h = g;
      while (h < keyed.size() && keyed[h].first == keyed[g].first) ++h;

      Entry e;
      e.length = len + 1;
      e.parent = k;
      e.pool_offset = static_cast<std::int32_t>(pool_.size());
      e.count = static_cast<std::int32_t>(h - g);
      std::array<bool, 256> left_seen{};
      int left_distinct = 0;
      for (std::size_t j = g; j < h; ++j) {
        std::int32_t b = keyed[j].second;
        pool_.push_back(b);
        if (b == 0) {
          e.prefix = true;
        } else if (!left_seen[byte(text_[b - 1])]) {
          left_seen[byte(text_[b - 1])] = true;
          ++left_distinct;
        }
      }
      e.suffix = pool_.back() + e.length == n;
      e.left_maximal = e.prefix || left_distinct >= 2;
      entries_.push_back(e);
      ++entries_[k].child_count;
      g = h;
    }
    entries_[k].right_maximal = entries_[k].suffix || entries_[k].child_count >= 2;
  }

  // Children are created after their parents, so a reverse sweep sees every
  // child's representative before the parent needs it.
  for (EntryId k = size() - 1; k >= 0; --k) {
    Entry& e = entries_[k];
    e.rrep = e.right_maximal ? k : entries_[e.first_child].rrep;
  }
}

std::optional<SubstringCatalog::EntryId> SubstringCatalog::child(EntryId id,
                                                                 char c) const {
  const Entry& e = entries_[id];
  EntryId lo = e.first_child;
  EntryId hi = e.first_child + e.child_count;
  while (lo < hi) {
    EntryId mid = lo + (hi - lo) / 2;
    const Entry& m = entries_[mid];
    unsigned char mc = byte(text_[pool_[m.pool_offset] + m.length - 1]);
    if (mc < byte(c)) {
      lo = mid + 1;
    } else if (mc > byte(c)) {
      hi = mid;
    } else {
      return mid;
    }
  }
  return std::nullopt;
}

std::optional<SubstringCatalog::EntryId> SubstringCatalog::find(
    std::string_view x) const {
  EntryId cur = kEmpty;
  for (char c : x) {
    auto next = child(cur, c);
    if (!next) return std::nullopt;
    cur = *next;
  }
  return cur;
}

std::string_view SubstringCatalog::value(EntryId id) const {
  const Entry& e = entries_[id];
  if (e.length == 0) return {};
  return std::string_view(text_).substr(pool_[e.pool_offset], e.length);
}

std::span<const std::int32_t> SubstringCatalog::begins(EntryId id) const {
  const Entry& e = entries_[id];
  return {pool_.data() + e.pool_offset, static_cast<std::size_t>(e.count)};
}

std::int64_t SubstringCatalog::first_end(EntryId id) const {
  const Entry& e = entries_[id];
  if (e.length == 0) return -1;
  return static_cast<std::int64_t>(pool_[e.pool_offset]) + e.length - 1;
}

std::string SubstringCatalog::right_extensions(EntryId id) const {
  std::string out;
  const Entry& e = entries_[id];
  for (EntryId c = e.first_child; c < e.first_child + e.child_count; ++c) {
    const Entry& ch = entries_[c];
    out.push_back(text_[pool_[ch.pool_offset] + ch.length - 1]);
  }
  return out;
}

std::string SubstringCatalog::left_extensions(EntryId id) const {
  std::array<bool, 256> seen{};
  for (std::int32_t b : begins(id)) {
    if (b > 0) seen[byte(text_[b - 1])] = true;
  }
  std::string out;
  for (int c = 0; c < 256; ++c) {
    if (seen[c]) out.push_back(static_cast<char>(c));
  }
  return out;
}

char SubstringCatalog::unique_left_symbol(EntryId id) const {
  if (is_left_maximal(id)) {
    throw std::logic_error("left-maximal entry has no unique left extension");
  }
  return text_[begins(id).front() - 1];
}

}  // namespace cdawg
