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

#include "cdawg/oracle.hpp"

#include <algorithm>

#include "cdawg/substring_catalog.hpp"

namespace cdawg::oracle {

namespace {

void require_substring(std::string_view x, const Text& t) {
  if (!is_substring(x, t)) {
    throw NotASubstring("'" + printable(x) + "' does not occur in the text");
  }
}

}  // namespace

bool shortlex_less(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(), [](char l, char r) {
        return static_cast<unsigned char>(l) < static_cast<unsigned char>(r);
      });
}

std::vector<Position> beg_pos(std::string_view x, const Text& t) {
  std::vector<Position> out;
  if (x.empty() || x.size() > t.size()) return out;
  std::string_view s = t.view();
  for (std::size_t i = 0; i + x.size() <= s.size(); ++i) {
    if (s.compare(i, x.size(), x) == 0) out.push_back(i + 1);
  }
  return out;
}

std::vector<Position> end_pos(std::string_view x, const Text& t) {
  auto out = beg_pos(x, t);
  for (auto& p : out) p += x.size() - 1;
  return out;
}

std::vector<Occurrence> occurrences(std::string_view x, const Text& t) {
  std::vector<Occurrence> out;
  for (Position b : beg_pos(x, t)) out.push_back({b, b + x.size() - 1});
  return out;
}

bool is_substring(std::string_view x, const Text& t) {
  return x.empty() || t.view().find(x) != std::string_view::npos;
}

SymbolSet left_extensions(std::string_view x, const Text& t) {
  require_substring(x, t);
  SymbolSet out;
  if (x.empty()) {
    out.insert(t.str().begin(), t.str().end());
    return out;
  }
  for (Position b : beg_pos(x, t)) {
    if (b > 1) out.insert(t.at(b - 1));
  }
  return out;
}

SymbolSet right_extensions(std::string_view x, const Text& t) {
  require_substring(x, t);
  SymbolSet out;
  if (x.empty()) {
    out.insert(t.str().begin(), t.str().end());
    return out;
  }
  for (Position b : beg_pos(x, t)) {
    Position after = b + x.size();
    if (after <= t.size()) out.insert(t.at(after));
  }
  return out;
}

bool is_left_maximal(std::string_view x, const Text& t) {
  require_substring(x, t);
  if (t.view().starts_with(x)) return true;
  return left_extensions(x, t).size() >= 2;
}

bool is_right_maximal(std::string_view x, const Text& t) {
  require_substring(x, t);
  if (t.view().ends_with(x)) return true;
  return right_extensions(x, t).size() >= 2;
}

MaximalityRecord maximality(std::string_view x, const Text& t) {
  MaximalityRecord r;
  r.string = std::string(x);
  r.left_maximal = is_left_maximal(x, t);
  r.right_maximal = is_right_maximal(x, t);
  r.is_repeat = x.empty() || beg_pos(x, t).size() >= 2;
  return r;
}

std::vector<std::string> maximal_set(const Text& t) {
  SubstringCatalog catalog(t.view());
  std::vector<std::string> out;
  for (SubstringCatalog::EntryId id = 0; id < catalog.size(); ++id) {
    if (catalog.is_maximal(id)) out.emplace_back(catalog.value(id));
  }
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

std::vector<std::string> maximal_repeats(const Text& t) {
  auto out = maximal_set(t);
  std::erase(out, t.str());
  return out;
}

std::string rrep(std::string_view x, const Text& t) {
  require_substring(x, t);
  std::string w(x);
  while (!is_right_maximal(w, t)) {
    // Not right-maximal and not a suffix: exactly one symbol follows.
    w.push_back(*right_extensions(w, t).begin());
  }
  return w;
}

std::vector<std::string> all_substrings(const Text& t) {
  std::set<std::string> seen;
  seen.insert(std::string());
  const std::string& s = t.str();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t len = 1; i + len <= s.size(); ++len) {
      seen.insert(s.substr(i, len));
    }
  }
  std::vector<std::string> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

}  // namespace cdawg::oracle
