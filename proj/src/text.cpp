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

#include "cdawg/text.hpp"

#include <array>
#include <cstdio>

namespace cdawg {

Text::Text(std::string chars) : chars_(std::move(chars)) {
  if (chars_.empty()) {
    throw InvalidText("text must contain at least the end-marker");
  }
  if (chars_.back() != kEndMarker) {
    throw InvalidText("text must terminate with '$'");
  }
  if (chars_.find(kEndMarker) != chars_.size() - 1) {
    throw InvalidText("end-marker '$' must occur exactly once");
  }
}

Text Text::from_literal(std::string_view s) {
  std::string chars(s);
  if (chars.empty() || chars.back() != kEndMarker) chars.push_back(kEndMarker);
  return Text(std::move(chars));
}

std::string_view Text::substr(Position begin, Position end) const {
  if (end < begin) return {};
  if (begin < 1 || end > chars_.size()) {
    throw std::out_of_range("substring span outside text");
  }
  return std::string_view(chars_).substr(begin - 1, end - begin + 1);
}

std::vector<char> Text::alphabet() const {
  std::array<bool, 256> seen{};
  for (char c : chars_) seen[static_cast<unsigned char>(c)] = true;
  std::vector<char> out;
  for (int b = 0; b < 256; ++b) {
    if (seen[b] && static_cast<char>(b) != kEndMarker) {
      out.push_back(static_cast<char>(b));
    }
  }
  return out;
}

std::string printable(char c) {
  auto b = static_cast<unsigned char>(c);
  if (b >= 0x20 && b < 0x7f) return std::string(1, c);
  char buf[5];
  std::snprintf(buf, sizeof buf, "\\x%02X", b);
  return buf;
}

std::string printable(std::string_view s) {
  std::string out;
  for (char c : s) out += printable(c);
  return out;
}

}  // namespace cdawg
