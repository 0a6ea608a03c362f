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

#include <charconv>
#include <cstdio>
#include <set>
#include <sstream>

#include "cdawg/grammar.hpp"

namespace cdawg {

namespace {

constexpr std::string_view kHeader = "CDAWG-GRAMMAR v1";

void write_terminal(std::ostream& os, char c) {
  auto b = static_cast<unsigned char>(c);
  os << '\'';
  if (c == '\\' || c == '\'') {
    os << '\\' << c;
  } else if (b >= 0x20 && b < 0x7f) {
    os << c;
  } else {
    char buf[5];
    std::snprintf(buf, sizeof buf, "\\x%02X", b);
    os << buf;
  }
  os << '\'';
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw MalformedGrammar("line " + std::to_string(line) + ": " + what);
}

RuleId parse_rule_ref(std::string_view tok, std::size_t line) {
  if (tok.size() < 2 || tok[0] != 'R') fail(line, "expected rule reference, got '" + std::string(tok) + "'");
  RuleId id = 0;
  auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), id);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || id < 1) {
    fail(line, "bad rule id '" + std::string(tok) + "'");
  }
  return id;
}

std::size_t parse_count(std::string_view tok, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    fail(line, "bad count '" + std::string(tok) + "'");
  }
  return value;
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

// Reads one symbol starting at s[pos]; advances pos past it.
Symbol parse_symbol(std::string_view s, std::size_t& pos, std::size_t line) {
  if (s[pos] == '\'') {
    ++pos;
    if (pos >= s.size()) fail(line, "unterminated terminal");
    char value;
    if (s[pos] == '\\') {
      ++pos;
      if (pos >= s.size()) fail(line, "unterminated escape");
      if (s[pos] == '\\' || s[pos] == '\'') {
        value = s[pos++];
      } else if (s[pos] == 'x') {
        if (pos + 2 >= s.size()) fail(line, "short \\x escape");
        int hi = hex_digit(s[pos + 1]);
        int lo = hex_digit(s[pos + 2]);
        if (hi < 0 || lo < 0) fail(line, "bad \\x escape");
        value = static_cast<char>(hi * 16 + lo);
        pos += 3;
      } else {
        fail(line, std::string("unknown escape \\") + s[pos]);
      }
    } else {
      value = s[pos++];
    }
    if (pos >= s.size() || s[pos] != '\'') fail(line, "terminal must hold exactly one symbol");
    ++pos;
    return Symbol::terminal(value);
  }
  std::size_t end = s.find(' ', pos);
  if (end == std::string_view::npos) end = s.size();
  RuleId id = parse_rule_ref(s.substr(pos, end - pos), line);
  pos = end;
  return Symbol::nonterminal(id);
}

}  // namespace

std::string serialize(const Grammar& g) {
  std::ostringstream os;
  os << kHeader << '\n';
  os << "rules " << g.rules().size() << '\n';
  os << "start R" << g.start() << '\n';
  for (const Rule& r : g.rules()) {
    os << 'R' << r.id << ':';
    for (const Symbol& s : r.rhs) {
      os << ' ';
      if (s.is_terminal()) {
        write_terminal(os, s.symbol());
      } else {
        os << 'R' << s.rule();
      }
    }
    os << '\n';
  }
  return os.str();
}

Grammar parse(std::string_view document) {
  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos < document.size();) {
    std::size_t nl = document.find('\n', pos);
    if (nl == std::string_view::npos) nl = document.size();
    lines.push_back(document.substr(pos, nl - pos));
    pos = nl + 1;
  }

  if (lines.empty() || lines[0] != kHeader) fail(1, "missing 'CDAWG-GRAMMAR v1' header");
  if (lines.size() < 3) fail(lines.size() + 1, "truncated document");
  if (!lines[1].starts_with("rules ")) fail(2, "expected 'rules <count>'");
  std::size_t count = parse_count(lines[1].substr(6), 2);
  if (!lines[2].starts_with("start ")) fail(3, "expected 'start R<id>'");
  RuleId start = parse_rule_ref(lines[2].substr(6), 3);
  if (lines.size() - 3 != count) {
    fail(lines.size(), "declared " + std::to_string(count) + " rules, found " +
                           std::to_string(lines.size() - 3));
  }

  std::vector<Rule> rules;
  std::set<RuleId> seen;
  for (std::size_t i = 3; i < lines.size(); ++i) {
    const std::size_t line = i + 1;
    std::string_view s = lines[i];
    std::size_t colon = s.find(':');
    if (colon == std::string_view::npos) fail(line, "expected 'R<id>:'");
    Rule r;
    r.id = parse_rule_ref(s.substr(0, colon), line);
    if (!seen.insert(r.id).second) fail(line, "duplicate rule R" + std::to_string(r.id));
    std::size_t pos = colon + 1;
    while (pos < s.size()) {
      if (s[pos] != ' ') fail(line, "symbols must be separated by single spaces");
      ++pos;
      if (pos >= s.size()) fail(line, "trailing space");
      r.rhs.push_back(parse_symbol(s, pos, line));
    }
    if (r.rhs.empty()) fail(line, "rule R" + std::to_string(r.id) + " has no symbols");
    rules.push_back(std::move(r));
  }
  return Grammar(std::move(rules), start);
}

}  // namespace cdawg
