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

#include <algorithm>

#include "cdawg/grammar.hpp"
#include "cdawg/sensitivity.hpp"

namespace cdawg {

std::string_view to_string(EditKind kind) {
  switch (kind) {
    case EditKind::substitution:
      return "substitution";
    case EditKind::deletion:
      return "deletion";
    case EditKind::insertion:
      return "insertion";
  }
  return "?";
}

std::string to_string(const EditOp& op) {
  std::string pos = std::to_string(op.i);
  switch (op.kind) {
    case EditKind::substitution:
      return "sub(" + pos + ",'" + printable(op.c) + "')";
    case EditKind::deletion:
      return "del(" + pos + ")";
    case EditKind::insertion:
      return "ins(" + pos + ",'" + printable(op.c) + "')";
  }
  return "?";
}

Text apply(const EditOp& op, const Text& t) {
  const std::size_t n = t.size();
  const std::string& s = t.str();
  if (op.kind != EditKind::deletion && op.c == kEndMarker) {
    throw InvalidEdit("edits may not introduce the end-marker");
  }
  switch (op.kind) {
    case EditKind::substitution:
      if (op.i < 1 || op.i >= n) throw InvalidEdit("substitution position out of range");
      return Text(s.substr(0, op.i - 1) + op.c + s.substr(op.i));
    case EditKind::deletion:
      if (op.i < 1 || op.i >= n) throw InvalidEdit("deletion position out of range");
      return Text(s.substr(0, op.i - 1) + s.substr(op.i));
    case EditKind::insertion:
      if (op.i < 1 || op.i > n) throw InvalidEdit("insertion position out of range");
      return Text(s.substr(0, op.i - 1) + op.c + s.substr(op.i - 1));
  }
  throw InvalidEdit("unknown edit kind");
}

std::vector<char> edit_alphabet(const Text& t) {
  std::vector<char> out = t.alphabet();
  for (char c = 'a'; c <= 'z'; ++c) {
    if (std::find(out.begin(), out.end(), c) == out.end()) {
      out.push_back(c);
      break;
    }
  }
  std::sort(out.begin(), out.end(), [](char a, char b) {
    return static_cast<unsigned char>(a) < static_cast<unsigned char>(b);
  });
  return out;
}

std::vector<EditOp> enumerate_edits(const Text& t, std::span<const char> alphabet) {
  std::vector<char> symbols;
  for (char c : alphabet) {
    if (c != kEndMarker) symbols.push_back(c);
  }
  std::sort(symbols.begin(), symbols.end(), [](char a, char b) {
    return static_cast<unsigned char>(a) < static_cast<unsigned char>(b);
  });
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());

  const std::size_t n = t.size();
  std::vector<EditOp> out;
  for (Position i = 1; i < n; ++i) {
    for (char c : symbols) {
      if (c != t.at(i)) out.push_back({EditKind::substitution, i, c});
    }
  }
  for (Position i = 1; i < n; ++i) out.push_back({EditKind::deletion, i, '\0'});
  for (Position i = 1; i <= n; ++i) {
    for (char c : symbols) out.push_back({EditKind::insertion, i, c});
  }
  return out;
}

std::vector<EditOp> enumerate_edits(const Text& t) {
  auto alphabet = edit_alphabet(t);
  return enumerate_edits(t, alphabet);
}

Analysis::Analysis(Text t)
    : text_(std::move(t)),
      catalog_(text_.view()),
      graph_(build(text_, catalog_)),
      metrics_(metrics(graph_)),
      grammar_size_(eliminate_units(derive(graph_)).size()) {}

bool Analysis::is_maximal(std::string_view x) const {
  auto id = catalog_.find(x);
  return id && catalog_.is_maximal(*id);
}

bool Analysis::is_maximal_repeat(std::string_view x) const {
  return x.size() < text_.size() && is_maximal(x);
}

std::size_t Analysis::degree(std::string_view x) const {
  auto id = catalog_.find(x);
  return id ? catalog_.right_degree(*id) : 0;
}

EditScenario make_scenario(std::shared_ptr<const Analysis> before, const EditOp& op) {
  auto after = std::make_shared<const Analysis>(apply(op, before->text()));
  return EditScenario{std::move(before), std::move(after), op};
}

EditScenario make_scenario(const Text& t, const EditOp& op) {
  return make_scenario(std::make_shared<const Analysis>(t), op);
}

std::string_view to_string(CrossKind kind) {
  switch (kind) {
    case CrossKind::touch_left:
      return "touch-left";
    case CrossKind::contain:
      return "contain";
    case CrossKind::touch_right:
      return "touch-right";
  }
  return "?";
}

std::vector<CrossingOcc> crossing_occurrences(std::string_view x, const EditScenario& s) {
  std::vector<CrossingOcc> out;
  if (x.empty()) return out;
  const SubstringCatalog& cat = s.after->catalog();
  auto id = cat.find(x);
  if (!id) return out;

  const Text& tp = s.t_prime();
  const Position i = s.op.i;
  const bool deletion = s.op.kind == EditKind::deletion;
  for (std::int32_t b : cat.begins(*id)) {
    const Position j = static_cast<Position>(b) + 1;
    const Position k = j + x.size() - 1;
    CrossingOcc occ{j, k, CrossKind::contain, {}, {}};
    if (k + 1 == i) {
      occ.kind = CrossKind::touch_left;
    } else if (!deletion && j <= i && i <= k) {
      occ.kind = CrossKind::contain;
    } else if (deletion && j + 1 <= i && i <= k) {
      occ.kind = CrossKind::contain;
    } else if ((!deletion && j == i + 1) || (deletion && j == i)) {
      occ.kind = CrossKind::touch_right;
    } else {
      continue;
    }
    if (occ.kind != CrossKind::touch_right) {
      occ.prefix_part = tp.substr(j, deletion ? i - 1 : i);
    }
    if (occ.kind != CrossKind::touch_left) occ.suffix_part = tp.substr(i, k);
    out.push_back(std::move(occ));
  }
  return out;
}

}  // namespace cdawg
