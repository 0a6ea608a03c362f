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

#include "cdawg/grammar.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace cdawg {

Grammar::Grammar(std::vector<Rule> rules, RuleId start)
    : rules_(std::move(rules)), start_(start) {
  std::sort(rules_.begin(), rules_.end(),
            [](const Rule& a, const Rule& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (i > 0 && rules_[i].id == rules_[i - 1].id) {
      throw MalformedGrammar("duplicate rule R" + std::to_string(rules_[i].id));
    }
    if (rules_[i].rhs.empty()) {
      throw MalformedGrammar("rule R" + std::to_string(rules_[i].id) +
                             " has an empty right-hand side");
    }
  }
  for (const Rule& r : rules_) {
    for (const Symbol& s : r.rhs) {
      if (!s.is_terminal() && !has_rule(s.rule())) {
        throw MalformedGrammar("rule R" + std::to_string(r.id) +
                               " references undefined R" + std::to_string(s.rule()));
      }
    }
  }
  if (!has_rule(start_)) {
    throw MalformedGrammar("start rule R" + std::to_string(start_) + " is undefined");
  }
}

bool Grammar::has_rule(RuleId id) const {
  auto it = std::lower_bound(rules_.begin(), rules_.end(), id,
                             [](const Rule& r, RuleId key) { return r.id < key; });
  return it != rules_.end() && it->id == id;
}

const Rule& Grammar::rule(RuleId id) const {
  auto it = std::lower_bound(rules_.begin(), rules_.end(), id,
                             [](const Rule& r, RuleId key) { return r.id < key; });
  if (it == rules_.end() || it->id != id) {
    throw MalformedGrammar("undefined rule R" + std::to_string(id));
  }
  return *it;
}

std::size_t Grammar::size() const {
  std::size_t total = 0;
  for (const Rule& r : rules_) total += r.rhs.size();
  return total;
}

namespace {

// Post-order numbering from `root`, visiting children in right-hand-side
// order. `children(v)` lists the nonterminal children of v.
template <typename Children>
std::unordered_map<RuleId, RuleId> postorder_ids(RuleId root, Children children) {
  std::unordered_map<RuleId, RuleId> id;
  std::unordered_map<RuleId, bool> entered;
  std::vector<std::pair<RuleId, std::size_t>> stack{{root, 0}};
  entered[root] = true;
  RuleId next = 0;
  while (!stack.empty()) {
    auto& [v, k] = stack.back();
    const std::vector<RuleId>& kids = children(v);
    if (k < kids.size()) {
      RuleId c = kids[k++];
      if (!entered[c]) {
        entered[c] = true;
        stack.emplace_back(c, 0);
      }
      continue;
    }
    id[v] = ++next;
    stack.pop_back();
  }
  return id;
}

std::vector<RuleId> nonterminals_of(const std::vector<Symbol>& rhs) {
  std::vector<RuleId> out;
  for (const Symbol& s : rhs) {
    if (!s.is_terminal()) out.push_back(s.rule());
  }
  return out;
}

}  // namespace

Grammar derive(const Cdawg& c) {
  const auto count = static_cast<NodeId>(c.node_count());
  // Right-hand sides keyed by node id for now; renumbered below.
  std::vector<std::vector<Symbol>> rhs(count);
  for (NodeId v = 1; v < count; ++v) {
    std::vector<std::pair<std::size_t, Symbol>> entries;
    for (EdgeId id : c.in_edges(v)) {
      const Edge& e = c.edge(id);
      std::size_t spell = c.node(e.src).length + e.label_length();
      Symbol s = e.src == c.source() ? Symbol::terminal(c.text().at(e.label_begin))
                                     : Symbol::nonterminal(e.src);
      entries.emplace_back(spell, s);
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t i = 1; i < entries.size(); ++i) {
      if (entries[i].first == entries[i - 1].first) {
        throw std::logic_error("in-edges of one node share a spell length");
      }
    }
    for (auto& [spell, s] : entries) rhs[v].push_back(s);
  }

  std::vector<std::vector<RuleId>> kids(count);
  for (NodeId v = 1; v < count; ++v) kids[v] = nonterminals_of(rhs[v]);
  auto id = postorder_ids(c.sink(), [&](RuleId v) -> const std::vector<RuleId>& {
    return kids[v];
  });

  std::vector<Rule> rules;
  for (NodeId v = 1; v < count; ++v) {
    Rule r;
    r.id = id.at(v);
    r.node = v;
    for (const Symbol& s : rhs[v]) {
      r.rhs.push_back(s.is_terminal() ? s : Symbol::nonterminal(id.at(s.rule())));
    }
    rules.push_back(std::move(r));
  }
  return Grammar(std::move(rules), id.at(c.sink()));
}

Grammar eliminate_units(const Grammar& g) {
  auto resolve = [&](Symbol s) {
    while (!s.is_terminal() && s.rule() != g.start() && g.rule(s.rule()).rhs.size() == 1) {
      s = g.rule(s.rule()).rhs.front();
    }
    return s;
  };

  RuleId start = g.start();
  if (const Rule& sr = g.rule(start); sr.rhs.size() == 1 && !sr.rhs.front().is_terminal()) {
    Symbol target = sr.rhs.front();
    while (!target.is_terminal() && g.rule(target.rule()).rhs.size() == 1 &&
           !g.rule(target.rule()).rhs.front().is_terminal()) {
      target = g.rule(target.rule()).rhs.front();
    }
    start = target.rule();
  }

  std::unordered_map<RuleId, Rule> kept;
  for (const Rule& r : g.rules()) {
    if (r.id != start && r.rhs.size() == 1) continue;
    Rule copy = r;
    for (Symbol& s : copy.rhs) s = resolve(s);
    kept.emplace(r.id, std::move(copy));
  }

  std::unordered_map<RuleId, std::vector<RuleId>> kids;
  for (const auto& [rid, r] : kept) kids[rid] = nonterminals_of(r.rhs);
  auto id = postorder_ids(start, [&](RuleId v) -> const std::vector<RuleId>& {
    return kids.at(v);
  });

  std::vector<Rule> rules;
  for (auto& [rid, r] : kept) {
    auto it = id.find(rid);
    if (it == id.end()) continue;  // unreachable from the start rule
    Rule out = r;
    out.id = it->second;
    for (Symbol& s : out.rhs) {
      if (!s.is_terminal()) s = Symbol::nonterminal(id.at(s.rule()));
    }
    rules.push_back(std::move(out));
  }
  return Grammar(std::move(rules), id.at(start));
}

namespace {

// Lengths of every rule's expansion, saturating; throws on a cycle.
std::unordered_map<RuleId, std::size_t> expansion_lengths(const Grammar& g, RuleId root) {
  constexpr std::size_t kCap = std::numeric_limits<std::int32_t>::max();
  std::unordered_map<RuleId, std::size_t> length;
  std::unordered_map<RuleId, int> state;  // 1 = on stack, 2 = done
  std::vector<std::pair<RuleId, std::size_t>> stack{{root, 0}};
  state[root] = 1;
  while (!stack.empty()) {
    auto& [v, k] = stack.back();
    const auto& rhs = g.rule(v).rhs;
    if (k < rhs.size()) {
      const Symbol& s = rhs[k++];
      if (s.is_terminal()) continue;
      int& st = state[s.rule()];
      if (st == 1) {
        throw MalformedGrammar("cycle through rule R" + std::to_string(s.rule()));
      }
      if (st == 0) {
        st = 1;
        stack.emplace_back(s.rule(), 0);
      }
      continue;
    }
    std::size_t total = 0;
    for (const Symbol& s : rhs) {
      total += s.is_terminal() ? 1 : length.at(s.rule());
      total = std::min(total, kCap);
    }
    length[v] = total;
    state[v] = 2;
    stack.pop_back();
  }
  return length;
}

}  // namespace

std::string expand_rule(const Grammar& g, RuleId id) {
  auto lengths = expansion_lengths(g, id);
  if (lengths.at(id) >= static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max())) {
    throw MalformedGrammar("expansion too long");
  }
  std::string out;
  out.reserve(lengths.at(id));
  std::vector<Symbol> stack{Symbol::nonterminal(id)};
  while (!stack.empty()) {
    Symbol s = stack.back();
    stack.pop_back();
    if (s.is_terminal()) {
      out.push_back(s.symbol());
      continue;
    }
    const auto& rhs = g.rule(s.rule()).rhs;
    for (auto it = rhs.rbegin(); it != rhs.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

Text expand(const Grammar& g) {
  std::string s = expand_rule(g, g.start());
  try {
    return Text(std::move(s));
  } catch (const InvalidText& e) {
    throw MalformedGrammar(std::string("expansion is not a valid text: ") + e.what());
  }
}

Grammar cdawg_grammar(const Text& t) {
  return eliminate_units(derive(build_via_suffix_tree(t)));
}

std::size_t grammar_size(const Text& t) { return cdawg_grammar(t).size(); }

}  // namespace cdawg
