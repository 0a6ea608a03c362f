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

#ifndef CDAWG_GRAMMAR_HPP
#define CDAWG_GRAMMAR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cdawg/cdawg.hpp"
#include "cdawg/text.hpp"

namespace cdawg {

using RuleId = std::int32_t;

class MalformedGrammar : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Either a terminal symbol or a reference to a rule.
class Symbol {
 public:
  static Symbol terminal(char c) { return Symbol(true, c, 0); }
  static Symbol nonterminal(RuleId r) { return Symbol(false, '\0', r); }

  bool is_terminal() const { return terminal_; }
  char symbol() const { return symbol_; }
  RuleId rule() const { return rule_; }

  friend bool operator==(const Symbol&, const Symbol&) = default;

 private:
  Symbol(bool terminal, char c, RuleId r) : terminal_(terminal), symbol_(c), rule_(r) {}

  bool terminal_;
  char symbol_;
  RuleId rule_;
};

struct Rule {
  RuleId id = 0;
  std::vector<Symbol> rhs;
  /// Originating graph node; -1 when the rule was parsed from a document.
  NodeId node = -1;

  friend bool operator==(const Rule& a, const Rule& b) {
    return a.id == b.id && a.rhs == b.rhs;
  }
};

/// A straight-line grammar. Rules are kept in ascending id order; every
/// rule reference must resolve and every right-hand side is non-empty.
/// Acyclicity is checked on expansion.
class Grammar {
 public:
  Grammar(std::vector<Rule> rules, RuleId start);

  const std::vector<Rule>& rules() const { return rules_; }
  const Rule& rule(RuleId id) const;
  bool has_rule(RuleId id) const;
  RuleId start() const { return start_; }

  /// Total length of all right-hand sides.
  std::size_t size() const;

  /// Structural equality; originating nodes are ignored.
  friend bool operator==(const Grammar& a, const Grammar& b) {
    return a.start_ == b.start_ && a.rules_ == b.rules_;
  }

 private:
  std::vector<Rule> rules_;
  RuleId start_;
};

/// One rule per non-source node; the right-hand side lists the node's
/// in-edges by decreasing spell length |longest(src)| + |label|, a terminal
/// (the label's first symbol) for edges leaving the source. Ids follow a
/// depth-first post-order from the sink, so references always point to
/// smaller ids.
Grammar derive(const Cdawg& c);

/// Drops every rule with a single right-hand symbol and splices that symbol
/// into its uses, then renumbers. The start rule survives only for T = "$".
Grammar eliminate_units(const Grammar& g);

/// Full expansion of the start rule. Throws MalformedGrammar on cycles.
Text expand(const Grammar& g);

/// Expansion of one rule.
std::string expand_rule(const Grammar& g, RuleId id);

/// Line-oriented text format, see README.
std::string serialize(const Grammar& g);
Grammar parse(std::string_view document);

/// G(T): size of eliminate_units(derive(CDAWG(T))).
std::size_t grammar_size(const Text& t);

/// The grammar with unit rules removed, built through the suffix-tree route.
Grammar cdawg_grammar(const Text& t);

}  // namespace cdawg

#endif  // CDAWG_GRAMMAR_HPP
