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

#ifndef CDAWG_CDAWG_HPP
#define CDAWG_CDAWG_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cdawg/substring_catalog.hpp"
#include "cdawg/text.hpp"

namespace cdawg {

using NodeId = std::int32_t;
using EdgeId = std::int32_t;

class UnknownNode : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A node is identified by the longest string of its class, stored as the
/// span of that string's leftmost occurrence.
struct Node {
  Position begin = 1;
  std::size_t length = 0;
};

/// label = T[label_begin..label_end], 1-based inclusive, never empty.
struct Edge {
  NodeId src = 0;
  NodeId dst = 0;
  Position label_begin = 1;
  Position label_end = 1;

  std::size_t label_length() const { return label_end - label_begin + 1; }
};

/// Compact directed acyclic word graph of a Text.
///
/// Nodes are the maximal substrings M(T), numbered by (length, lexicographic)
/// order, so node 0 is the source ε and the last node is the sink T. Edges
/// are grouped by source and ordered by the first symbol of their label.
class Cdawg {
 public:
  /// `nodes` must already be in (length, lexicographic) order.
  Cdawg(Text text, std::vector<Node> nodes, std::vector<Edge> edges);

  const Text& text() const { return text_; }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  NodeId source() const { return 0; }
  NodeId sink() const { return static_cast<NodeId>(nodes_.size()) - 1; }

  const Node& node(NodeId v) const;
  std::string_view longest(NodeId v) const;
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::string_view label(const Edge& e) const;

  std::span<const EdgeId> out_edges(NodeId v) const;
  std::span<const EdgeId> in_edges(NodeId v) const;
  std::size_t out_degree(NodeId v) const { return out_edges(v).size(); }
  std::size_t in_degree(NodeId v) const { return in_edges(v).size(); }

  /// The out-edge of `v` whose label starts with `c`.
  std::optional<EdgeId> out_edge(NodeId v, char c) const;
  /// The node whose longest string is exactly `x`.
  std::optional<NodeId> find_node(std::string_view x) const;

 private:
  void check(NodeId v) const;

  Text text_;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_offsets_;
  std::vector<EdgeId> out_ids_;
  std::vector<EdgeId> in_ids_;
  std::vector<std::size_t> in_offsets_;
};

struct Metrics {
  std::size_t e = 0;
  std::size_t v1 = 0;
  std::size_t node_count = 0;

  friend bool operator==(const Metrics&, const Metrics&) = default;
};

/// Builds the graph straight from its characterisation: nodes are M(T); for
/// every node x and right-extension a there is one edge to the node whose
/// end-position class contains rrep(xa). Quadratic time and space.
Cdawg build(const Text& t);

/// Same, reusing a catalog already built over `t`.
Cdawg build(const Text& t, const SubstringCatalog& catalog);

/// Builds the suffix tree from a suffix array and LCP array, then merges the
/// nodes that share an end-position set. The route for long inputs.
Cdawg build_via_suffix_tree(const Text& t);

Metrics metrics(const Cdawg& c);

/// All edges entering `v`. Throws UnknownNode for an invalid id.
std::vector<Edge> in_edges(const Cdawg& c, NodeId v);

/// Occurrence begins of `pattern`, ascending, found by walking the graph.
std::vector<Position> search(const Cdawg& c, std::string_view pattern);

/// Deterministic Graphviz rendering.
std::string to_dot(const Cdawg& c);

/// Compares node string-sets and labeled edge string-sets. Returns a
/// description of the first difference, or nothing when they agree.
std::optional<std::string> structural_difference(const Cdawg& a, const Cdawg& b);

}  // namespace cdawg

#endif  // CDAWG_CDAWG_HPP
