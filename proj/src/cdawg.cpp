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

#include "cdawg/cdawg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "cdawg/oracle.hpp"
#include "cdawg/substring_catalog.hpp"

namespace cdawg {

namespace {

unsigned char byte(char c) { return static_cast<unsigned char>(c); }

std::uint64_t class_key(std::size_t count, std::int64_t first_end) {
  return (static_cast<std::uint64_t>(count) << 32) ^
         static_cast<std::uint64_t>(first_end + 1);
}

}  // namespace

Cdawg::Cdawg(Text text, std::vector<Node> nodes, std::vector<Edge> edges)
    : text_(std::move(text)), nodes_(std::move(nodes)), edges_(std::move(edges)) {
  const auto count = static_cast<NodeId>(nodes_.size());
  for (const Edge& e : edges_) {
    if (e.src < 0 || e.src >= count || e.dst < 0 || e.dst >= count) {
      throw UnknownNode("edge endpoint outside node range");
    }
    if (e.label_end < e.label_begin || e.label_end > text_.size()) {
      throw std::invalid_argument("edge label must be a non-empty span of the text");
    }
  }
  std::sort(edges_.begin(), edges_.end(), [this](const Edge& a, const Edge& b) {
    if (a.src != b.src) return a.src < b.src;
    return byte(text_.at(a.label_begin)) < byte(text_.at(b.label_begin));
  });

  out_offsets_.assign(nodes_.size() + 1, 0);
  in_offsets_.assign(nodes_.size() + 1, 0);
  for (const Edge& e : edges_) {
    ++out_offsets_[e.src + 1];
    ++in_offsets_[e.dst + 1];
  }
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    out_offsets_[v + 1] += out_offsets_[v];
    in_offsets_[v + 1] += in_offsets_[v];
  }
  out_ids_.resize(edges_.size());
  std::iota(out_ids_.begin(), out_ids_.end(), 0);
  in_ids_.resize(edges_.size());
  std::vector<std::size_t> fill(in_offsets_.begin(), in_offsets_.end() - 1);
  for (EdgeId id = 0; id < static_cast<EdgeId>(edges_.size()); ++id) {
    in_ids_[fill[edges_[id].dst]++] = id;
  }
}

void Cdawg::check(NodeId v) const {
  if (v < 0 || v >= static_cast<NodeId>(nodes_.size())) {
    throw UnknownNode("no node with id " + std::to_string(v));
  }
}

const Node& Cdawg::node(NodeId v) const {
  check(v);
  return nodes_[v];
}

std::string_view Cdawg::longest(NodeId v) const {
  const Node& n = node(v);
  if (n.length == 0) return {};
  return text_.substr(n.begin, n.begin + n.length - 1);
}

std::string_view Cdawg::label(const Edge& e) const {
  return text_.substr(e.label_begin, e.label_end);
}

std::span<const EdgeId> Cdawg::out_edges(NodeId v) const {
  check(v);
  return std::span<const EdgeId>(out_ids_).subspan(
      out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]);
}

std::span<const EdgeId> Cdawg::in_edges(NodeId v) const {
  check(v);
  return std::span<const EdgeId>(in_ids_).subspan(
      in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]);
}

std::optional<EdgeId> Cdawg::out_edge(NodeId v, char c) const {
  check(v);
  auto first = edges_.begin() + static_cast<std::ptrdiff_t>(out_offsets_[v]);
  auto last = edges_.begin() + static_cast<std::ptrdiff_t>(out_offsets_[v + 1]);
  auto it = std::lower_bound(first, last, c, [this](const Edge& e, char key) {
    return byte(text_.at(e.label_begin)) < byte(key);
  });
  if (it == last || text_.at(it->label_begin) != c) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

std::optional<NodeId> Cdawg::find_node(std::string_view x) const {
  NodeId lo = 0;
  NodeId hi = static_cast<NodeId>(nodes_.size());
  while (lo < hi) {
    NodeId mid = lo + (hi - lo) / 2;
    std::string_view m = longest(mid);
    if (oracle::shortlex_less(m, x)) {
      lo = mid + 1;
    } else if (oracle::shortlex_less(x, m)) {
      hi = mid;
    } else {
      return mid;
    }
  }
  return std::nullopt;
}

Cdawg build(const Text& t) {
  SubstringCatalog catalog(t.view());
  return build(t, catalog);
}

Cdawg build(const Text& t, const SubstringCatalog& catalog) {
  using EntryId = SubstringCatalog::EntryId;

  std::vector<EntryId> maximal;
  for (EntryId id = 0; id < catalog.size(); ++id) {
    if (catalog.is_maximal(id)) maximal.push_back(id);
  }
  std::sort(maximal.begin(), maximal.end(), [&](EntryId a, EntryId b) {
    return oracle::shortlex_less(catalog.value(a), catalog.value(b));
  });

  // Strings sharing an end-position set are exactly those sharing both the
  // occurrence count and the leftmost end, since such strings are suffixes
  // of one another.
  std::unordered_map<std::uint64_t, NodeId> node_of_class;
  std::vector<Node> nodes;
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    EntryId id = maximal[i];
    Node n;
    n.length = catalog.length(id);
    n.begin = n.length == 0 ? 1 : static_cast<Position>(catalog.begins(id).front()) + 1;
    nodes.push_back(n);
    if (n.length > 0) {
      node_of_class.emplace(class_key(catalog.count(id), catalog.first_end(id)),
                            static_cast<NodeId>(i));
    }
  }

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    EntryId x = maximal[i];
    for (EntryId w = catalog.first_child(x);
         w < catalog.first_child(x) + static_cast<EntryId>(catalog.right_degree(x));
         ++w) {
      EntryId r = catalog.rrep(w);
      Edge e;
      e.src = static_cast<NodeId>(i);
      e.dst = node_of_class.at(class_key(catalog.count(r), catalog.first_end(r)));
      auto lead = static_cast<Position>(catalog.begins(r).front());
      e.label_begin = lead + catalog.length(x) + 1;
      e.label_end = lead + catalog.length(r);
      edges.push_back(e);
    }
  }
  return Cdawg(t, std::move(nodes), std::move(edges));
}

Metrics metrics(const Cdawg& c) {
  Metrics m;
  m.e = c.edge_count();
  m.node_count = c.node_count();
  for (NodeId v = 0; v < static_cast<NodeId>(c.node_count()); ++v) {
    if (c.in_degree(v) == 1) ++m.v1;
  }
  return m;
}

std::vector<Edge> in_edges(const Cdawg& c, NodeId v) {
  std::vector<Edge> out;
  for (EdgeId id : c.in_edges(v)) out.push_back(c.edge(id));
  return out;
}

std::vector<Position> search(const Cdawg& c, std::string_view pattern) {
  std::vector<Position> out;
  if (pattern.empty()) return out;

  NodeId at = c.source();
  std::size_t matched = 0;
  std::size_t rest_on_edge = 0;
  while (matched < pattern.size()) {
    auto id = c.out_edge(at, pattern[matched]);
    if (!id) return out;
    std::string_view lab = c.label(c.edge(*id));
    std::size_t k = 0;
    while (k < lab.size() && matched < pattern.size()) {
      if (lab[k] != pattern[matched]) return out;
      ++k;
      ++matched;
    }
    rest_on_edge = lab.size() - k;
    at = c.edge(*id).dst;
  }

  // Every path from the locus to the sink completes exactly one suffix that
  // starts with the pattern; its remaining length fixes the begin.
  const std::size_t n = c.text().size();
  std::vector<std::pair<NodeId, std::size_t>> stack{{at, rest_on_edge}};
  while (!stack.empty()) {
    auto [v, tail] = stack.back();
    stack.pop_back();
    if (v == c.sink()) {
      out.push_back(n - tail - pattern.size() + 1);
      continue;
    }
    for (EdgeId id : c.out_edges(v)) {
      const Edge& e = c.edge(id);
      stack.emplace_back(e.dst, tail + e.label_length());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') {
      out.push_back('\\');
      out.push_back(ch);
    } else {
      std::string p = printable(ch);
      if (p.size() > 1) out.push_back('\\');
      out += p;
    }
  }
  return out;
}

}  // namespace

std::string to_dot(const Cdawg& c) {
  constexpr std::size_t kMaxShown = 16;
  std::ostringstream os;
  os << "digraph CDAWG {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=box];\n";
  for (NodeId v = 0; v < static_cast<NodeId>(c.node_count()); ++v) {
    std::string_view s = c.longest(v);
    std::string shown = s.empty() ? std::string("\xCE\xB5") : dot_escape(s.substr(0, kMaxShown));
    if (s.size() > kMaxShown) shown += "..";
    os << "  n" << v << " [label=\"" << v << ":" << shown << "\"];\n";
  }
  for (const Edge& e : c.edges()) {
    os << "  n" << e.src << " -> n" << e.dst << " [label=\"" << dot_escape(c.label(e))
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::optional<std::string> structural_difference(const Cdawg& a, const Cdawg& b) {
  if (a.node_count() != b.node_count()) {
    return "node count " + std::to_string(a.node_count()) + " vs " +
           std::to_string(b.node_count());
  }
  for (NodeId v = 0; v < static_cast<NodeId>(a.node_count()); ++v) {
    if (a.longest(v) != b.longest(v)) {
      return "node " + std::to_string(v) + " spells '" + printable(a.longest(v)) +
             "' vs '" + printable(b.longest(v)) + "'";
    }
  }
  using Labeled = std::tuple<std::string, std::string, std::string>;
  auto labeled = [](const Cdawg& c) {
    std::vector<Labeled> out;
    for (const Edge& e : c.edges()) {
      out.emplace_back(std::string(c.longest(e.src)), std::string(c.label(e)),
                       std::string(c.longest(e.dst)));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  auto ea = labeled(a);
  auto eb = labeled(b);
  if (ea.size() != eb.size()) {
    return "edge count " + std::to_string(ea.size()) + " vs " + std::to_string(eb.size());
  }
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i] != eb[i]) {
      return "edge '" + printable(std::get<0>(ea[i])) + "' -" +
             printable(std::get<1>(ea[i])) + "-> differs from '" +
             printable(std::get<0>(eb[i])) + "' -" + printable(std::get<1>(eb[i])) + "->";
    }
  }
  return std::nullopt;
}

}  // namespace cdawg
