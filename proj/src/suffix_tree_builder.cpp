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
#include <cstdint>
#include <limits>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "cdawg/cdawg.hpp"

namespace cdawg {

namespace {

using Index = std::int32_t;

// Prefix doubling; O(n log^2 n), which is plenty for the corpus sizes here.
std::vector<Index> suffix_array(std::string_view s) {
  const auto n = static_cast<Index>(s.size());
  std::vector<Index> sa(n);
  std::vector<Index> rank(n);
  std::vector<Index> next(n);
  std::iota(sa.begin(), sa.end(), 0);
  for (Index i = 0; i < n; ++i) rank[i] = static_cast<unsigned char>(s[i]);
  for (Index k = 1;; k <<= 1) {
    auto key = [&](Index i) {
      return std::pair<Index, Index>(rank[i], i + k < n ? rank[i + k] : -1);
    };
    std::sort(sa.begin(), sa.end(), [&](Index a, Index b) { return key(a) < key(b); });
    next[sa[0]] = 0;
    for (Index i = 1; i < n; ++i) {
      next[sa[i]] = next[sa[i - 1]] + (key(sa[i - 1]) < key(sa[i]) ? 1 : 0);
    }
    rank.swap(next);
    if (n == 0 || rank[sa[n - 1]] == n - 1) break;
  }
  return sa;
}

// lcp[i] = LCP(suffix sa[i-1], suffix sa[i]); lcp[0] = 0. Kasai et al.
std::vector<Index> lcp_array(std::string_view s, const std::vector<Index>& sa) {
  const auto n = static_cast<Index>(s.size());
  std::vector<Index> rank(n);
  std::vector<Index> lcp(n, 0);
  for (Index i = 0; i < n; ++i) rank[sa[i]] = i;
  Index h = 0;
  for (Index i = 0; i < n; ++i) {
    if (rank[i] > 0) {
      Index j = sa[rank[i] - 1];
      while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
      lcp[rank[i]] = h;
      if (h > 0) --h;
    } else {
      h = 0;
    }
  }
  return lcp;
}

struct TreeNode {
  Index depth = 0;
  Index parent = -1;
  std::vector<Index> children;  // in suffix-array order
  Index leaves = 0;
  Index min_begin = std::numeric_limits<Index>::max();
};

// Builds the suffix tree by sweeping suffixes in lexicographic order and
// keeping the rightmost root-to-leaf path on a stack.
std::vector<TreeNode> suffix_tree(std::string_view s) {
  const auto n = static_cast<Index>(s.size());
  auto sa = suffix_array(s);
  auto lcp = lcp_array(s, sa);

  std::vector<TreeNode> tree(1);  // root
  std::vector<Index> path{0};
  for (Index i = 0; i < n; ++i) {
    const Index shared = i == 0 ? 0 : lcp[i];
    Index last = -1;
    while (tree[path.back()].depth > shared) {
      last = path.back();
      path.pop_back();
    }
    if (tree[path.back()].depth < shared) {
      auto inner = static_cast<Index>(tree.size());
      tree.push_back(TreeNode{shared, path.back(), {}, 0, std::numeric_limits<Index>::max()});
      auto& siblings = tree[path.back()].children;
      siblings.back() = inner;  // `last` was the most recent child
      tree[inner].children.push_back(last);
      tree[last].parent = inner;
      path.push_back(inner);
    }
    auto leaf = static_cast<Index>(tree.size());
    tree.push_back(TreeNode{n - sa[i], path.back(), {}, 1, sa[i]});
    tree[path.back()].children.push_back(leaf);
    path.push_back(leaf);
  }

  // Parents can be created after their children, so aggregate in an
  // explicit post-order.
  std::vector<std::pair<Index, bool>> stack{{0, false}};
  while (!stack.empty()) {
    auto [v, expanded] = stack.back();
    stack.pop_back();
    if (tree[v].children.empty()) continue;
    if (!expanded) {
      stack.emplace_back(v, true);
      for (Index c : tree[v].children) stack.emplace_back(c, false);
      continue;
    }
    for (Index c : tree[v].children) {
      tree[v].leaves += tree[c].leaves;
      tree[v].min_begin = std::min(tree[v].min_begin, tree[c].min_begin);
    }
  }
  return tree;
}

}  // namespace

Cdawg build_via_suffix_tree(const Text& t) {
  std::string_view s = t.view();
  auto tree = suffix_tree(s);

  // Suffix-tree nodes with the same end-position set collapse into one graph
  // node; the set is identified by (occurrence count, leftmost end).
  auto key_of = [&](Index v) -> std::uint64_t {
    if (v == 0) return std::numeric_limits<std::uint64_t>::max();
    const TreeNode& node = tree[v];
    auto end = static_cast<std::uint64_t>(node.min_begin + node.depth - 1);
    return (static_cast<std::uint64_t>(node.leaves) << 32) | end;
  };
  std::unordered_map<std::uint64_t, Index> representative;
  for (Index v = 0; v < static_cast<Index>(tree.size()); ++v) {
    auto [it, fresh] = representative.emplace(key_of(v), v);
    if (!fresh && tree[it->second].depth < tree[v].depth) it->second = v;
  }

  std::vector<Index> reps;
  reps.reserve(representative.size());
  for (const auto& [key, v] : representative) reps.push_back(v);
  auto spelled = [&](Index v) {
    return s.substr(static_cast<std::size_t>(tree[v].min_begin),
                    static_cast<std::size_t>(tree[v].depth));
  };
  std::sort(reps.begin(), reps.end(), [&](Index a, Index b) {
    if (tree[a].depth != tree[b].depth) return tree[a].depth < tree[b].depth;
    auto x = spelled(a);
    auto y = spelled(b);
    return std::lexicographical_compare(
        x.begin(), x.end(), y.begin(), y.end(), [](char l, char r) {
          return static_cast<unsigned char>(l) < static_cast<unsigned char>(r);
        });
  });

  std::unordered_map<std::uint64_t, NodeId> node_of_key;
  std::vector<Node> nodes;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const TreeNode& tn = tree[reps[i]];
    Node node;
    node.length = static_cast<std::size_t>(tn.depth);
    node.begin = tn.depth == 0 ? 1 : static_cast<Position>(tn.min_begin) + 1;
    nodes.push_back(node);
    node_of_key.emplace(key_of(reps[i]), static_cast<NodeId>(i));
  }

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const TreeNode& from = tree[reps[i]];
    for (Index c : from.children) {
      const TreeNode& to = tree[c];
      Edge e;
      e.src = static_cast<NodeId>(i);
      e.dst = node_of_key.at(key_of(c));
      e.label_begin = static_cast<Position>(to.min_begin + from.depth) + 1;
      e.label_end = static_cast<Position>(to.min_begin + to.depth);
      edges.push_back(e);
    }
  }
  return Cdawg(t, std::move(nodes), std::move(edges));
}

}  // namespace cdawg
