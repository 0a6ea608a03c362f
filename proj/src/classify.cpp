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
#include <map>
#include <set>

#include "cdawg/oracle.hpp"
#include "cdawg/sensitivity.hpp"

namespace cdawg {

namespace {

void sort_shortlex(std::vector<std::string>& v) {
  std::sort(v.begin(), v.end(), [](const std::string& a, const std::string& b) {
    return oracle::shortlex_less(a, b);
  });
}

bool contains_sorted(const std::vector<std::string>& v, std::string_view x) {
  return std::binary_search(v.begin(), v.end(), x, [](std::string_view a, std::string_view b) {
    return oracle::shortlex_less(a, b);
  });
}

// Right-extensions of x in T', split by whether some crossing occurrence
// precedes them and whether some non-crossing one does.
struct ExtensionSplit {
  std::string at_crossing;
  std::string at_other;
  bool all_crossing = true;
};

ExtensionSplit split_extensions(std::string_view x, const EditScenario& s,
                                const std::vector<CrossingOcc>& crossing) {
  ExtensionSplit out;
  const SubstringCatalog& cat = s.after->catalog();
  const Text& tp = s.t_prime();
  auto id = cat.find(x);
  std::set<Position> crossing_begins;
  for (const auto& c : crossing) crossing_begins.insert(c.begin);
  std::set<char> at_crossing, at_other;
  for (std::int32_t b : cat.begins(*id)) {
    const Position j = static_cast<Position>(b) + 1;
    const Position k = j + x.size() - 1;
    const bool crossed = crossing_begins.count(j) > 0;
    if (!crossed) out.all_crossing = false;
    if (k >= tp.size()) continue;
    (crossed ? at_crossing : at_other).insert(tp.at(k + 1));
  }
  out.at_crossing.assign(at_crossing.begin(), at_crossing.end());
  out.at_other.assign(at_other.begin(), at_other.end());
  return out;
}

// Extends x to the left in T until it is left-maximal there.
std::optional<std::string> left_maximal_extension(std::string_view x, const Analysis& a) {
  const SubstringCatalog& cat = a.catalog();
  auto id = cat.find(x);
  if (!id) return std::nullopt;
  std::string s(x);
  while (!cat.is_left_maximal(*id)) {
    s.insert(s.begin(), cat.unique_left_symbol(*id));
    id = cat.find(s);
  }
  return s;
}

}  // namespace

std::string_view to_string(DegreeClass c) {
  switch (c) {
    case DegreeClass::max:
      return "max";
    case DegreeClass::mid:
      return "mid";
    case DegreeClass::less:
      return "less";
    case DegreeClass::exceeds:
      return "exceeds";
  }
  return "?";
}

const AnchoredNode* NodePartition::find_anchored(std::string_view x) const {
  for (const auto& a : anchored) {
    if (a.x == x) return &a;
  }
  return nullptr;
}

bool NodePartition::in_n1(std::string_view x) const { return contains_sorted(n1, x); }

NodePartition classify_nodes(const EditScenario& s, NaddReading reading) {
  const Analysis& before = *s.before;
  const Analysis& after = *s.after;
  const Cdawg& g = after.graph();
  NodePartition out;

  std::map<std::string, std::vector<CrossingOcc>> crossing;
  std::map<std::string, ExtensionSplit> split;
  for (NodeId v = 0; v < g.sink(); ++v) {
    std::string x(g.longest(v));
    ++out.maximal_repeats_after;
    if (!x.empty()) {
      crossing[x] = crossing_occurrences(x, s);
      split[x] = split_extensions(x, s, crossing[x]);
    }
    if (before.is_maximal(x)) {
      out.q.push_back(x);
      if (!before.is_maximal_repeat(x)) ++out.q_divergence;
      continue;
    }
    out.n.push_back(x);
    auto id = before.catalog().find(x);
    if (id && before.catalog().is_right_maximal(*id)) {
      out.n1.push_back(x);
    } else if (id && before.catalog().is_left_maximal(*id)) {
      out.n2.push_back(x);
    } else {
      out.n3.push_back(x);
      const ExtensionSplit& sp = split[x];
      bool from_crossing = std::all_of(sp.at_other.begin(), sp.at_other.end(), [&](char c) {
        return sp.at_crossing.find(c) != std::string::npos;
      });
      bool add = from_crossing && (reading == NaddReading::extensions_only || sp.all_crossing);
      (add ? out.nadd : out.nbase).push_back(x);
    }
  }

  // Anchors, longest first so that the longer members are known.
  std::vector<std::string> members = out.n1;
  members.insert(members.end(), out.nbase.begin(), out.nbase.end());
  std::sort(members.begin(), members.end(), [](const std::string& a, const std::string& b) {
    return oracle::shortlex_less(b, a);
  });
  for (const auto& x : members) {
    AnchoredNode node;
    node.x = x;
    const auto& occ = crossing[x];
    node.crossed = !occ.empty();
    if (node.crossed) {
      node.s_left = occ.front().suffix_part;
      node.s_right = occ.back().suffix_part;
    }
    out.anchored.push_back(std::move(node));
  }
  for (auto& node : out.anchored) {
    if (!node.crossed) continue;
    for (const auto& other : out.anchored) {
      if (other.crossed && other.x.size() > node.x.size() &&
          (other.s_left == node.s_left || other.s_right == node.s_left)) {
        node.uses_right = true;
        break;
      }
    }
    node.u = left_maximal_extension(node.anchor(), before);
  }
  for (auto& node : out.anchored) {
    node.degree_after = after.degree(node.x);
    out.degree_sum_n1_nbase += node.degree_after;
    if (!node.u) {
      node.degree_class = DegreeClass::less;
      ++out.nless;
      continue;
    }
    node.u_maximal = before.is_maximal(*node.u);
    node.degree_u = before.degree(*node.u);
    auto d = static_cast<std::int64_t>(node.degree_after) - static_cast<std::int64_t>(node.degree_u);
    if (d > 2) {
      node.degree_class = DegreeClass::exceeds;
      ++out.nexceeds;
    } else if (d == 2) {
      node.degree_class = DegreeClass::max;
      ++out.nmax;
    } else if (d == 1) {
      node.degree_class = DegreeClass::mid;
      ++out.nmid;
    } else {
      node.degree_class = DegreeClass::less;
      ++out.nless;
    }
  }

  const Text& tp = s.t_prime();
  for (const auto& x : out.q) {
    if (x.empty()) continue;
    for (const auto& c : crossing[x]) {
      if (c.end < tp.size() && !before.contains(x + tp.at(c.end + 1))) {
        out.qnew.push_back(x);
        break;
      }
    }
  }

  auto count_extensions = [&](const std::string& x) {
    const ExtensionSplit& sp = split[x];
    out.degree_sum_n2_qnew += after.degree(x);
    out.uc += sp.at_other.size();
    for (char c : sp.at_crossing) {
      if (sp.at_other.find(c) == std::string::npos) ++out.wc;
      if (!before.contains(x + c)) ++out.wc_new;
    }
  };
  for (const auto& x : out.n2) count_extensions(x);
  for (const auto& x : out.qnew) count_extensions(x);
  for (const auto& x : out.nadd) out.degree_sum_nadd += after.degree(x);

  for (auto* v : {&out.n, &out.n1, &out.n2, &out.n3, &out.nadd, &out.nbase, &out.q, &out.qnew}) {
    sort_shortlex(*v);
  }
  return out;
}

std::string_view to_string(InDegOneClass c) {
  switch (c) {
    case InDegOneClass::v1:
      return "V1";
    case InDegOneClass::va:
      return "VA";
    case InDegOneClass::vb:
      return "VB";
    case InDegOneClass::vc_one:
      return "VC_I";
    case InDegOneClass::vc_two:
      return "VC_II";
    case InDegOneClass::unchanged:
      return "unchanged";
  }
  return "?";
}

std::size_t InDegOnePartition::count(InDegOneClass c) const {
  return static_cast<std::size_t>(
      std::count_if(nodes.begin(), nodes.end(), [c](const InDegOneNode& n) { return n.cls == c; }));
}

namespace {

struct Pick {
  NodeId node;
  std::size_t label_length;
};

// In-neighbour of z in `g` whose occurrence ends rightmost inside z; the
// shortest one on ties. `skip` is left out unless it is the only choice.
std::optional<Pick> rightmost_in_neighbour(const Cdawg& g, NodeId z, std::optional<NodeId> skip) {
  std::optional<Pick> best;
  for (EdgeId id : g.in_edges(z)) {
    const Edge& e = g.edge(id);
    if (skip && e.src == *skip) continue;
    Pick p{e.src, e.label_length()};
    if (!best || p.label_length < best->label_length ||
        (p.label_length == best->label_length &&
         g.node(p.node).length < g.node(best->node).length)) {
      best = p;
    }
  }
  return best;
}

}  // namespace

InDegOnePartition classify_indegree_one(const EditScenario& s, const NodePartition& nodes) {
  const Analysis& before = *s.before;
  const Analysis& after = *s.after;
  const Cdawg& g = before.graph();
  const Cdawg& gp = after.graph();
  InDegOnePartition out;

  for (NodeId v = 1; v < static_cast<NodeId>(g.node_count()); ++v) {
    if (g.in_degree(v) != 1) continue;
    InDegOneNode node;
    node.x = std::string(g.longest(v));
    const std::string& x = node.x;
    if (!after.is_maximal_repeat(x)) {
      node.cls = InDegOneClass::v1;
      out.nodes.push_back(std::move(node));
      continue;
    }
    const NodeId xv = *after.node(x);
    if (gp.in_degree(xv) == 1) {
      node.cls = InDegOneClass::unchanged;
      out.nodes.push_back(std::move(node));
      continue;
    }
    node.y = std::string(g.longest(g.edge(g.in_edges(v).front()).src));
    for (std::size_t cut = 1; cut <= x.size(); ++cut) {
      std::string_view suffix = std::string_view(x).substr(cut);
      if (before.is_maximal_repeat(suffix)) {
        node.q = std::string(suffix);
        break;
      }
    }
    if (!after.is_maximal_repeat(node.y)) {
      node.cls = InDegOneClass::va;
    } else if (!after.is_maximal_repeat(node.q)) {
      node.cls = InDegOneClass::vb;
    } else {
      const Position i_q = x.size() - node.q.size() + 1;
      const Position j_y = node.y.size();
      const auto yv = after.node(node.y);
      auto pick = rightmost_in_neighbour(gp, xv, yv);
      if (!pick) {
        pick = rightmost_in_neighbour(gp, xv, std::nullopt);
        node.parent_fallback = true;
      }
      Position end = x.size() - pick->label_length;
      NodeId zv = pick->node;
      while (true) {
        ChainLink link;
        link.z = std::string(gp.longest(zv));
        link.end = end;
        link.begin = end + 1 - link.z.size();
        link.position_ok = link.begin < i_q && i_q < j_y && j_y <= link.end;
        const bool suffix_of_y = node.y.ends_with(link.z);
        const bool single = gp.in_degree(zv) == 1;
        if (!suffix_of_y && !single) {
          for (EdgeId id : gp.in_edges(zv)) {
            std::string_view w = gp.longest(gp.edge(id).src);
            if (link.z.starts_with(w) &&
                (!link.prefix_parent || w.size() > link.prefix_parent->size())) {
              link.prefix_parent = std::string(w);
            }
          }
        }
        node.chain.push_back(std::move(link));
        if (suffix_of_y) {
          node.cls = InDegOneClass::vc_two;
          break;
        }
        if (single) {
          node.cls = InDegOneClass::vc_one;
          break;
        }
        auto next = rightmost_in_neighbour(gp, zv, std::nullopt);
        end -= next->label_length;
        zv = next->node;
      }
    }
    out.nodes.push_back(std::move(node));
  }
  std::sort(out.nodes.begin(), out.nodes.end(), [](const InDegOneNode& a, const InDegOneNode& b) {
    return oracle::shortlex_less(a.x, b.x);
  });

  std::set<std::string> parents;
  std::set<std::string> z_values;
  for (const auto& n : out.nodes) {
    if (n.cls != InDegOneClass::vc_two) continue;
    ++out.x_y;
    parents.insert(n.y);
    z_values.insert(n.z_last());
  }
  out.v_y.assign(parents.begin(), parents.end());
  sort_shortlex(out.v_y);
  for (const auto& y : out.v_y) out.s_y += before.degree(y);
  out.omega = static_cast<std::int64_t>(out.x_y) - 2 * static_cast<std::int64_t>(out.v_y.size());
  for (const auto& z : z_values) {
    const AnchoredNode* a = nodes.find_anchored(z);
    if (!a || !a->u) {
      ++out.z_unanchored;
      continue;
    }
    switch (a->degree_class) {
      case DegreeClass::max:
      case DegreeClass::exceeds:
        ++out.vz2;
        break;
      case DegreeClass::mid:
        ++out.vz1;
        break;
      case DegreeClass::less:
        ++out.vz0;
        break;
    }
  }
  return out;
}

}  // namespace cdawg
