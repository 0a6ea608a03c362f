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
#include <limits>
#include <map>
#include <set>

#include "cdawg/sensitivity.hpp"

namespace cdawg {

namespace {

using I = std::int64_t;

I as_int(std::size_t v) { return static_cast<I>(v); }

BoundEntry entry(std::string name, I lhs, I rhs) {
  return BoundEntry{std::move(name), lhs, rhs, lhs <= rhs};
}

const BoundEntry& lookup(const std::vector<BoundEntry>& v, std::string_view name) {
  for (const auto& b : v) {
    if (b.name == name) return b;
  }
  throw std::out_of_range("no entry named " + std::string(name));
}

bool grammar_identity_holds(const Analysis& a) {
  return a.text().size() < 2 || a.grammar_size() == a.e() - a.v1();
}

BoundReport evaluate(const EditScenario& s, const NodePartition& np, const InDegOnePartition& ip) {
  const Analysis& before = *s.before;
  const Analysis& after = *s.after;
  const I e = as_int(before.e());
  const I m = as_int(before.maximal_count());
  const I mr = as_int(before.maximal_repeat_count());
  const I nmid = as_int(np.nmid);
  const I nless = as_int(np.nless);
  const I n2 = as_int(np.n2.size());

  BoundReport r;
  r.bounds.push_back(entry("B0", as_int(after.grammar_size()) - as_int(before.grammar_size()), 4 * e + 4));
  r.bounds.push_back(entry("B1", as_int(after.e()), e + 5 * mr - nmid - 2 * nless + n2 + 3));
  r.bounds.push_back(entry("B2", as_int(np.degree_sum_n1_nbase), e + 2 * m - nmid - 2 * nless));
  r.bounds.push_back(entry("B3", as_int(np.degree_sum_n2_qnew), e + m + n2));
  r.bounds.push_back(entry("B4", as_int(np.degree_sum_nadd), 2 * mr));
  r.bounds.push_back(entry("B5", as_int(before.v1()) - as_int(after.v1()),
                           as_int(ip.count(InDegOneClass::v1) + ip.count(InDegOneClass::va) +
                                  ip.count(InDegOneClass::vb) + ip.x_y)));
  r.bounds.push_back(entry("B6", 2 * mr, std::min(e, e - ip.omega)));
  r.bounds.push_back(entry("B7", n2, m - as_int(ip.vz1 + 2 * ip.vz2)));
  r.bounds.push_back(entry("B8", as_int(np.uc), n2 + e));
  r.bounds.push_back(entry("B9", as_int(np.wc), m));

  // Degree step at most 2 and U injective on N1 ∪ Nbase.
  I degree_or_repeat = 0;
  std::map<std::string, int> u_uses;
  I u_outside = 0;
  for (const auto& a : np.anchored) {
    if (!a.u) {
      ++u_outside;
      continue;
    }
    if (a.degree_after > a.degree_u + 2) ++degree_or_repeat;
    if (++u_uses[*a.u] > 1) ++degree_or_repeat;
    if (!a.u_maximal) ++u_outside;
  }
  r.bounds.push_back(entry("B10", degree_or_repeat, 0));

  // Supporting properties.
  I exclusion = 0;
  for (const auto& x : np.anchored) {
    if (!x.crossed) continue;
    bool found = false;
    for (const auto& y : np.anchored) {
      if (found) break;
      if (!y.crossed || y.x.size() <= x.x.size()) continue;
      if (x.s_left != y.s_left && x.s_left != y.s_right) continue;
      for (const auto& z : np.anchored) {
        if (z.crossed && z.x.size() > x.x.size() && z.x != y.x &&
            (x.s_right == z.s_left || x.s_right == z.s_right)) {
          found = true;
          break;
        }
      }
    }
    if (found) ++exclusion;
  }

  I position = 0, vc1_repeats = 0, overlap_misses = 0, vc2_repeats = 0, zl_n1 = 0, fallback = 0;
  std::set<std::string> vc_one_z;
  std::vector<const InDegOneNode*> vc_two;
  for (const auto& n : ip.nodes) {
    for (const auto& link : n.chain) position += link.position_ok ? 0 : 1;
    if (n.parent_fallback) ++fallback;
    if (n.cls == InDegOneClass::vc_one && !vc_one_z.insert(n.z_last()).second) ++vc1_repeats;
    if (n.cls != InDegOneClass::vc_two) continue;
    vc_two.push_back(&n);
    if (!np.in_n1(n.z_last())) ++zl_n1;
    const Position i_q = n.x.size() - n.q.size() + 1;
    std::string overlap = i_q <= n.y.size() ? n.x.substr(i_q - 1, n.y.size() - i_q + 1) : "";
    bool crossed = overlap.empty() || !crossing_occurrences(overlap, s).empty();
    const AnchoredNode* a = np.find_anchored(n.z_last());
    bool suffix = a && a->u && overlap.ends_with(*a->u);
    if (!crossed || !suffix) ++overlap_misses;
  }
  for (std::size_t p = 0; p < vc_two.size(); ++p) {
    for (std::size_t q = p + 1; q < vc_two.size(); ++q) {
      if (vc_two[p]->y == vc_two[q]->y) continue;
      const std::string& z1 = vc_two[p]->z_last();
      const std::string& z2 = vc_two[q]->z_last();
      const AnchoredNode* a1 = np.find_anchored(z1);
      const AnchoredNode* a2 = np.find_anchored(z2);
      bool same_u = a1 && a2 && a1->u && a2->u && *a1->u == *a2->u;
      if (z1 == z2 || same_u) ++vc2_repeats;
    }
  }

  I partition = 0;
  std::set<std::string> n1(np.n1.begin(), np.n1.end());
  for (const auto& x : np.n2) partition += n1.count(x);
  if (np.n1.size() + np.n2.size() + np.nbase.size() + np.nadd.size() + np.q.size() !=
      np.maximal_repeats_after) {
    ++partition;
  }
  if (np.n3.size() != np.nadd.size() + np.nbase.size()) ++partition;

  r.properties.push_back(entry("anchor_exclusion", exclusion, 0));
  r.properties.push_back(entry("anchor_extension_maximal", u_outside, 0));
  r.properties.push_back(entry("new_extensions_bounded", as_int(np.wc_new), m));
  r.properties.push_back(entry("chain_position", position, 0));
  r.properties.push_back(entry("vc1_chain_end_injective", vc1_repeats, 0));
  r.properties.push_back(entry("vc2_prefix_overlap", overlap_misses, 0));
  r.properties.push_back(entry("vc2_chain_end_injective", vc2_repeats, 0));
  r.properties.push_back(entry("parents_bounded", as_int(ip.v_y.size()), as_int(ip.vz2 + ip.vz1 + ip.vz0)));
  r.properties.push_back(entry("z_last_in_N1", zl_n1, 0));
  r.properties.push_back(entry("z0_other_than_parent", fallback, 0));
  r.properties.push_back(entry("grammar_identity", (grammar_identity_holds(before) ? 0 : 1) + (grammar_identity_holds(after) ? 0 : 1), 0));
  r.properties.push_back(entry("partition", partition, 0));
  r.properties.push_back(entry("q_definitions_agree", as_int(np.q_divergence), 0));
  r.properties.push_back(entry("crossing_exists", as_int(std::count_if(
      np.anchored.begin(), np.anchored.end(), [](const AnchoredNode& a) { return !a.crossed; })), 0));
  return r;
}

}  // namespace

bool BoundReport::all_hold() const {
  return std::all_of(bounds.begin(), bounds.end(), [](const BoundEntry& b) { return b.holds; });
}

bool BoundReport::properties_hold() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const BoundEntry& b) { return b.holds; });
}

const BoundEntry& BoundReport::bound(std::string_view name) const { return lookup(bounds, name); }

const BoundEntry& BoundReport::property(std::string_view name) const {
  return lookup(properties, name);
}

ScenarioResult analyze_scenario(const EditScenario& s, NaddReading reading) {
  ScenarioResult r;
  r.op = s.op;
  r.t_prime = s.t_prime().str();
  r.delta_e = as_int(s.after->e()) - as_int(s.before->e());
  r.delta_v1 = as_int(s.after->v1()) - as_int(s.before->v1());
  r.delta_g = as_int(s.after->grammar_size()) - as_int(s.before->grammar_size());
  r.nodes = classify_nodes(s, reading);
  r.indeg = classify_indegree_one(s, r.nodes);
  r.report = evaluate(s, r.nodes, r.indeg);
  return r;
}

BoundReport check_bounds(const EditScenario& s, NaddReading reading) {
  return analyze_scenario(s, reading).report;
}

namespace {

void tally(std::vector<ViolationCount>& out, const std::vector<BoundEntry>& entries,
           const EditOp& op) {
  for (const auto& b : entries) {
    if (b.holds) continue;
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const ViolationCount& v) { return v.name == b.name; });
    if (it == out.end()) {
      out.push_back({b.name, 1, op});
    } else {
      ++it->count;
    }
  }
}

}  // namespace

ScanReport scan(const Text& t, const ScanOptions& options) {
  if (t.size() > kMaxScanLength) {
    throw std::length_error("scan accepts texts of at most " + std::to_string(kMaxScanLength) +
                            " symbols, got " + std::to_string(t.size()));
  }
  auto before = std::make_shared<const Analysis>(t);
  ScanReport out;
  out.text = t.str();
  out.e = before->e();
  out.v1 = before->v1();
  out.g = before->grammar_size();

  auto ops = options.alphabet.empty() ? enumerate_edits(t) : enumerate_edits(t, options.alphabet);
  std::map<std::string, std::shared_ptr<const Analysis>> cache;
  for (const EditOp& op : ops) {
    Text tp = apply(op, t);
    auto& after = cache[tp.str()];
    if (!after) after = std::make_shared<const Analysis>(std::move(tp));
    EditScenario s{before, after, op};
    ScenarioResult r = analyze_scenario(s, options.reading);
    ++out.scenarios;
    if (!out.argmax_delta_e || r.delta_e > out.max_delta_e) {
      out.max_delta_e = r.delta_e;
      out.argmax_delta_e = op;
    }
    if (!out.argmax_delta_g || r.delta_g > out.max_delta_g) {
      out.max_delta_g = r.delta_g;
      out.argmax_delta_g = op;
    }
    out.bounds_all_hold = out.bounds_all_hold && r.report.all_hold();
    out.properties_all_hold = out.properties_all_hold && r.report.properties_hold();
    tally(out.bound_violations, r.report.bounds, op);
    tally(out.property_violations, r.report.properties, op);
    if (options.keep_scenarios) out.results.push_back(std::move(r));
  }
  return out;
}

std::int64_t exhaustive_AS(std::size_t n, std::size_t sigma) {
  if (n < 1 || n > 14 || sigma < 1 || sigma > 3) {
    throw std::length_error("exhaustive_AS is limited to 1 <= n <= 14 and 1 <= sigma <= 3");
  }
  // G for every string of Σ^{m-1}$, m = n-1..n+1, indexed by its base-σ value.
  auto decode = [sigma](std::size_t code, std::size_t len) {
    std::string s(len, 'a');
    for (std::size_t p = len; p-- > 0;) {
      s[p] = static_cast<char>('a' + code % sigma);
      code /= sigma;
    }
    s.push_back(kEndMarker);
    return s;
  };
  auto power = [sigma](std::size_t k) {
    std::size_t v = 1;
    while (k-- > 0) v *= sigma;
    return v;
  };
  std::map<std::size_t, std::vector<std::int32_t>> sizes;
  for (std::size_t m = n > 1 ? n - 1 : 1; m <= n + 1; ++m) {
    auto& table = sizes[m];
    table.resize(power(m - 1));
    for (std::size_t code = 0; code < table.size(); ++code) {
      Text t(decode(code, m - 1));
      if (m == 1) {
        table[code] = 1;
        continue;
      }
      auto mt = metrics(build_via_suffix_tree(t));
      table[code] = static_cast<std::int32_t>(mt.e - mt.v1);
    }
  }
  auto g_of = [&](const std::string& s) {
    std::size_t code = 0;
    for (std::size_t p = 0; p + 1 < s.size(); ++p) code = code * sigma + static_cast<std::size_t>(s[p] - 'a');
    return sizes.at(s.size())[code];
  };

  std::vector<char> alphabet;
  for (std::size_t c = 0; c < sigma; ++c) alphabet.push_back(static_cast<char>('a' + c));
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  const auto& base = sizes.at(n);
  for (std::size_t code = 0; code < base.size(); ++code) {
    Text t(decode(code, n - 1));
    for (const EditOp& op : enumerate_edits(t, alphabet)) {
      std::int64_t d = g_of(apply(op, t).str()) - base[code];
      best = std::max(best, d);
    }
  }
  return best;
}

}  // namespace cdawg
