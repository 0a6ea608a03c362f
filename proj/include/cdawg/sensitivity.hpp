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

#ifndef CDAWG_SENSITIVITY_HPP
#define CDAWG_SENSITIVITY_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cdawg/cdawg.hpp"
#include "cdawg/substring_catalog.hpp"
#include "cdawg/text.hpp"

namespace cdawg {

// ---------------------------------------------------------------------------
// Edits

/// Enumeration order of edit kinds.
enum class EditKind { substitution = 0, deletion = 1, insertion = 2 };

/// A single-symbol edit that leaves the end-marker in place.
///
/// substitution: 1 <= i <= n-1, T' = T[1..i-1] c T[i+1..n]
/// deletion:     1 <= i <= n-1, T' = T[1..i-1] T[i+1..n]
/// insertion:    1 <= i <= n,   T' = T[1..i-1] c T[i..n]
struct EditOp {
  EditKind kind = EditKind::substitution;
  Position i = 1;
  char c = '\0';  // unused for deletion

  friend bool operator==(const EditOp&, const EditOp&) = default;
  friend auto operator<=>(const EditOp&, const EditOp&) = default;
};

class InvalidEdit : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string_view to_string(EditKind kind);
/// e.g. "ins(1,'b')", "del(3)".
std::string to_string(const EditOp& op);

Text apply(const EditOp& op, const Text& t);

/// Symbols of T plus the first lowercase letter that does not occur in T.
std::vector<char> edit_alphabet(const Text& t);

/// Substitutions, then deletions, then insertions, each by (i, c). Edits
/// that leave T unchanged are skipped.
std::vector<EditOp> enumerate_edits(const Text& t, std::span<const char> alphabet);
std::vector<EditOp> enumerate_edits(const Text& t);

// ---------------------------------------------------------------------------
// Cached analysis of one string

class Analysis {
 public:
  explicit Analysis(Text t);

  const Text& text() const { return text_; }
  const SubstringCatalog& catalog() const { return catalog_; }
  const Cdawg& graph() const { return graph_; }

  std::size_t e() const { return metrics_.e; }
  std::size_t v1() const { return metrics_.v1; }
  /// Size of the unit-free grammar, computed from the grammar itself.
  std::size_t grammar_size() const { return grammar_size_; }
  /// |M(T)|.
  std::size_t maximal_count() const { return graph_.node_count(); }
  /// |MR(T)|.
  std::size_t maximal_repeat_count() const { return graph_.node_count() - 1; }

  bool contains(std::string_view x) const { return catalog_.find(x).has_value(); }
  bool is_maximal(std::string_view x) const;
  bool is_maximal_repeat(std::string_view x) const;
  /// Number of distinct right-extensions; 0 for non-substrings.
  std::size_t degree(std::string_view x) const;
  std::optional<NodeId> node(std::string_view x) const { return graph_.find_node(x); }

 private:
  Text text_;
  SubstringCatalog catalog_;
  Cdawg graph_;
  Metrics metrics_;
  std::size_t grammar_size_;
};

/// T, T' and the edit between them, each string analysed once.
struct EditScenario {
  std::shared_ptr<const Analysis> before;
  std::shared_ptr<const Analysis> after;
  EditOp op;

  const Text& t() const { return before->text(); }
  const Text& t_prime() const { return after->text(); }
};

EditScenario make_scenario(std::shared_ptr<const Analysis> before, const EditOp& op);
EditScenario make_scenario(const Text& t, const EditOp& op);

// ---------------------------------------------------------------------------
// Crossing occurrences

enum class CrossKind { touch_left, contain, touch_right };

std::string_view to_string(CrossKind kind);

/// An occurrence T'[begin..end] touching or containing the edited position,
/// with its context strings P and S.
struct CrossingOcc {
  Position begin = 0;
  Position end = 0;
  CrossKind kind = CrossKind::contain;
  std::string prefix_part;  // P
  std::string suffix_part;  // S

  friend bool operator==(const CrossingOcc&, const CrossingOcc&) = default;
};

/// Crossing occurrences of a non-empty x in T', leftmost first; front() is
/// x_L and back() is x_R.
std::vector<CrossingOcc> crossing_occurrences(std::string_view x, const EditScenario& s);

// ---------------------------------------------------------------------------
// New and surviving maximal repeats of T'

/// Which reading of the condition on N_add to use. `all_crossing` requires
/// every occurrence of x in T' to be crossing and every right-extension to
/// come from a crossing occurrence; `extensions_only` keeps only the
/// second requirement.
enum class NaddReading { all_crossing, extensions_only };

enum class DegreeClass { max, mid, less, exceeds };

std::string_view to_string(DegreeClass c);

/// x in N1 or Nbase with its anchor and U(x).
struct AnchoredNode {
  std::string x;
  bool crossed = false;  // false when x has no crossing occurrence
  std::string s_left;    // S_{x_L}
  std::string s_right;   // S_{x_R}
  bool uses_right = false;
  /// U(x); absent when the anchor does not occur in T.
  std::optional<std::string> u;
  bool u_maximal = false;  // U(x) in M(T)
  std::size_t degree_after = 0;  // D_{T'}(x)
  std::size_t degree_u = 0;      // D_T(U(x)), 0 when U(x) is absent
  /// Nless when U(x) is absent.
  DegreeClass degree_class = DegreeClass::less;

  const std::string& anchor() const { return uses_right ? s_right : s_left; }
};

struct NodePartition {
  // Each list is in shortlex order.
  std::vector<std::string> n;  // (M(T') \ M(T)) \ {T'}
  std::vector<std::string> n1, n2, n3;
  std::vector<std::string> nadd, nbase;
  std::vector<std::string> q, qnew;
  std::size_t maximal_repeats_after = 0;  // |MR(T')|

  /// N1 and Nbase, longest first.
  std::vector<AnchoredNode> anchored;
  std::size_t nmax = 0, nmid = 0, nless = 0, nexceeds = 0;

  std::size_t degree_sum_n1_nbase = 0;
  std::size_t degree_sum_n2_qnew = 0;
  std::size_t degree_sum_nadd = 0;

  /// Right-extensions of N2 and Qnew members seen at a non-crossing
  /// occurrence (uc) or only at crossing occurrences (wc); uc + wc equals
  /// degree_sum_n2_qnew.
  std::size_t uc = 0;
  std::size_t wc = 0;
  /// New right-extensions: xa absent from T, following a crossing occurrence.
  std::size_t wc_new = 0;

  /// Members of Q that are not in MR(T) (the two definitions of Q differ).
  std::size_t q_divergence = 0;

  const AnchoredNode* find_anchored(std::string_view x) const;
  bool in_n1(std::string_view x) const;
};

NodePartition classify_nodes(const EditScenario& s,
                             NaddReading reading = NaddReading::all_crossing);

// ---------------------------------------------------------------------------
// In-degree-one nodes of CDAWG(T)

enum class InDegOneClass { v1, va, vb, vc_one, vc_two, unchanged };

std::string_view to_string(InDegOneClass c);

/// One element z_i of a chain, placed inside x (1-based, inclusive).
struct ChainLink {
  std::string z;
  Position begin = 0;
  Position end = 0;
  /// P_{z_i}: the longest in-neighbour of z_i in CDAWG(T') that is a
  /// prefix of z_i; only set for links that are not the last.
  std::optional<std::string> prefix_parent;
  bool position_ok = false;  // i_z < i_q < j_y <= j_z
};

struct InDegOneNode {
  std::string x;
  InDegOneClass cls = InDegOneClass::unchanged;
  std::string y;  // unique parent in CDAWG(T); set for V2 cases
  std::string q;  // longest proper suffix of x in MR(T); set for V2 cases
  std::vector<ChainLink> chain;  // VC only; back() is z_l
  bool parent_fallback = false;  // z_0 had to be the parent y itself

  const std::string& z_last() const { return chain.back().z; }
};

struct InDegOnePartition {
  std::vector<InDegOneNode> nodes;  // shortlex by x

  std::size_t count(InDegOneClass c) const;

  std::vector<std::string> v_y;  // distinct parents of VC_II members
  std::size_t s_y = 0;           // sum of D_T(y) over v_y
  std::size_t x_y = 0;           // in-edges of VC_II members in CDAWG(T)
  std::int64_t omega = 0;        // x_y - 2|v_y|
  std::size_t vz2 = 0, vz1 = 0, vz0 = 0;
  std::size_t z_unanchored = 0;  // z_l values with no U(z_l)
};

InDegOnePartition classify_indegree_one(const EditScenario& s, const NodePartition& nodes);

// ---------------------------------------------------------------------------
// Bound checks

struct BoundEntry {
  std::string name;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool holds = false;
};

/// B0-B10, then the supporting properties. Properties are stated as
/// "lhs <= rhs" as well; most count violations against 0.
struct BoundReport {
  std::vector<BoundEntry> bounds;
  std::vector<BoundEntry> properties;

  bool all_hold() const;
  bool properties_hold() const;
  const BoundEntry& bound(std::string_view name) const;
  const BoundEntry& property(std::string_view name) const;
};

struct ScenarioResult {
  EditOp op;
  std::string t_prime;
  std::int64_t delta_e = 0;
  std::int64_t delta_v1 = 0;
  std::int64_t delta_g = 0;
  NodePartition nodes;
  InDegOnePartition indeg;
  BoundReport report;
};

ScenarioResult analyze_scenario(const EditScenario& s,
                                NaddReading reading = NaddReading::all_crossing);

BoundReport check_bounds(const EditScenario& s,
                         NaddReading reading = NaddReading::all_crossing);

// ---------------------------------------------------------------------------
// Whole-string scans

struct ScanOptions {
  NaddReading reading = NaddReading::all_crossing;
  /// Keep every ScenarioResult in the report.
  bool keep_scenarios = false;
  /// Empty means edit_alphabet(t).
  std::vector<char> alphabet;
};

struct ViolationCount {
  std::string name;
  std::size_t count = 0;
  /// First scenario, in enumeration order, where it failed.
  EditOp first;
};

struct ScanReport {
  std::string text;
  std::size_t e = 0, v1 = 0, g = 0;
  std::size_t scenarios = 0;
  std::int64_t max_delta_e = 0;
  std::int64_t max_delta_g = 0;
  std::optional<EditOp> argmax_delta_e;
  std::optional<EditOp> argmax_delta_g;
  bool bounds_all_hold = true;
  bool properties_all_hold = true;
  std::vector<ViolationCount> bound_violations;
  std::vector<ViolationCount> property_violations;
  std::vector<ScenarioResult> results;  // only with keep_scenarios
};

/// Longest text `scan` accepts.
inline constexpr std::size_t kMaxScanLength = 400;

/// Runs every edit of enumerate_edits through analyze_scenario. Throws
/// std::length_error above kMaxScanLength.
ScanReport scan(const Text& t, const ScanOptions& options = {});

/// Largest G(T') - G(T) over every T in Σ^{n-1}$ (Σ the first `sigma`
/// lowercase letters) and every edit over Σ. Throws std::length_error
/// outside n <= 14, sigma <= 3.
std::int64_t exhaustive_AS(std::size_t n, std::size_t sigma);

}  // namespace cdawg

#endif  // CDAWG_SENSITIVITY_HPP
