#include <doctest.h>

#include <algorithm>

#include "cdawg/oracle.hpp"
#include "cdawg/sensitivity.hpp"
#include "support.hpp"

using namespace cdawg;

namespace {

const Text kExample("abcabab$");
const EditOp kPrependB{EditKind::insertion, 1, 'b'};

using Strings = std::vector<std::string>;

EditOp sub(Position i, char c) { return {EditKind::substitution, i, c}; }
EditOp del(Position i) { return {EditKind::deletion, i, '\0'}; }
EditOp ins(Position i, char c) { return {EditKind::insertion, i, c}; }

InDegOneClass class_of(const InDegOnePartition& p, std::string_view x) {
  for (const auto& n : p.nodes) {
    if (n.x == x) return n.cls;
  }
  FAIL("node not classified: " << x);
  return InDegOneClass::unchanged;
}

}  // namespace

TEST_CASE("apply") {
  CHECK(apply(kPrependB, kExample).str() == "babcabab$");
  CHECK(apply(sub(3, 'x'), kExample).str() == "abxabab$");
  CHECK(apply(del(7), kExample).str() == "abcaba$");
  CHECK(apply(ins(8, 'z'), kExample).str() == "abcababz$");
  CHECK_THROWS_AS(apply(sub(8, 'a'), kExample), InvalidEdit);
  CHECK_THROWS_AS(apply(del(8), kExample), InvalidEdit);
  CHECK_THROWS_AS(apply(ins(9, 'a'), kExample), InvalidEdit);
  CHECK_THROWS_AS(apply(ins(1, '$'), kExample), InvalidEdit);
  CHECK_THROWS_AS(apply(del(1), Text("$")), InvalidEdit);
  CHECK(to_string(kPrependB) == "ins(1,'b')");
  CHECK(to_string(del(4)) == "del(4)");
}

TEST_CASE("enumerate_edits") {
  const std::vector<char> ab{'a', 'b'};
  auto ops = enumerate_edits(Text("ab$"), ab);
  CHECK(ops.size() == 10);
  CHECK(std::count_if(ops.begin(), ops.end(),
                      [](const EditOp& o) { return o.kind == EditKind::substitution; }) == 2);
  CHECK(std::count_if(ops.begin(), ops.end(),
                      [](const EditOp& o) { return o.kind == EditKind::deletion; }) == 2);
  CHECK(std::is_sorted(ops.begin(), ops.end()));

  const std::vector<char> a{'a'};
  CHECK(enumerate_edits(Text("$"), a) == std::vector<EditOp>{ins(1, 'a')});

  auto all = enumerate_edits(kExample);
  CHECK(std::find(all.begin(), all.end(), kPrependB) != all.end());
  CHECK(edit_alphabet(kExample) == std::vector<char>{'a', 'b', 'c', 'd'});
  CHECK(edit_alphabet(Text("b$")) == std::vector<char>{'a', 'b'});
  for (const auto& op : all) CHECK(apply(op, kExample) != kExample);
}

TEST_CASE("crossing_occurrences") {
  auto ex = make_scenario(kExample, kPrependB);
  auto b = crossing_occurrences("b", ex);
  REQUIRE(b.size() == 1);
  CHECK(b[0] == CrossingOcc{1, 1, CrossKind::contain, "b", "b"});
  CHECK(crossing_occurrences("b$", ex).empty());

  auto d = make_scenario(kExample, del(2));
  REQUIRE(d.t_prime().str() == "acabab$");
  auto cab = crossing_occurrences("cab", d);
  REQUIRE(cab.size() == 1);
  CHECK(cab[0] == CrossingOcc{2, 4, CrossKind::touch_right, "", "cab"});
  auto a = crossing_occurrences("a", d);
  REQUIRE(a.size() == 1);
  CHECK(a[0] == CrossingOcc{1, 1, CrossKind::touch_left, "a", ""});

  auto s = make_scenario(kExample, sub(4, 'c'));
  REQUIRE(s.t_prime().str() == "abccbab$");
  auto c = crossing_occurrences("c", s);
  REQUIRE(c.size() == 2);
  CHECK(c[0] == CrossingOcc{3, 3, CrossKind::touch_left, "cc", ""});
  CHECK(c[1] == CrossingOcc{4, 4, CrossKind::contain, "c", "c"});
}

TEST_CASE("crossing occurrences follow the case analysis") {
  std::mt19937_64 rng(37);
  for (int round = 0; round < 60; ++round) {
    Text t(testing::random_text(rng, 14, 3));
    for (const EditOp& op : enumerate_edits(t)) {
      auto s = make_scenario(t, op);
      for (const auto& x : oracle::all_substrings(s.t_prime())) {
        if (x.empty()) continue;
        std::vector<Position> expected;
        for (Position j : oracle::beg_pos(x, s.t_prime())) {
          Position k = j + x.size() - 1;
          Position i = op.i;
          bool hit = op.kind == EditKind::deletion
                         ? (k + 1 == i || (j + 1 <= i && i <= k) || j == i)
                         : (k + 1 == i || (j <= i && i <= k) || j == i + 1);
          if (hit) expected.push_back(j);
        }
        std::vector<Position> got;
        for (const auto& c : crossing_occurrences(x, s)) got.push_back(c.begin);
        CHECK(got == expected);
      }
    }
  }
}

TEST_CASE("classify_nodes on the prepend example") {
  auto s = make_scenario(kExample, kPrependB);
  auto p = classify_nodes(s);
  CHECK(p.n == Strings{"b", "bab"});
  CHECK(p.n1 == Strings{"b"});
  CHECK(p.n2.empty());
  CHECK(p.n3 == Strings{"bab"});
  CHECK(p.nadd.empty());
  CHECK(p.nbase == Strings{"bab"});
  CHECK(p.q == Strings{"", "ab"});
  CHECK(p.qnew.empty());
  CHECK(p.nmax == 0);
  CHECK(p.nmid == 1);
  CHECK(p.nless == 1);
  CHECK(p.uc == 0);
  CHECK(p.wc == 0);

  REQUIRE(p.anchored.size() == 2);
  const AnchoredNode* bab = p.find_anchored("bab");
  REQUIRE(bab != nullptr);
  CHECK(bab->anchor() == "bab");
  CHECK(bab->u == std::optional<std::string>("abcabab"));
  CHECK_FALSE(bab->u_maximal);
  const AnchoredNode* b = p.find_anchored("b");
  REQUIRE(b != nullptr);
  CHECK(b->anchor() == "b");
  CHECK(b->u == std::optional<std::string>("ab"));
  CHECK(b->u_maximal);
}

TEST_CASE("classify_nodes partitions MR(T')") {
  auto s = make_scenario(Text("aaaa$"), sub(2, 'b'));
  auto p = classify_nodes(s);
  CHECK(p.n.empty());
  CHECK(p.q == Strings{"", "a"});
  CHECK(p.qnew == Strings{"a"});
  CHECK(p.maximal_repeats_after == 2);

  std::mt19937_64 rng(41);
  auto family = testing::exhaustive_family(7, 2);
  for (int i = 0; i < 40; ++i) family.push_back(testing::random_text(rng, 20, 3));
  for (const auto& str : family) {
    Text t(str);
    for (const EditOp& op : enumerate_edits(t)) {
      auto sc = make_scenario(t, op);
      auto part = classify_nodes(sc);
      CHECK(part.n1.size() + part.n2.size() + part.nbase.size() + part.nadd.size() +
                part.q.size() ==
            oracle::maximal_repeats(sc.t_prime()).size());
      for (const auto& x : part.n1) {
        CHECK(oracle::is_right_maximal(x, t));
        CHECK_FALSE(oracle::is_left_maximal(x, t));
      }
      for (const auto& x : part.n2) CHECK_FALSE(oracle::is_right_maximal(x, t));
      for (const auto& x : part.n3) {
        CHECK((!oracle::is_substring(x, t) || (!oracle::is_left_maximal(x, t) &&
                                                !oracle::is_right_maximal(x, t))));
      }
      for (const auto& x : part.q) CHECK(oracle::maximality(x, t).maximal());
      CHECK(part.q_divergence == 0);
      CHECK(part.uc + part.wc == part.degree_sum_n2_qnew);
      CHECK(part.nmax + part.nmid + part.nless + part.nexceeds == part.anchored.size());
    }
  }
}

TEST_CASE("the two readings of N_add") {
  // Under the weaker reading N_add can only grow.
  std::mt19937_64 rng(43);
  for (int i = 0; i < 80; ++i) {
    Text t(testing::random_text(rng, 16, 3));
    for (const EditOp& op : enumerate_edits(t)) {
      auto s = make_scenario(t, op);
      auto strict = classify_nodes(s, NaddReading::all_crossing);
      auto loose = classify_nodes(s, NaddReading::extensions_only);
      CHECK(std::includes(loose.nadd.begin(), loose.nadd.end(), strict.nadd.begin(),
                          strict.nadd.end(), [](const std::string& a, const std::string& b) {
                            return oracle::shortlex_less(a, b);
                          }));
      CHECK(strict.n3 == loose.n3);
    }
  }
}

TEST_CASE("classify_indegree_one") {
  auto gone = classify_indegree_one(make_scenario(Text("aab$"), sub(1, 'b')),
                                    classify_nodes(make_scenario(Text("aab$"), sub(1, 'b'))));
  CHECK(class_of(gone, "a") == InDegOneClass::v1);

  auto s = make_scenario(Text("aab$"), del(1));
  CHECK(class_of(classify_indegree_one(s, classify_nodes(s)), "a") == InDegOneClass::v1);

  auto none = make_scenario(Text("abab$"), sub(1, 'c'));
  CHECK(classify_indegree_one(none, classify_nodes(none)).nodes.empty());

  // x = abab has the single parent ab; after the edit it gains the
  // in-neighbour b, which is a suffix of ab.
  auto vc = make_scenario(Text("ababab$"), ins(6, 'b'));
  auto p = classify_indegree_one(vc, classify_nodes(vc));
  REQUIRE(p.nodes.size() == 1);
  const auto& n = p.nodes[0];
  CHECK(n.x == "abab");
  CHECK(n.cls == InDegOneClass::vc_two);
  CHECK(n.y == "ab");
  CHECK(n.q == "ab");
  REQUIRE(n.chain.size() == 1);
  CHECK(n.z_last() == "b");
  CHECK(n.chain[0].begin == 2);
  CHECK(n.chain[0].end == 2);
  // y and q meet without overlapping, so i_q < j_y fails here.
  CHECK_FALSE(n.chain[0].position_ok);
  CHECK(p.v_y == Strings{"ab"});
  CHECK(p.x_y == 1);
  CHECK(p.omega == -1);
}

TEST_CASE("in-degree-one classes cover every in-degree-one node") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 80; ++i) {
    Text t(testing::random_text(rng, 18, 2 + i % 2));
    auto base = std::make_shared<const Analysis>(t);
    for (const EditOp& op : enumerate_edits(t)) {
      auto s = make_scenario(base, op);
      auto p = classify_indegree_one(s, classify_nodes(s));
      CHECK(p.nodes.size() == base->v1());
      for (const auto& n : p.nodes) {
        bool repeat_after = oracle::is_substring(n.x, s.t_prime()) &&
                            oracle::maximality(n.x, s.t_prime()).maximal() &&
                            n.x != s.t_prime().str();
        CHECK((n.cls == InDegOneClass::v1) == !repeat_after);
        if (n.cls == InDegOneClass::vc_one || n.cls == InDegOneClass::vc_two) {
          REQUIRE_FALSE(n.chain.empty());
          for (std::size_t k = 1; k < n.chain.size(); ++k) {
            CHECK(n.chain[k].z.size() < n.chain[k - 1].z.size());
          }
          CHECK(n.x.substr(n.chain.back().begin - 1, n.z_last().size()) == n.z_last());
        }
      }
    }
  }
}

TEST_CASE("check_bounds on fixed scenarios") {
  auto ex = check_bounds(make_scenario(kExample, kPrependB));
  CHECK(ex.bound("B0").lhs == 2);
  CHECK(ex.bound("B0").rhs == 32);
  CHECK(ex.bound("B1").lhs == 12);
  CHECK(ex.bound("B1").rhs == 17);
  CHECK(ex.bound("B2").lhs == 5);
  CHECK(ex.bound("B2").rhs == 10);
  CHECK(ex.bound("B5").lhs == -3);
  CHECK(ex.bound("B6").lhs == 4);
  CHECK(ex.bound("B6").rhs == 7);
  CHECK(ex.all_hold());
  CHECK(ex.bounds.size() == 11);
  CHECK(ex.property("anchor_extension_maximal").lhs == 1);

  auto nine = check_bounds(make_scenario(Text("AGAGCGAGCGCGC$"), del(1)));
  CHECK(nine.all_hold());
  CHECK(nine.properties_hold());
  CHECK(nine.bound("B0").lhs == -1);
  CHECK(nine.bound("B0").rhs == 68);
  CHECK(nine.bound("B5").lhs == 1);
  CHECK(nine.bound("B5").rhs == 1);

  auto end_only = check_bounds(make_scenario(Text("$"), ins(1, 'a')));
  CHECK(end_only.bound("B0").lhs == 1);
  CHECK(end_only.bound("B0").rhs == 8);
  CHECK(end_only.bound("B0").holds);
  // Every node of "$" but the sink has out-degree 1.
  CHECK_FALSE(end_only.bound("B6").holds);

  // Only-at-crossing extensions outnumber M(T) here: b gains 'c' at a
  // touching occurrence although bc already occurs in T.
  auto wc = analyze_scenario(make_scenario(Text("abbcb$"), ins(3, 'a')));
  CHECK(wc.nodes.wc == 4);
  CHECK(wc.nodes.wc_new == 3);
  CHECK_FALSE(wc.report.bound("B9").holds);
  CHECK(wc.report.property("new_extensions_bounded").holds);
}

TEST_CASE("delta G splits into delta e and delta v1") {
  std::mt19937_64 rng(53);
  auto family = testing::exhaustive_family(8, 2, 2);
  for (int i = 0; i < 40; ++i) family.push_back(testing::random_text(rng, 30, 4));
  for (const auto& str : family) {
    if (str.size() < 3) continue;
    Text t(str);
    auto base = std::make_shared<const Analysis>(t);
    for (const EditOp& op : enumerate_edits(t)) {
      auto r = analyze_scenario(make_scenario(base, op));
      CHECK(r.delta_g == r.delta_e - r.delta_v1);
      CHECK(r.report.bound("B0").holds);
      CHECK(r.report.property("grammar_identity").holds);
      CHECK(r.report.property("partition").holds);
    }
  }
}

TEST_CASE("scan") {
  auto ex = scan(kExample);
  CHECK(ex.max_delta_g == 2);
  CHECK(ex.max_delta_e == 6);
  CHECK(ex.argmax_delta_g == std::optional<EditOp>(kPrependB));
  CHECK(ex.argmax_delta_e == std::optional<EditOp>(ins(2, 'c')));
  CHECK(ex.e == 7);
  CHECK(ex.g == 7);
  CHECK(ex.scenarios == enumerate_edits(kExample).size());
  CHECK(ex.bounds_all_hold);

  ScanOptions keep;
  keep.keep_scenarios = true;
  auto full = scan(kExample, keep);
  auto it = std::find_if(full.results.begin(), full.results.end(),
                         [](const ScenarioResult& r) { return r.op == kPrependB; });
  REQUIRE(it != full.results.end());
  CHECK(it->delta_e == 5);
  CHECK(it->delta_g == 2);
  CHECK(it->t_prime == "babcabab$");

  auto tiny = scan(Text("a$"));
  CHECK(tiny.scenarios == 6);
  CHECK(tiny.bounds_all_hold);

  auto eight = scan(Text("AGAGCGAGCGCGC$"));
  CHECK(eight.scenarios == 108);
  CHECK(eight.max_delta_g == 3);
  CHECK(eight.argmax_delta_g == std::optional<EditOp>(ins(4, 'C')));
  CHECK(eight.bounds_all_hold);
  CHECK(eight.bound_violations.empty());

  auto bad = scan(Text("abbcb$"));
  CHECK_FALSE(bad.bounds_all_hold);
  REQUIRE(bad.bound_violations.size() == 1);
  CHECK(bad.bound_violations[0].name == "B9");
  CHECK(bad.bound_violations[0].count == 1);
  CHECK(bad.bound_violations[0].first == ins(3, 'a'));

  CHECK_THROWS_AS(scan(Text(std::string(kMaxScanLength, 'a') + "$")), std::length_error);
}

TEST_CASE("exhaustive_AS") {
  CHECK(exhaustive_AS(1, 1) == 1);
  CHECK(exhaustive_AS(2, 1) == 1);
  CHECK(exhaustive_AS(3, 2) == 1);
  CHECK(exhaustive_AS(6, 2) == 1);
  CHECK(exhaustive_AS(8, 2) == 2);
  CHECK(exhaustive_AS(9, 2) == 3);
  CHECK(exhaustive_AS(10, 2) == 3);
  CHECK(exhaustive_AS(5, 3) == 1);
  CHECK(exhaustive_AS(6, 3) == 1);
  CHECK_THROWS_AS(exhaustive_AS(15, 2), std::length_error);
  CHECK_THROWS_AS(exhaustive_AS(5, 4), std::length_error);
  CHECK_THROWS_AS(exhaustive_AS(0, 2), std::length_error);
}
