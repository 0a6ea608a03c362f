#include <doctest.h>

#include <map>

#include "cdawg/oracle.hpp"
#include "cdawg/substring_catalog.hpp"
#include "support.hpp"

using namespace cdawg;
using namespace cdawg::oracle;

namespace {

const Text kNineNodeText("AGAGCGAGAGCGCGC$");
const Text kEightNodeText("AGAGCGAGCGCGC$");
const Text kExample("abcabab$");

}  // namespace

TEST_CASE("text validation") {
  CHECK_THROWS_AS(Text(""), InvalidText);
  CHECK_THROWS_AS(Text("abc"), InvalidText);
  CHECK_THROWS_AS(Text("a$b$"), InvalidText);
  CHECK_NOTHROW(Text("$"));
  CHECK(Text::from_literal("ab").str() == "ab$");
  CHECK(Text::from_literal("ab$").str() == "ab$");
  CHECK_THROWS_AS(Text::from_literal("a$b"), InvalidText);
  CHECK(kExample.at(8) == '$');
  CHECK(kExample.alphabet() == std::vector<char>{'a', 'b', 'c'});
}

TEST_CASE("beg_pos") {
  CHECK(beg_pos("ab", kExample) == std::vector<Position>{1, 4, 6});
  CHECK(beg_pos("$", Text("a$")) == std::vector<Position>{2});
  CHECK(beg_pos("GCG", kEightNodeText) == std::vector<Position>{4, 8, 10});
  CHECK(beg_pos("zz", kExample).empty());
  CHECK(end_pos("ab", kExample) == std::vector<Position>{2, 5, 7});
}

TEST_CASE("left and right maximality") {
  CHECK(is_left_maximal("a", kExample));
  CHECK_FALSE(is_left_maximal("b", kExample));
  CHECK(is_left_maximal("AG", kEightNodeText));
  CHECK(is_left_maximal("", kExample));

  CHECK_FALSE(is_right_maximal("a", kExample));
  CHECK(is_right_maximal("ab", kExample));
  CHECK(is_right_maximal("", kExample));
  CHECK(is_right_maximal("", Text("$")));

  CHECK_THROWS_AS(is_left_maximal("cc", kExample), NotASubstring);
  CHECK_THROWS_AS(is_right_maximal("x", kExample), NotASubstring);

  auto rec = maximality("ab", kExample);
  CHECK(rec.left_maximal);
  CHECK(rec.right_maximal);
  CHECK(rec.is_repeat);
  CHECK(rec.maximal());
}

TEST_CASE("maximal_set and maximal_repeats") {
  // Nine maximal strings; dropping one "AG" leaves eight.
  std::vector<std::string> nine{"",    "G",   "AG",     "GC",
                                  "GAG", "GCG", "GCGC", "AGAGCG", kNineNodeText.str()};
  CHECK(maximal_set(kNineNodeText) == nine);
  CHECK(maximal_repeats(kNineNodeText).size() == 8);

  // The shorter string, by exhaustive maximality test.
  std::vector<std::string> eight{"",    "G",    "AG",    "GC",
                                   "GCG", "GCGC", "GAGCG", kEightNodeText.str()};
  CHECK(maximal_set(kEightNodeText) == eight);

  CHECK(maximal_set(Text("a$")) == std::vector<std::string>{"", "a$"});
  CHECK(maximal_set(kExample) == std::vector<std::string>{"", "ab", "abcabab$"});
  CHECK(maximal_repeats(Text("a$")) == std::vector<std::string>{""});
  CHECK(maximal_repeats(kExample) == std::vector<std::string>{"", "ab"});
}

TEST_CASE("rrep") {
  CHECK(rrep("A", kEightNodeText) == "AG");
  CHECK(rrep("ab", kExample) == "ab");
  CHECK(rrep("c", kExample) == "cabab$");
  CHECK_THROWS_AS(rrep("cc", kExample), NotASubstring);
}

TEST_CASE("right_extensions") {
  CHECK(right_extensions("ab", kExample) == SymbolSet{'c', 'a', '$'});
  CHECK(right_extensions(kExample.str(), kExample).empty());
  CHECK(right_extensions("", Text("a$")) == SymbolSet{'a', '$'});
  CHECK_THROWS_AS(right_extensions("q", kExample), NotASubstring);
}

TEST_CASE("maximal strings are the longest members of both equivalence classes") {
  std::mt19937_64 rng(7);
  auto family = testing::exhaustive_family(8, 2);
  for (int i = 0; i < 200; ++i) family.push_back(testing::random_text(rng, 20, 3));
  for (const auto& s : family) {
    Text t(s);
    std::map<std::vector<Position>, std::size_t> longest_by_end;
    std::map<std::vector<Position>, std::size_t> longest_by_begin;
    auto subs = all_substrings(t);
    for (const auto& x : subs) {
      if (x.empty()) continue;
      auto& le = longest_by_end[end_pos(x, t)];
      le = std::max(le, x.size());
      auto& lb = longest_by_begin[beg_pos(x, t)];
      lb = std::max(lb, x.size());
    }
    std::set<std::string> m;
    for (const auto& x : maximal_set(t)) m.insert(x);
    CHECK(m.count(""));
    CHECK(m.count(s));
    for (const auto& x : subs) {
      if (x.empty()) continue;
      bool longest_both = longest_by_end[end_pos(x, t)] == x.size() &&
                          longest_by_begin[beg_pos(x, t)] == x.size();
      CHECK_MESSAGE(m.count(x) == (longest_both ? 1u : 0u), s << " / " << x);
      CHECK(is_left_maximal(x, t) == (longest_by_end[end_pos(x, t)] == x.size()));
      CHECK(is_right_maximal(x, t) == (longest_by_begin[beg_pos(x, t)] == x.size()));
    }
  }
}

TEST_CASE("rrep is the shortest right-maximal extension") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    Text t(testing::random_text(rng, 16, 2));
    for (const auto& x : all_substrings(t)) {
      std::string r = rrep(x, t);
      REQUIRE(r.starts_with(x));
      CHECK(is_right_maximal(r, t));
      for (std::size_t len = x.size(); len < r.size(); ++len) {
        CHECK_FALSE(is_right_maximal(r.substr(0, len), t));
      }
    }
  }
}

TEST_CASE("maximal repeats branch at least twice") {
  for (const auto& s : testing::exhaustive_family(9, 2, 2)) {
    Text t(s);
    for (const auto& x : maximal_repeats(t)) {
      CHECK_MESSAGE(right_extensions(x, t).size() >= 2, s << " / " << x);
    }
  }
  // With only the end-marker there is a single symbol to branch on.
  CHECK(right_extensions("", Text("$")).size() == 1);
}

TEST_CASE("substring catalog agrees with the literal predicates") {
  std::mt19937_64 rng(3);
  auto family = testing::exhaustive_family(7, 3);
  for (int i = 0; i < 100; ++i) family.push_back(testing::random_text(rng, 30, 4));
  for (const auto& s : family) {
    Text t(s);
    SubstringCatalog cat(t.view());
    auto subs = all_substrings(t);
    REQUIRE(static_cast<std::size_t>(cat.size()) == subs.size());
    for (const auto& x : subs) {
      auto id = cat.find(x);
      REQUIRE(id.has_value());
      CHECK(cat.value(*id) == x);
      CHECK(cat.is_left_maximal(*id) == is_left_maximal(x, t));
      CHECK(cat.is_right_maximal(*id) == is_right_maximal(x, t));
      CHECK(cat.value(cat.rrep(*id)) == rrep(x, t));
      auto re = right_extensions(x, t);
      CHECK(cat.right_extensions(*id) == std::string(re.begin(), re.end()));
      if (!x.empty()) {
        auto bp = beg_pos(x, t);
        auto span = cat.begins(*id);
        REQUIRE(span.size() == bp.size());
        for (std::size_t k = 0; k < bp.size(); ++k) {
          CHECK(static_cast<Position>(span[k]) + 1 == bp[k]);
        }
      }
    }
    CHECK_FALSE(cat.find(s + "x").has_value());
  }
}
