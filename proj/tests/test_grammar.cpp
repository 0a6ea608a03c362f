#include <doctest.h>

#include "cdawg/grammar.hpp"
#include "support.hpp"

using namespace cdawg;

namespace {

const Text kNineNodeText("AGAGCGAGAGCGCGC$");

Symbol t(char c) { return Symbol::terminal(c); }
Symbol nt(RuleId r) { return Symbol::nonterminal(r); }

// Number of strings sharing x's end-position set: the suffixes of x down to
// the shortest one with the same end positions.
std::size_t class_size(const std::string& x, const Text& text) {
  if (x.empty()) return 0;
  auto ends = oracle::end_pos(x, text);
  std::size_t k = x.size();
  while (k > 1 && oracle::end_pos(x.substr(x.size() - (k - 1)), text) == ends) --k;
  return x.size() - k + 1;
}

}  // namespace

TEST_CASE("derive on small texts") {
  auto g = derive(build(Text("abab$")));
  REQUIRE(g.rules().size() == 2);
  CHECK(g.rule(1).rhs == std::vector<Symbol>{t('a'), t('b')});
  CHECK(g.rule(2).rhs == std::vector<Symbol>{nt(1), nt(1), t('$')});
  CHECK(g.start() == 2);
  CHECK(g.size() == 5);
  CHECK(expand(g).str() == "abab$");

  auto tiny = derive(build(Text("a$")));
  REQUIRE(tiny.rules().size() == 1);
  CHECK(tiny.rule(1).rhs == std::vector<Symbol>{t('a'), t('$')});

  auto nine = derive(build(kNineNodeText));
  CHECK(nine.size() == 18);
  CHECK(nine.rules().size() == 8);
  CHECK(expand(nine) == kNineNodeText);
}

TEST_CASE("eliminate_units") {
  auto g = eliminate_units(derive(build(Text("aab$"))));
  REQUIRE(g.rules().size() == 1);
  CHECK(g.rule(g.start()).rhs == std::vector<Symbol>{t('a'), t('a'), t('b'), t('$')});
  CHECK(g.size() == 4);

  auto nine = cdawg_grammar(kNineNodeText);
  CHECK(nine.size() == 13);
  CHECK(expand(nine) == kNineNodeText);
  for (const Rule& r : nine.rules()) CHECK(r.rhs.size() >= 2);

  // The single-symbol text keeps its start rule.
  auto end_only = cdawg_grammar(Text("$"));
  REQUIRE(end_only.rules().size() == 1);
  CHECK(end_only.rule(end_only.start()).rhs == std::vector<Symbol>{t('$')});
  CHECK(grammar_size(Text("$")) == 1);
}

TEST_CASE("grammar size equals e - v1") {
  std::mt19937_64 rng(23);
  auto family = testing::exhaustive_family(11, 2, 2);
  auto ternary = testing::exhaustive_family(8, 3, 2);
  family.insert(family.end(), ternary.begin(), ternary.end());
  for (int i = 0; i < 200; ++i) family.push_back(testing::random_text(rng, 300, 2 + i % 4));
  for (const auto& s : family) {
    if (s.size() == 1) continue;
    Text text(s);
    auto c = build_via_suffix_tree(text);
    auto m = metrics(c);
    auto g = eliminate_units(derive(c));
    CHECK_MESSAGE(g.size() == m.e - m.v1, s);
    CHECK(expand(g) == text);
  }
  // With only the end-marker the sink is a unit rule that has to stay.
  auto m = metrics(build(Text("$")));
  CHECK(m.e - m.v1 == 0);
  CHECK(grammar_size(Text("$")) == 1);
}

TEST_CASE("each rule expands to a prefix of its node as long as the node's class") {
  std::mt19937_64 rng(29);
  auto family = testing::exhaustive_family(9, 2, 2);
  for (int i = 0; i < 100; ++i) family.push_back(testing::random_text(rng, 40, 3));
  family.push_back(kNineNodeText.str());
  for (const auto& s : family) {
    Text text(s);
    auto c = build(text);
    auto g = derive(c);
    for (const Rule& r : g.rules()) {
      std::string x(c.longest(r.node));
      CHECK_MESSAGE(expand_rule(g, r.id) == x.substr(0, class_size(x, text)), s << " / " << x);
    }
  }
  // GAG shares its end positions with no shorter suffix.
  auto c = build(kNineNodeText);
  auto g = derive(c);
  auto gag = c.find_node("GAG");
  REQUIRE(gag.has_value());
  for (const Rule& r : g.rules()) {
    if (r.node == *gag) CHECK(expand_rule(g, r.id) == "G");
  }
}

TEST_CASE("serialize") {
  auto g = derive(build(Text("abab$")));
  CHECK(serialize(g) ==
        "CDAWG-GRAMMAR v1\n"
        "rules 2\n"
        "start R2\n"
        "R1: 'a' 'b'\n"
        "R2: R1 R1 '$'\n");

  Grammar odd({Rule{1, {t('\''), t('\\'), t('\n'), t('\xff'), t('$')}}}, 1);
  CHECK(serialize(odd) ==
        "CDAWG-GRAMMAR v1\nrules 1\nstart R1\nR1: '\\'' '\\\\' '\\x0A' '\\xFF' '$'\n");
  CHECK(parse(serialize(odd)) == odd);
}

TEST_CASE("parse rejects malformed documents") {
  const std::string ok = "CDAWG-GRAMMAR v1\nrules 2\nstart R2\nR1: 'a' 'b'\nR2: R1 R1 '$'\n";
  CHECK(parse(ok) == derive(build(Text("abab$"))));
  CHECK(parse(ok.substr(0, ok.size() - 1)) == parse(ok));

  auto bad = [](const std::string& doc) { CHECK_THROWS_AS(parse(doc), MalformedGrammar); };
  bad("");
  bad("CDAWG-GRAMMAR v2\nrules 1\nstart R1\nR1: '$'\n");
  bad("CDAWG-GRAMMAR v1\nrules 2\nstart R1\nR1: '$'\n");
  bad("CDAWG-GRAMMAR v1\nrules x\nstart R1\nR1: '$'\n");
  bad("CDAWG-GRAMMAR v1\nrules 1\nstart R9\nR1: '$'\n");
  bad("CDAWG-GRAMMAR v1\nrules 1\nstart R1\nR1:\n");
  bad("CDAWG-GRAMMAR v1\nrules 1\nstart R1\nR1: R2\n");
  bad("CDAWG-GRAMMAR v1\nrules 1\nstart R1\nR1:  '$'\n");
  bad("CDAWG-GRAMMAR v1\nrules 1\nstart R1\nR1: 'ab'\n");
  bad("CDAWG-GRAMMAR v1\nrules 1\nstart R1\nR1: '\\q'\n");
  bad("CDAWG-GRAMMAR v1\nrules 1\nstart R1\nR1: '\\xZZ'\n");
  bad("CDAWG-GRAMMAR v1\nrules 1\nstart R0\nR0: '$'\n");
  bad("CDAWG-GRAMMAR v1\nrules 2\nstart R1\nR1: '$'\nR1: 'a'\n");
  bad("CDAWG-GRAMMAR v1\nrules 1\nstart R1\nR1 '$'\n");

  try {
    parse("CDAWG-GRAMMAR v1\nrules 1\nstart R1\nR1: 'a\n");
    FAIL("expected a parse error");
  } catch (const MalformedGrammar& e) {
    CHECK(std::string(e.what()).starts_with("line 4:"));
  }
}

TEST_CASE("expand rejects cycles and invalid texts") {
  Grammar cyclic({Rule{1, {nt(2), t('$')}}, Rule{2, {nt(1), t('a')}}}, 1);
  CHECK_THROWS_AS(expand(cyclic), MalformedGrammar);
  Grammar no_marker({Rule{1, {t('a'), t('b')}}}, 1);
  CHECK_THROWS_AS(expand(no_marker), MalformedGrammar);
  CHECK(expand_rule(no_marker, 1) == "ab");
}

TEST_CASE("serialize and parse round-trip") {
  std::mt19937_64 rng(31);
  auto family = testing::exhaustive_family(8, 3);
  for (int i = 0; i < 100; ++i) family.push_back(testing::random_text(rng, 500, 2 + i % 5));
  for (const auto& s : family) {
    Text text(s);
    auto g = cdawg_grammar(text);
    auto back = parse(serialize(g));
    CHECK(back == g);
    CHECK(expand(back) == text);
  }
}
