// Shared test helpers: text enumeration, seeded generators, and a literal
// brute-force CDAWG used as an independent oracle.

#ifndef CDAWG_TESTS_SUPPORT_HPP
#define CDAWG_TESTS_SUPPORT_HPP

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "cdawg/oracle.hpp"
#include "cdawg/text.hpp"

namespace testing {

/// Every string of Σ^{n-1}·$ over the first `sigma` lowercase letters.
inline std::vector<std::string> all_texts(std::size_t n, std::size_t sigma) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::vector<std::string> next;
    for (const auto& s : out) {
      for (std::size_t c = 0; c < sigma; ++c) next.push_back(s + static_cast<char>('a' + c));
    }
    out.swap(next);
  }
  for (auto& s : out) s.push_back('$');
  return out;
}

/// Exhaustive family: all texts with 1 <= n <= max_n.
inline std::vector<std::string> exhaustive_family(std::size_t max_n, std::size_t sigma,
                                                  std::size_t min_n = 1) {
  std::vector<std::string> out;
  for (std::size_t n = min_n; n <= max_n; ++n) {
    auto level = all_texts(n, sigma);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

inline std::string random_text(std::mt19937_64& rng, std::size_t max_n, std::size_t sigma) {
  std::size_t n = 1 + rng() % max_n;
  std::string s;
  for (std::size_t i = 0; i + 1 < n; ++i) s.push_back(static_cast<char>('a' + rng() % sigma));
  s.push_back('$');
  return s;
}

/// Literal CDAWG: nodes are M(T) tested string by string; the edge for
/// (x, a) goes to the maximal string with the same end-position set as
/// rrep(xa). Shares nothing with the library's builders beyond the oracle
/// predicates.
struct BruteCdawg {
  std::vector<std::string> nodes;
  // (src, label, dst)
  std::vector<std::tuple<std::string, std::string, std::string>> edges;

  std::size_t e() const { return edges.size(); }
  std::map<std::string, std::size_t> in_degree() const {
    std::map<std::string, std::size_t> deg;
    for (const auto& [s, l, d] : edges) ++deg[d];
    return deg;
  }
  std::size_t v1() const {
    std::size_t count = 0;
    for (const auto& [node, deg] : in_degree()) count += deg == 1;
    return count;
  }
};

inline BruteCdawg brute_cdawg(const cdawg::Text& t) {
  using namespace cdawg::oracle;
  BruteCdawg out;
  for (const auto& x : all_substrings(t)) {
    if (is_left_maximal(x, t) && is_right_maximal(x, t)) out.nodes.push_back(x);
  }
  std::map<std::vector<cdawg::Position>, std::string> by_endpos;
  for (const auto& x : out.nodes) {
    if (!x.empty()) by_endpos[end_pos(x, t)] = x;
  }
  for (const auto& x : out.nodes) {
    if (x == t.str()) continue;
    for (char a : right_extensions(x, t)) {
      std::string r = rrep(x + a, t);
      out.edges.emplace_back(x, r.substr(x.size()), by_endpos.at(end_pos(r, t)));
    }
  }
  return out;
}

}  // namespace testing

#endif  // CDAWG_TESTS_SUPPORT_HPP
