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

#ifndef CDAWG_ORACLE_HPP
#define CDAWG_ORACLE_HPP

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cdawg/text.hpp"

// Brute-force string analytics taken straight from the definitions. These
// are the ground truth every other module is tested against; none of them
// tries to be fast.
namespace cdawg::oracle {

class NotASubstring : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A non-empty occurrence T[begin..end], 1-based inclusive.
struct Occurrence {
  Position begin = 0;
  Position end = 0;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

struct MaximalityRecord {
  std::string string;
  bool left_maximal = false;
  bool right_maximal = false;
  bool is_repeat = false;

  bool maximal() const { return left_maximal && right_maximal; }
};

using SymbolSet = std::set<char>;

/// Orders strings by length, then lexicographically (by unsigned byte).
bool shortlex_less(std::string_view a, std::string_view b);

/// Every i with T[i..i+|x|-1] = x, ascending. `x` must be non-empty.
std::vector<Position> beg_pos(std::string_view x, const Text& t);
std::vector<Position> end_pos(std::string_view x, const Text& t);
std::vector<Occurrence> occurrences(std::string_view x, const Text& t);

bool is_substring(std::string_view x, const Text& t);

bool is_left_maximal(std::string_view x, const Text& t);
bool is_right_maximal(std::string_view x, const Text& t);
MaximalityRecord maximality(std::string_view x, const Text& t);

/// M(T), ascending in shortlex order; always starts with ε and ends with T.
std::vector<std::string> maximal_set(const Text& t);

/// MR(T) = M(T) \ {T}.
std::vector<std::string> maximal_repeats(const Text& t);

/// Shortest right-maximal extension xβ of x.
std::string rrep(std::string_view x, const Text& t);

/// {a : xa ∈ Substr(T)}.
SymbolSet right_extensions(std::string_view x, const Text& t);
SymbolSet left_extensions(std::string_view x, const Text& t);

/// Every distinct substring of `t`, including ε, in shortlex order.
std::vector<std::string> all_substrings(const Text& t);

}  // namespace cdawg::oracle

#endif  // CDAWG_ORACLE_HPP
