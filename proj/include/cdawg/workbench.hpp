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

#ifndef CDAWG_WORKBENCH_HPP
#define CDAWG_WORKBENCH_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cdawg/sensitivity.hpp"
#include "cdawg/text.hpp"

namespace cdawg {

class CorpusError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// `text` is a literal string given inline.
enum class Family { fibonacci, thue_morse, period_doubling, random, file, text };

std::string_view to_string(Family f);
/// Accepts the names printed by to_string ("thue-morse", "period-doubling", ...).
std::optional<Family> parse_family(std::string_view name);

struct CorpusSpec {
  std::string id;  // empty means default_id()
  Family family = Family::random;
  /// Index for the morphic families: f_k for fibonacci, 2^k symbols for
  /// thue-morse and period-doubling.
  std::optional<std::size_t> k;
  /// Number of symbols before the end-marker; takes a prefix of the
  /// infinite word for the morphic families.
  std::optional<std::size_t> length;
  std::optional<std::uint64_t> seed;  // random only; 0 when absent
  std::size_t sigma = 2;              // random only
  std::filesystem::path path;
  std::string text;
};

/// Longest string gen_family will produce, end-marker excluded.
inline constexpr std::size_t kMaxGeneratedLength = std::size_t{1} << 22;

/// fibonacci: f_1 = "b", f_2 = "a", f_k = f_{k-1} f_{k-2}.
/// thue-morse: symbol i is 'a' or 'b' by the parity of set bits of i.
/// period-doubling: fixed point of a -> ab, b -> aa.
/// random: uniform over the first `sigma` lowercase letters, mt19937_64.
/// file: raw bytes; rejected if they contain '$'.
/// text: the literal, '$' appended when absent.
/// Throws CorpusError on missing or oversize parameters.
Text gen_family(const CorpusSpec& spec);

std::string default_id(const CorpusSpec& spec);

/// Raw bytes of a file plus the end-marker.
Text read_text_file(const std::filesystem::path& path);

/// A JSON array of objects with keys id, family, k, length, seed, sigma,
/// path, text. Relative paths are resolved against `base_dir`.
std::vector<CorpusSpec> parse_specs(std::string_view json, const std::filesystem::path& base_dir);

struct BatchOptions {
  bool full = false;
  NaddReading reading = NaddReading::all_crossing;
  unsigned jobs = 1;
  /// Seed for random specs that give none; row i uses seed + i.
  std::uint64_t seed = 0;
};

struct BatchRow {
  std::string id;
  std::string error;  // non-empty when the input could not be processed
  std::size_t n = 0;
  std::size_t sigma = 0;  // distinct symbols besides '$'
  std::size_t e = 0, v1 = 0, g = 0;
  /// Both builders and the grammar agree on e, v1 and G.
  bool cross_check_ok = true;
  /// Absent when the input is longer than kMaxScanLength.
  std::optional<ScanReport> scan;

  bool ok() const { return error.empty(); }
};

struct BatchReport {
  std::vector<BatchRow> rows;  // input order

  std::size_t failed() const;
  std::size_t scanned() const;
  bool bounds_all_hold() const;
  bool cross_checks_ok() const;
};

BatchRow run_one(const CorpusSpec& spec, const BatchOptions& options);
BatchReport run_batch(const std::vector<CorpusSpec>& specs, const BatchOptions& options = {});

std::string_view csv_header();
std::string to_csv_row(const BatchRow& row);
/// Header plus one line per row. The argmax columns give the edit with the
/// largest ΔG.
std::string to_csv(const BatchReport& report);
/// Rows mirror the CSV; `full` adds every scenario's bound report.
std::string to_json(const BatchReport& report, bool full);

}  // namespace cdawg

#endif  // CDAWG_WORKBENCH_HPP
