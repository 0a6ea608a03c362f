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

#include "cdawg/workbench.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "cdawg/cdawg.hpp"
#include "cdawg/grammar.hpp"

namespace cdawg {

namespace {

using Json = nlohmann::ordered_json;

void check_length(std::size_t n) {
  if (n > kMaxGeneratedLength) {
    throw CorpusError("requested length " + std::to_string(n) + " exceeds " +
                      std::to_string(kMaxGeneratedLength));
  }
}

std::size_t morphic_length(const CorpusSpec& spec) {
  if (spec.length) return *spec.length;
  if (!spec.k) throw CorpusError(std::string(to_string(spec.family)) + " needs k or length");
  if (*spec.k >= 63) throw CorpusError("k too large");
  return std::size_t{1} << *spec.k;
}

std::string fibonacci(const CorpusSpec& spec) {
  if (!spec.k && !spec.length) throw CorpusError("fibonacci needs k or length");
  if (spec.k && *spec.k == 0) throw CorpusError("fibonacci index starts at 1");
  std::string prev = "b";
  std::string cur = "a";
  if (spec.k && *spec.k == 1) {
    cur = prev;
  } else if (spec.k) {
    for (std::size_t i = 3; i <= *spec.k; ++i) {
      check_length(cur.size() + prev.size());
      std::string next = cur + prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
  }
  if (spec.length) {
    check_length(*spec.length);
    while (cur.size() < *spec.length) {
      std::string next = cur + prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    cur.resize(*spec.length);
  }
  return cur;
}

std::string thue_morse(std::size_t n) {
  std::string s(n, 'a');
  for (std::size_t i = 0; i < n; ++i) {
    if (std::popcount(i) % 2 == 1) s[i] = 'b';
  }
  return s;
}

std::string period_doubling(std::size_t n) {
  std::string s = "a";
  while (s.size() < n) {
    std::string next;
    next.reserve(2 * s.size());
    for (char c : s) next += c == 'a' ? "ab" : "aa";
    s = std::move(next);
  }
  s.resize(n);
  return s;
}

std::string random_word(const CorpusSpec& spec) {
  if (!spec.length) throw CorpusError("random needs length");
  if (spec.sigma < 1 || spec.sigma > 26) throw CorpusError("sigma must be in 1..26");
  std::mt19937_64 rng(spec.seed.value_or(0));
  std::uniform_int_distribution<std::size_t> pick(0, spec.sigma - 1);
  std::string s(*spec.length, 'a');
  for (char& c : s) c = static_cast<char>('a' + pick(rng));
  return s;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string edit_char(const EditOp& op) {
  return op.kind == EditKind::deletion ? std::string() : printable(op.c);
}

Json edit_json(const std::optional<EditOp>& op) {
  if (!op) return nullptr;
  Json j;
  j["op"] = to_string(op->kind);
  j["pos"] = op->i;
  j["char"] = edit_char(*op);
  return j;
}

Json entries_json(const std::vector<BoundEntry>& entries) {
  Json out = Json::array();
  for (const auto& b : entries) {
    out.push_back({{"name", b.name}, {"lhs", b.lhs}, {"rhs", b.rhs}, {"holds", b.holds}});
  }
  return out;
}

Json violations_json(const std::vector<ViolationCount>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) {
    out.push_back({{"name", v.name}, {"count", v.count}, {"first", to_string(v.first)}});
  }
  return out;
}

Json row_json(const BatchRow& row, bool full) {
  Json j;
  j["id"] = row.id;
  if (!row.ok()) {
    j["error"] = row.error;
    return j;
  }
  j["n"] = row.n;
  j["sigma"] = row.sigma;
  j["e"] = row.e;
  j["v1"] = row.v1;
  j["g"] = row.g;
  j["cross_check_ok"] = row.cross_check_ok;
  if (!row.scan) {
    j["scan"] = "skipped: longer than " + std::to_string(kMaxScanLength);
    return j;
  }
  const ScanReport& s = *row.scan;
  j["scenarios_run"] = s.scenarios;
  j["max_delta_e"] = s.max_delta_e;
  j["max_delta_g"] = s.max_delta_g;
  j["argmax"] = edit_json(s.argmax_delta_g);
  j["argmax_delta_e"] = edit_json(s.argmax_delta_e);
  j["bounds_all_hold"] = s.bounds_all_hold;
  j["properties_all_hold"] = s.properties_all_hold;
  j["bound_violations"] = violations_json(s.bound_violations);
  j["property_violations"] = violations_json(s.property_violations);
  if (full) {
    Json scenarios = Json::array();
    for (const auto& r : s.results) {
      Json sj;
      sj["edit"] = to_string(r.op);
      sj["t_prime"] = printable(r.t_prime);
      sj["delta_e"] = r.delta_e;
      sj["delta_v1"] = r.delta_v1;
      sj["delta_g"] = r.delta_g;
      sj["bounds"] = entries_json(r.report.bounds);
      sj["properties"] = entries_json(r.report.properties);
      scenarios.push_back(std::move(sj));
    }
    j["scenarios"] = std::move(scenarios);
  }
  return j;
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::fibonacci: return "fibonacci";
    case Family::thue_morse: return "thue-morse";
    case Family::period_doubling: return "period-doubling";
    case Family::random: return "random";
    case Family::file: return "file";
    case Family::text: return "text";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::fibonacci, Family::thue_morse, Family::period_doubling, Family::random,
                   Family::file, Family::text}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

Text read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot read " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (bytes.find(kEndMarker) != std::string::npos) {
    throw CorpusError(path.string() + " contains the reserved byte '$'");
  }
  check_length(bytes.size());
  bytes.push_back(kEndMarker);
  return Text(std::move(bytes));
}

Text gen_family(const CorpusSpec& spec) {
  std::string s;
  switch (spec.family) {
    case Family::fibonacci:
      s = fibonacci(spec);
      break;
    case Family::thue_morse: {
      std::size_t n = morphic_length(spec);
      check_length(n);
      s = thue_morse(n);
      break;
    }
    case Family::period_doubling: {
      std::size_t n = morphic_length(spec);
      check_length(n);
      s = period_doubling(n);
      break;
    }
    case Family::random:
      if (spec.length) check_length(*spec.length);
      s = random_word(spec);
      break;
    case Family::file:
      return read_text_file(spec.path);
    case Family::text:
      check_length(spec.text.size());
      try {
        return Text::from_literal(spec.text);
      } catch (const InvalidText& e) {
        throw CorpusError(e.what());
      }
  }
  s.push_back(kEndMarker);
  return Text(std::move(s));
}

std::string default_id(const CorpusSpec& spec) {
  std::string id(to_string(spec.family));
  switch (spec.family) {
    case Family::file:
      return id + ":" + spec.path.filename().string();
    case Family::text:
      return id + ":" + printable(spec.text.substr(0, 24));
    case Family::random:
      id += "-s" + std::to_string(spec.seed.value_or(0)) + "-sigma" + std::to_string(spec.sigma);
      break;
    default:
      break;
  }
  if (spec.k) id += "-k" + std::to_string(*spec.k);
  if (spec.length) id += "-len" + std::to_string(*spec.length);
  return id;
}

std::vector<CorpusSpec> parse_specs(std::string_view json, const std::filesystem::path& base_dir) {
  Json doc;
  try {
    doc = Json::parse(json);
  } catch (const Json::parse_error& e) {
    throw CorpusError(std::string("spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw CorpusError("spec must be a JSON array");

  std::vector<CorpusSpec> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const Json& item = doc[i];
    std::string where = "spec[" + std::to_string(i) + "]";
    if (!item.is_object()) throw CorpusError(where + " is not an object");
    static const std::vector<std::string> known{"id",   "family", "k",    "length",
                                                "seed", "sigma",  "path", "text"};
    for (auto it = item.begin(); it != item.end(); ++it) {
      if (std::find(known.begin(), known.end(), it.key()) == known.end()) {
        throw CorpusError(where + ": unknown key '" + it.key() + "'");
      }
    }
    try {
      CorpusSpec s;
      if (!item.contains("family")) throw CorpusError(where + ": missing family");
      auto fam = parse_family(item.at("family").get<std::string>());
      if (!fam) throw CorpusError(where + ": unknown family '" + item.at("family").get<std::string>() + "'");
      s.family = *fam;
      if (item.contains("id")) s.id = item.at("id").get<std::string>();
      if (item.contains("k")) s.k = item.at("k").get<std::size_t>();
      if (item.contains("length")) s.length = item.at("length").get<std::size_t>();
      if (item.contains("seed")) s.seed = item.at("seed").get<std::uint64_t>();
      if (item.contains("sigma")) s.sigma = item.at("sigma").get<std::size_t>();
      if (item.contains("path")) {
        std::filesystem::path p = item.at("path").get<std::string>();
        s.path = p.is_relative() ? base_dir / p : p;
      }
      if (item.contains("text")) s.text = item.at("text").get<std::string>();
      out.push_back(std::move(s));
    } catch (const Json::exception& e) {
      throw CorpusError(where + ": " + e.what());
    }
  }
  return out;
}

BatchRow run_one(const CorpusSpec& spec, const BatchOptions& options) {
  BatchRow row;
  row.id = spec.id.empty() ? default_id(spec) : spec.id;
  try {
    Text t = gen_family(spec);
    row.n = t.size();
    row.sigma = t.alphabet().size();

    Cdawg graph = build_via_suffix_tree(t);
    Metrics m = metrics(graph);
    Grammar grammar = eliminate_units(derive(graph));
    row.e = m.e;
    row.v1 = m.v1;
    row.g = grammar.size();
    row.cross_check_ok = expand(grammar) == t && (t.size() == 1 || row.g == row.e - row.v1);

    if (t.size() <= kMaxScanLength) {
      ScanOptions so;
      so.reading = options.reading;
      so.keep_scenarios = options.full;
      row.scan = scan(t, so);
      if (row.scan->e != row.e || row.scan->v1 != row.v1 || row.scan->g != row.g) {
        row.cross_check_ok = false;
      }
    }
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

BatchReport run_batch(const std::vector<CorpusSpec>& specs, const BatchOptions& options) {
  std::vector<CorpusSpec> resolved = specs;
  for (std::size_t i = 0; i < resolved.size(); ++i) {
    if (resolved[i].family == Family::random && !resolved[i].seed) {
      resolved[i].seed = options.seed + i;
    }
  }

  BatchReport report;
  report.rows.resize(resolved.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < resolved.size(); i = next++) {
      report.rows[i] = run_one(resolved[i], options);
    }
  };
  unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, resolved.size()));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  return report;
}

std::size_t BatchReport::failed() const {
  return std::count_if(rows.begin(), rows.end(), [](const BatchRow& r) { return !r.ok(); });
}

std::size_t BatchReport::scanned() const {
  return std::count_if(rows.begin(), rows.end(),
                       [](const BatchRow& r) { return r.scan.has_value(); });
}

bool BatchReport::bounds_all_hold() const {
  return std::all_of(rows.begin(), rows.end(), [](const BatchRow& r) {
    return !r.scan || r.scan->bounds_all_hold;
  });
}

bool BatchReport::cross_checks_ok() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const BatchRow& r) { return r.cross_check_ok; });
}

std::string_view csv_header() {
  return "id,n,sigma,e,v1,g,max_delta_e,max_delta_g,argmax_op,argmax_pos,argmax_char,"
         "bounds_all_hold";
}

std::string to_csv_row(const BatchRow& row) {
  std::ostringstream os;
  os << csv_field(row.id) << ',';
  if (!row.ok()) {
    os << ",,,,,,,,,,";
    return os.str();
  }
  os << row.n << ',' << row.sigma << ',' << row.e << ',' << row.v1 << ',' << row.g << ',';
  if (!row.scan) {
    os << ",,,,,";
    return os.str();
  }
  const ScanReport& s = *row.scan;
  os << s.max_delta_e << ',' << s.max_delta_g << ',';
  if (s.argmax_delta_g) {
    os << to_string(s.argmax_delta_g->kind) << ',' << s.argmax_delta_g->i << ','
       << csv_field(edit_char(*s.argmax_delta_g)) << ',';
  } else {
    os << ",,,";
  }
  os << (s.bounds_all_hold ? "true" : "false");
  return os.str();
}

std::string to_csv(const BatchReport& report) {
  std::string out(csv_header());
  out += '\n';
  for (const auto& row : report.rows) {
    out += to_csv_row(row);
    out += '\n';
  }
  return out;
}

std::string to_json(const BatchReport& report, bool full) {
  Json rows = Json::array();
  for (const auto& row : report.rows) rows.push_back(row_json(row, full));
  Json doc;
  doc["rows"] = std::move(rows);
  doc["summary"] = {{"inputs", report.rows.size()},
                    {"failed", report.failed()},
                    {"scanned", report.scanned()},
                    {"bounds_all_hold", report.bounds_all_hold()},
                    {"cross_checks_ok", report.cross_checks_ok()}};
  return doc.dump(2) + "\n";
}

}  // namespace cdawg
