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

// cdawg-lab: command-line front end.
//
// Exit status: 0 success, 1 usage or input error, 2 a bound was violated,
// 3 internal cross-check failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "cdawg/cdawg.hpp"
#include "cdawg/grammar.hpp"
#include "cdawg/sensitivity.hpp"
#include "cdawg/workbench.hpp"

namespace {

using namespace cdawg;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kViolation = 2;
constexpr int kCrossCheck = 3;

/// Longest input for which `build` also runs the quadratic builder.
constexpr std::size_t kCrossCheckLength = 4000;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputArgs {
  std::string input;
  std::string text;
  bool has_text = false;
};

void add_input(CLI::App* cmd, InputArgs& args) {
  cmd->add_option("input", args.input, "input file, or - for standard input");
  cmd->add_option("--text", args.text, "literal input; '$' is appended when absent")
      ->each([&args](const std::string&) { args.has_text = true; });
}

std::string slurp(std::istream& in) {
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

Text load(const InputArgs& args) {
  if (args.has_text) {
    if (!args.input.empty()) throw UsageError("give either an input file or --text, not both");
    try {
      return Text::from_literal(args.text);
    } catch (const InvalidText& e) {
      throw UsageError(e.what());
    }
  }
  if (args.input.empty()) throw UsageError("missing input (file, - or --text)");
  if (args.input == "-") {
    std::string bytes = slurp(std::cin);
    if (bytes.find(kEndMarker) != std::string::npos) {
      throw UsageError("standard input contains the reserved byte '$'");
    }
    return Text(bytes + kEndMarker);
  }
  try {
    return read_text_file(args.input);
  } catch (const CorpusError& e) {
    throw UsageError(e.what());
  }
}

void write_file(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << content;
}

int cmd_build(const InputArgs& in, const std::string& dot, bool json) {
  Text t = load(in);
  Cdawg c = build_via_suffix_tree(t);
  Metrics m = metrics(c);
  std::size_t g = eliminate_units(derive(c)).size();

  bool cross_ok = true;
  std::string diff;
  if (t.size() <= kCrossCheckLength) {
    auto d = structural_difference(c, build(t));
    if (d) {
      cross_ok = false;
      diff = *d;
    }
  }

  if (!dot.empty()) write_file(dot, to_dot(c));
  if (json) {
    nlohmann::ordered_json j{{"n", t.size()},      {"nodes", m.node_count}, {"e", m.e},
                             {"v1", m.v1},         {"g", g},
                             {"cross_checked", t.size() <= kCrossCheckLength}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "n=" << t.size() << " nodes=" << m.node_count << " e=" << m.e
              << " v1=" << m.v1 << " G=" << g << "\n";
  }
  if (!cross_ok) {
    std::cerr << "builders disagree: " << diff << "\n";
    return kCrossCheck;
  }
  return kOk;
}

int cmd_grammar(const InputArgs& in, const std::string& out) {
  Text t = load(in);
  Grammar g = cdawg_grammar(t);
  std::string doc = serialize(g);
  write_file(out.empty() ? "-" : out, doc);
  if (expand(parse(doc)) != t) {
    std::cerr << "grammar does not expand back to the input\n";
    return kCrossCheck;
  }
  return kOk;
}

int cmd_expand(const std::string& path, const InputArgs& verify) {
  std::string doc;
  if (path == "-") {
    doc = slurp(std::cin);
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot read " + path);
    doc = slurp(f);
  }
  Text t("$");
  try {
    t = expand(parse(doc));
  } catch (const MalformedGrammar& e) {
    throw UsageError(std::string("malformed grammar: ") + e.what());
  }
  if (verify.has_text || !verify.input.empty()) {
    Text want = load(verify);
    if (want != t) {
      std::cerr << "expansion differs from " << (verify.has_text ? "--text" : verify.input)
                << "\n";
      return kCrossCheck;
    }
    std::cout << "ok: " << t.size() << " symbols\n";
    return kOk;
  }
  std::cout << t.str() << "\n";
  return kOk;
}

int cmd_search(const InputArgs& in, const std::string& pattern) {
  Text t = load(in);
  auto hits = search(build_via_suffix_tree(t), pattern);
  for (Position p : hits) std::cout << p << "\n";

  std::vector<Position> naive;
  if (!pattern.empty()) {
    for (auto at = t.str().find(pattern); at != std::string::npos;
         at = t.str().find(pattern, at + 1)) {
      naive.push_back(at + 1);
    }
  }
  if (naive != hits) {
    std::cerr << "search disagrees with a naive scan\n";
    return kCrossCheck;
  }
  return kOk;
}

void print_violations(const char* what, const std::vector<ViolationCount>& vs) {
  if (vs.empty()) {
    std::cout << what << ": all hold\n";
    return;
  }
  std::cout << what << ":";
  for (const auto& v : vs) {
    std::cout << " " << v.name << " x" << v.count << " (first " << to_string(v.first) << ")";
  }
  std::cout << "\n";
}

int cmd_scan(const InputArgs& in, bool full, const std::string& csv, const std::string& json,
             bool extensions_only) {
  Text t = load(in);
  if (t.size() > kMaxScanLength) {
    throw UsageError("scan accepts at most " + std::to_string(kMaxScanLength) + " symbols");
  }
  CorpusSpec spec;
  spec.id = printable(t.str());
  spec.family = Family::text;
  spec.text = t.str();
  BatchOptions options;
  options.full = full;
  if (extensions_only) options.reading = NaddReading::extensions_only;
  BatchReport report;
  report.rows.push_back(run_one(spec, options));
  const BatchRow& row = report.rows.front();
  if (!row.ok()) throw UsageError(row.error);
  const ScanReport& s = *row.scan;

  std::cout << "n=" << row.n << " e=" << row.e << " v1=" << row.v1 << " G=" << row.g
            << " scenarios=" << s.scenarios << "\n";
  std::cout << "max_delta_e=" << s.max_delta_e;
  if (s.argmax_delta_e) std::cout << " at " << to_string(*s.argmax_delta_e);
  std::cout << "\nmax_delta_g=" << s.max_delta_g;
  if (s.argmax_delta_g) std::cout << " at " << to_string(*s.argmax_delta_g);
  std::cout << "\n";
  print_violations("bounds", s.bound_violations);
  print_violations("properties", s.property_violations);

  if (!csv.empty()) write_file(csv, to_csv(report));
  if (!json.empty()) write_file(json, to_json(report, full));

  if (!row.cross_check_ok) {
    std::cerr << "builders or grammar disagree on e, v1 or G\n";
    return kCrossCheck;
  }
  return s.bounds_all_hold ? kOk : kViolation;
}

int cmd_as(std::size_t n, std::size_t sigma) {
  try {
    std::cout << exhaustive_AS(n, sigma) << "\n";
  } catch (const std::length_error& e) {
    throw UsageError(e.what());
  }
  return kOk;
}

int cmd_gen(const std::string& family, std::optional<std::size_t> k,
            std::optional<std::size_t> len, std::optional<std::uint64_t> seed, std::size_t sigma,
            const std::string& out) {
  auto f = parse_family(family);
  if (!f || *f == Family::file || *f == Family::text) {
    throw UsageError("unknown family '" + family +
                     "' (fibonacci, thue-morse, period-doubling, random)");
  }
  CorpusSpec spec;
  spec.family = *f;
  spec.k = k;
  spec.length = len;
  spec.seed = seed;
  spec.sigma = sigma;
  try {
    write_file(out.empty() ? "-" : out, gen_family(spec).str() + (out.empty() ? "\n" : ""));
  } catch (const CorpusError& e) {
    throw UsageError(e.what());
  }
  return kOk;
}

int cmd_batch(const std::string& spec_path, const std::string& csv, const std::string& json,
              bool full, unsigned jobs, std::uint64_t seed) {
  std::ifstream f(spec_path, std::ios::binary);
  if (!f) throw UsageError("cannot read " + spec_path);
  std::vector<CorpusSpec> specs;
  try {
    specs = parse_specs(slurp(f), std::filesystem::path(spec_path).parent_path());
  } catch (const CorpusError& e) {
    throw UsageError(e.what());
  }
  BatchOptions options;
  options.full = full;
  options.jobs = jobs;
  options.seed = seed;
  BatchReport report = run_batch(specs, options);
  write_file(csv, to_csv(report));
  if (!json.empty()) write_file(json, to_json(report, full));
  if (csv != "-") {
    std::cout << report.rows.size() << " inputs, " << report.scanned() << " scanned, "
              << report.failed() << " failed\n";
  }
  for (const auto& row : report.rows) {
    if (!row.ok()) std::cerr << row.id << ": " << row.error << "\n";
  }
  if (!report.cross_checks_ok()) return kCrossCheck;
  return report.bounds_all_hold() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CDAWG grammar and edit-sensitivity workbench"};
  app.require_subcommand(1);

  InputArgs build_in;
  std::string dot;
  bool build_json = false;
  auto* build_cmd = app.add_subcommand("build", "print e, v1, G and the node count");
  add_input(build_cmd, build_in);
  build_cmd->add_option("--dot", dot, "write the graph in DOT format");
  build_cmd->add_flag("--json", build_json, "print JSON");

  InputArgs grammar_in;
  std::string grammar_out;
  auto* grammar_cmd = app.add_subcommand("grammar", "emit the serialized grammar");
  add_input(grammar_cmd, grammar_in);
  grammar_cmd->add_option("-o,--output", grammar_out, "output file (default stdout)");

  std::string expand_path;
  InputArgs expand_verify;
  auto* expand_cmd = app.add_subcommand("expand", "decompress a grammar, or verify it");
  expand_cmd->add_option("grammar", expand_path, "grammar file, or - for standard input")
      ->required();
  expand_cmd->add_option("--verify", expand_verify.input, "compare against this input file");
  expand_cmd->add_option("--verify-text", expand_verify.text, "compare against a literal")
      ->each([&](const std::string&) { expand_verify.has_text = true; });

  InputArgs search_in;
  std::vector<std::string> search_args;
  auto* search_cmd = app.add_subcommand("search", "print occurrence begins (1-based)");
  search_cmd->add_option("args", search_args, "<input> <pattern>, or <pattern> with --text")
      ->required()
      ->expected(1, 2);
  search_cmd->add_option("--text", search_in.text, "literal input")
      ->each([&](const std::string&) { search_in.has_text = true; });

  InputArgs scan_in;
  bool scan_full = false;
  bool scan_ext = false;
  std::string scan_csv, scan_json;
  auto* scan_cmd = app.add_subcommand("scan", "run every single edit and check the bounds");
  add_input(scan_cmd, scan_in);
  scan_cmd->add_flag("--full", scan_full, "include every scenario in the JSON report");
  scan_cmd->add_option("--csv", scan_csv, "write the summary row as CSV");
  scan_cmd->add_option("--json", scan_json, "write the JSON report");
  scan_cmd->add_flag("--extensions-only", scan_ext, "weaker reading of the N_add condition");

  std::size_t as_n = 0, as_sigma = 0;
  auto* as_cmd = app.add_subcommand("as", "largest ΔG over all texts of length n");
  as_cmd->add_option("--n", as_n, "text length including '$'")->required();
  as_cmd->add_option("--sigma", as_sigma, "alphabet size")->required();

  std::string gen_family_name, gen_out;
  std::optional<std::size_t> gen_k, gen_len;
  std::optional<std::uint64_t> gen_seed;
  std::size_t gen_sigma = 2;
  auto* gen_cmd = app.add_subcommand("gen", "generate a corpus string");
  gen_cmd->add_option("--family", gen_family_name,
                      "fibonacci, thue-morse, period-doubling or random")
      ->required();
  gen_cmd->add_option("--k", gen_k, "index");
  gen_cmd->add_option("--len", gen_len, "length before '$'");
  gen_cmd->add_option("--seed", gen_seed, "seed for random");
  gen_cmd->add_option("--sigma", gen_sigma, "alphabet size for random");
  gen_cmd->add_option("-o,--output", gen_out, "output file (default stdout)");

  std::string batch_spec, batch_csv, batch_json;
  bool batch_full = false;
  unsigned batch_jobs = 1;
  std::uint64_t batch_seed = 0;
  auto* batch_cmd = app.add_subcommand("batch", "run a corpus described by a JSON spec");
  batch_cmd->add_option("--spec", batch_spec, "JSON array of corpus specs")->required();
  batch_cmd->add_option("--csv", batch_csv, "CSV output, or -")->required();
  batch_cmd->add_option("--json", batch_json, "JSON output");
  batch_cmd->add_flag("--full", batch_full, "include every scenario in the JSON report");
  batch_cmd->add_option("--jobs", batch_jobs, "worker threads")->check(CLI::Range(1u, 256u));
  batch_cmd->add_option("--seed", batch_seed, "seed for random specs without one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*build_cmd) return cmd_build(build_in, dot, build_json);
    if (*grammar_cmd) return cmd_grammar(grammar_in, grammar_out);
    if (*expand_cmd) return cmd_expand(expand_path, expand_verify);
    if (*search_cmd) {
      if (search_args.size() != (search_in.has_text ? 1u : 2u)) {
        throw UsageError("search takes <input> <pattern>, or --text <text> <pattern>");
      }
      if (!search_in.has_text) search_in.input = search_args.front();
      return cmd_search(search_in, search_args.back());
    }
    if (*scan_cmd) return cmd_scan(scan_in, scan_full, scan_csv, scan_json, scan_ext);
    if (*as_cmd) return cmd_as(as_n, as_sigma);
    if (*gen_cmd) return cmd_gen(gen_family_name, gen_k, gen_len, gen_seed, gen_sigma, gen_out);
    if (*batch_cmd) {
      return cmd_batch(batch_spec, batch_csv, batch_json, batch_full, batch_jobs, batch_seed);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kCrossCheck;
  }
  return kUsage;
}
