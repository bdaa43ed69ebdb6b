// Copyright 2026 The PDL Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails or exceeds its time budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pdl/analyzer.hpp"
#include "pdl/catalog.hpp"
#include "pdl/parser.hpp"
#include "pdl/printer.hpp"
#include "pdl/validator.hpp"
#include "support/doc_generator.hpp"
#include "support/erasure.hpp"
#include "support/fixtures.hpp"
#include "support/lcs_oracle.hpp"
#include "support/mutations.hpp"

namespace {

using namespace pdl;
namespace t = pdl::testing;

// Thrown by require() with a description of the first violation.
struct Violation {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Violation{what};
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ",") + s;
  return "[" + out + "]";
}

std::shared_ptr<const Catalog> builtin() {
  static const auto c = std::make_shared<const Catalog>(builtin_catalog());
  return c;
}

PipelineDocument load_fixture(const std::string& name) {
  return parse(t::read_file(t::fixture(name)), name);
}

// 1. Built-in catalog fidelity.
std::string builtin_sets() {
  const Catalog c = builtin_catalog();
  std::map<Level, std::set<std::string>> by_level;
  for (const auto& e : c.entries()) by_level[e.chunk.level].insert(e.chunk.id);
  const std::set<std::string> pipeline = {
      "training_data_development", "feedback_loop", "inference_processing"};
  const std::set<std::string> process = {
      "label_definition", "data_collection",   "data_annotation",
      "data_filtering",   "data_processing",   "data_augmentation",
      "data_splitting",   "product_refinement"};
  const std::set<std::string> task = {"query_preparation", "image_crawling",
                                      "automatic_annotation", "human_annotation",
                                      "hybrid_annotation"};
  require(by_level[Level::kPipeline] == pipeline, "pipeline set differs");
  require(by_level[Level::kProcess] == process, "process set differs");
  require(by_level[Level::kTask] == task, "task set differs");
  require(by_level[Level::kSubtask].empty(), "unexpected subtask chunks");
  require(c.size() == 16, "catalog holds extra chunks");
  return "3 pipeline, 8 process, 5 task";
}

// 2. Grammar round-trip.
std::string grammar_round_trip() {
  const auto files = t::corpus();
  require(files.size() >= 10, "corpus has fewer than 10 fixtures");
  for (const auto& path : files) {
    const auto doc = parse(t::read_file(path), path.string());
    const std::string once = print_canonical(doc);
    const auto back = parse(once, path.string());
    require(back == doc, "round-trip differs for " + path.string());
    require(print_canonical(back) == once,
            "printer not idempotent for " + path.string());
  }
  t::DocGenerator gen(0x5eed);
  constexpr int kRandomDocs = 1000;
  for (int i = 0; i < kRandomDocs; ++i) {
    const auto doc = gen.document();
    require(doc.chunks.size() <= 10 && doc.maps.size() <= 3,
            "generator exceeded its bounds");
    const std::string once = print_canonical(doc);
    PipelineDocument back;
    try {
      back = parse(once, "<generated>");
    } catch (const ParseError& e) {
      throw Violation{"random document " + std::to_string(i) +
                      " does not reparse: " + e.what()};
    }
    require(back == doc, "random document " + std::to_string(i) + " differs");
    require(print_canonical(back) == once,
            "random document " + std::to_string(i) + " not idempotent");
  }
  return std::to_string(files.size()) + " fixtures + " +
         std::to_string(kRandomDocs) + " random documents";
}

// 3. Diagnostic mutation matrix.
std::string mutation_matrix() {
  const std::string base = t::read_file(t::fixture("imagenet_dev.pdl"));
  const auto clean = validate(parse(base, "imagenet_dev.pdl"), builtin());
  require(clean.diagnostics.empty(), "base fixture is not clean");
  const auto mutations = t::imagenet_mutations();
  require(mutations.size() >= 12, "fewer than 12 mutations");
  std::set<std::string> covered;
  for (const auto& m : mutations) {
    const auto report =
        validate(parse(t::apply_mutation(base, m), "imagenet_dev.pdl"),
                 builtin());
    std::vector<std::string> got;
    for (const auto& d : report.diagnostics) got.push_back(d.code);
    std::sort(got.begin(), got.end());
    require(got == m.expected_codes, "'" + m.name + "': expected " +
                                         join(m.expected_codes) + ", got " +
                                         join(got));
    covered.insert(got.begin(), got.end());
  }
  for (const char* code : {"E001", "E002", "E003", "E004", "E005", "E006",
                           "E007", "E008", "W101", "W102", "W103", "W104",
                           "W105", "W106", "W107"}) {
    require(covered.count(code) == 1, std::string("no mutation yields ") + code);
  }
  return std::to_string(mutations.size()) + " mutations, E001-E008 and W101-W107";
}

// 4. LCS oracle equivalence.
std::string lcs_oracle() {
  std::mt19937 rng(20261016);
  constexpr int kPairs = 500;
  for (int i = 0; i < kPairs; ++i) {
    const int alphabet = std::uniform_int_distribution<int>(1, 5)(rng);
    auto gen = [&] {
      std::vector<std::string> s(std::uniform_int_distribution<int>(0, 8)(rng));
      for (auto& x : s) {
        x = "c" + std::to_string(
                      std::uniform_int_distribution<int>(0, alphabet - 1)(rng));
      }
      return s;
    };
    const auto a = gen();
    const auto b = gen();
    t::Alignment got;
    for (const auto& p : lcs_align(a, b)) got.emplace_back(p.a, p.b);
    const auto want = t::oracle_alignment(a, b);
    require(got.size() == t::brute_lcs_length(a, a.size(), b, b.size()),
            "pair " + std::to_string(i) + ": alignment is not maximal");
    require(got == want,
            "pair " + std::to_string(i) + ": alignment differs from oracle");
  }
  return std::to_string(kPairs) + " pairs";
}

// 5. Training/deployment divergence.
std::string divergence() {
  const auto a = resolve(load_fixture("imagenet_dev.pdl"), builtin()).model;
  const auto b = resolve(load_fixture("imagenet_deploy.pdl"), builtin()).model;
  const auto d = diff(a, "imagenet_development", b, "imagenet_deployment",
                      Level::kProcess);
  require(!d.moved.empty(), "moved is empty");
  bool planted = false;
  for (const auto& cd : d.hyperparameter_deltas) {
    for (const auto& hd : cd.deltas) {
      planted = planted || (hd.key == "source" &&
                            hd.value_a == Value::string("flickr") &&
                            hd.value_b == Value::string("user_uploads"));
    }
  }
  require(planted, "planted source delta missing");
  return "moved=" + join(d.moved) + ", source delta present";
}

// 6. Completeness monotonicity.
std::string completeness_monotonicity() {
  auto dev = load_fixture("imagenet_dev.pdl");
  const auto full = completeness(resolve(dev, builtin()).model);
  require(full.present_fields == full.scored_fields && full.scored_fields > 0,
          "complete fixture does not score 1");
  auto erased = dev;
  erased.maps.at(0).sections.at(0).why_strategy.reset();
  const auto one = completeness(resolve(erased, builtin()).model);
  // 0.975 == 39/40, compared exactly.
  require(one.present_fields * 40 == one.scored_fields * 39,
          "one-erasure variant scores " +
              std::to_string(one.present_fields) + "/" +
              std::to_string(one.scored_fields));

  t::DocGenerator gen(77);
  std::mt19937_64 rng(78);
  constexpr int kTrials = 1000;
  for (int i = 0; i < kTrials; ++i) {
    // Alternate between random documents and the complete fixture.
    auto doc = i % 2 == 0 ? gen.document() : dev;
    const auto before = completeness(resolve(doc, builtin()).model);
    if (!t::erase_random_field(doc, rng)) continue;
    const auto after = completeness(resolve(doc, builtin()).model);
    require(after.scored_fields == before.scored_fields,
            "erasure changed the scored field count");
    // after/s <= before/s with a common denominator.
    require(after.present_fields <= before.present_fields,
            "trial " + std::to_string(i) + " increased document_score");
    for (std::size_t c = 0; c < after.chunks.size(); ++c) {
      require(after.chunks[c].present <= before.chunks[c].present,
              "trial " + std::to_string(i) + " increased a chunk score");
    }
  }
  return "score 1 and 39/40, " + std::to_string(kTrials) + " erasure trials";
}

// 7. Determinism of CLI output.
std::string determinism() {
  std::vector<std::vector<std::string>> commands;
  std::vector<std::string> all_files = {"check", "--json"};
  for (const auto& path : t::corpus()) {
    all_files.push_back(path.string());
    commands.push_back({"check", "--json", path.string()});
    commands.push_back({"report", "--json", path.string()});
    for (const auto& map : parse(t::read_file(path), path.string()).maps) {
      commands.push_back({"render", path.string(), "--map", map.id});
    }
  }
  commands.push_back(all_files);
  std::size_t renders = 0;
  for (const auto& args : commands) {
    const auto first = t::run_cli(args);
    renders += args[0] == "render" && first.exit_code == 0;
    for (int run = 1; run < 5; ++run) {
      const auto again = t::run_cli(args);
      require(again.out == first.out && again.err == first.err &&
                  again.exit_code == first.exit_code,
              "output differs between runs of: pdl " + join(args));
    }
  }
  require(renders >= 5, "too few maps rendered");
  return std::to_string(commands.size()) + " commands x 5 runs";
}

// 8. CLI exit-code contract.
std::string exit_codes() {
  struct Row {
    const char* label;
    std::vector<std::string> args;
    int expected;
  };
  const std::vector<Row> rows = {
      {"valid", {"check", t::fixture("imagenet_dev.pdl").string()}, 0},
      {"warnings", {"check", t::fixture("incomplete.pdl").string()}, 0},
      {"warnings+strict",
       {"check", "--strict", t::fixture("incomplete.pdl").string()}, 1},
      {"E-code", {"check", t::fixture("broken_chain.pdl").string()}, 1},
      {"syntax", {"check", t::fixture("invalid/syntax_error.pdl").string()}, 2},
      {"missing", {"check", t::fixture("no_such_file.pdl").string()}, 3},
  };
  std::string summary;
  for (const auto& row : rows) {
    const auto r = t::run_cli(row.args);
    require(r.exit_code == row.expected,
            std::string(row.label) + ": exit " + std::to_string(r.exit_code) +
                ", expected " + std::to_string(row.expected));
    summary += (summary.empty() ? "" : "/") + std::to_string(r.exit_code);
  }
  return summary;
}

struct Criterion {
  int number;
  const char* name;
  double budget_seconds;
  std::function<std::string()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "built-in catalog fidelity", 1, builtin_sets},
      {2, "grammar round-trip", 30, grammar_round_trip},
      {3, "diagnostic mutation matrix", 5, mutation_matrix},
      {4, "LCS oracle equivalence", 10, lcs_oracle},
      {5, "training/deployment divergence", 1, divergence},
      {6, "completeness monotonicity", 10, completeness_monotonicity},
      {7, "CLI determinism", 5, determinism},
      {8, "CLI exit-code contract", 5, exit_codes},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const Violation& v) {
      ok = false;
      detail = v.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (ok && secs > c.budget_seconds) {
      ok = false;
      detail += "; over budget";
    }
    failures += !ok;
    std::printf("%s AC%d %s (%.2fs, budget %.0fs): %s\n", ok ? "PASS" : "FAIL",
                c.number, c.name, secs, c.budget_seconds, detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu acceptance criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
