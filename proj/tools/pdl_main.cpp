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

// pdl: command-line front end over the libpdl C API.
//
// Exit codes: 0 success, 1 validation errors (or warnings with --strict),
// 2 syntax error, 3 usage or I/O error.

#include <pdl/pdl.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

enum ExitCode { kOk = 0, kInvalid = 1, kSyntax = 2, kUsage = 3 };

// Owning wrappers around the C handles.
struct ContextDeleter {
  void operator()(pdl_context* p) const { pdl_context_free(p); }
};
struct DocumentDeleter {
  void operator()(pdl_document* p) const { pdl_document_free(p); }
};
struct ReportDeleter {
  void operator()(pdl_report* p) const { pdl_report_free(p); }
};
struct StringDeleter {
  void operator()(char* p) const { pdl_string_free(p); }
};
using Context = std::unique_ptr<pdl_context, ContextDeleter>;
using Document = std::unique_ptr<pdl_document, DocumentDeleter>;
using Report = std::unique_ptr<pdl_report, ReportDeleter>;
using OwnedString = std::unique_ptr<char, StringDeleter>;

// Whole lines only, so concurrent writers never split a line.
void write(std::FILE* sink, const std::string& text) {
  if (text.empty()) return;
  std::fwrite(text.data(), 1, text.size(), sink);
  std::fflush(sink);
}

void error_line(const std::string& message) {
  write(stderr, "pdl: " + message + "\n");
}

int exit_for_status(pdl_status status) {
  switch (status) {
    case PDL_OK:
      return kOk;
    case PDL_ERROR_PARSE:
      return kSyntax;
    case PDL_ERROR_PRECONDITION:
      return kInvalid;
    default:
      return kUsage;
  }
}

struct Options {
  bool json = false;
  bool strict = false;
  bool no_builtin = false;
  std::vector<std::string> catalog_dirs;
};

std::vector<std::string> env_catalog_dirs() {
  std::vector<std::string> dirs;
  const char* env = std::getenv("PDL_CATALOG_PATH");
  if (!env) return dirs;
  std::stringstream in(env);
  std::string item;
  while (std::getline(in, item, ':')) {
    if (!item.empty()) dirs.push_back(item);
  }
  return dirs;
}

class Cli {
 public:
  explicit Cli(Options options) : options_(std::move(options)) {}

  // Builds the catalog context. Returns an exit code on failure.
  int init() {
    pdl_context* raw = nullptr;
    if (pdl_context_create(options_.no_builtin ? 0 : 1, &raw) != PDL_OK) {
      error_line(pdl_last_error_message());
      return kUsage;
    }
    ctx_.reset(raw);
    std::vector<std::string> dirs = env_catalog_dirs();
    dirs.insert(dirs.end(), options_.catalog_dirs.begin(),
                options_.catalog_dirs.end());
    for (const auto& dir : dirs) {
      if (pdl_context_add_catalog_dir(ctx_.get(), dir.c_str()) != PDL_OK) {
        error_line(pdl_last_error_message());
        return kUsage;
      }
    }
    return kOk;
  }

  pdl_format format() const {
    return options_.json ? PDL_FORMAT_JSON : PDL_FORMAT_TEXT;
  }

  int check(const std::vector<std::string>& files) {
    Report all = make_report();
    if (!all) return kUsage;
    int worst = kOk;
    auto fold = [&](const pdl_report* report, const std::string& label) {
      pdl_report_append(all.get(), report);
      const size_t errors = pdl_report_error_count(report);
      const size_t warnings = pdl_report_warning_count(report);
      if (!options_.json) {
        write(stderr, render(report, PDL_FORMAT_TEXT));
        if (!label.empty()) {
          write(stdout, label + ": " + std::to_string(errors) + " errors, " +
                            std::to_string(warnings) + " warnings\n");
        }
      }
      if (errors > 0 || (options_.strict && warnings > 0)) {
        worst = std::max(worst, static_cast<int>(kInvalid));
      }
    };

    Report catalog_report = catalog_diagnostics();
    if (catalog_report && pdl_report_error_count(catalog_report.get()) +
                                  pdl_report_warning_count(catalog_report.get()) >
                              0) {
      fold(catalog_report.get(), "catalogs");
    }
    for (const auto& file : files) {
      pdl_report* raw = nullptr;
      const pdl_status status = pdl_check_file(ctx_.get(), file.c_str(), &raw);
      Report report(raw);
      if (status == PDL_ERROR_IO || !report) {
        error_line(pdl_last_error_message());
        worst = std::max(worst, static_cast<int>(kUsage));
        continue;
      }
      fold(report.get(), file);
      if (status == PDL_ERROR_PARSE) {
        worst = std::max(worst, static_cast<int>(kSyntax));
      }
    }
    if (options_.json) write(stdout, render(all.get(), PDL_FORMAT_JSON));
    return worst;
  }

  int report(const std::string& file) {
    Document doc;
    if (int rc = load(file, doc); rc != kOk) return rc;
    char* out = nullptr;
    if (pdl_document_completeness(doc.get(), format(), &out) != PDL_OK) {
      return failure(PDL_ERROR_INTERNAL);
    }
    write(stdout, OwnedString(out).get());
    return kOk;
  }

  int diff(const std::string& file_a, const std::string& file_b,
           const std::string& map_a, const std::string& map_b,
           const std::string& level_name) {
    pdl_level level = PDL_LEVEL_PROCESS;
    if (pdl_level_from_name(level_name.c_str(), &level) != PDL_OK) {
      error_line(pdl_last_error_message());
      return kUsage;
    }
    Document a;
    Document b;
    if (int rc = load(file_a, a); rc != kOk) return rc;
    if (int rc = load(file_b, b); rc != kOk) return rc;
    char* out = nullptr;
    const pdl_status status = pdl_diff(a.get(), map_a.c_str(), b.get(),
                                       map_b.c_str(), level, format(), &out);
    if (status != PDL_OK) return failure(status);
    write(stdout, OwnedString(out).get());
    return kOk;
  }

  int render_map(const std::string& file, const std::string& map_id,
                 const std::string& output) {
    Document doc;
    if (int rc = load(file, doc); rc != kOk) return rc;
    char* out = nullptr;
    const pdl_status status =
        pdl_document_render_dot(doc.get(), map_id.c_str(), &out);
    if (status != PDL_OK) return failure(status);
    const std::string dot = OwnedString(out).get();
    if (!output.empty()) {
      std::ofstream file_out(output, std::ios::binary);
      if (!(file_out << dot)) {
        error_line(output + ": cannot write file");
        return kUsage;
      }
    }
    if (options_.json) {
      nlohmann::ordered_json j;
      j["map"] = map_id;
      j["dot"] = dot;
      write(stdout, j.dump(2) + "\n");
    } else if (output.empty()) {
      write(stdout, dot);
    }
    return kOk;
  }

  int fmt(const std::vector<std::string>& files, bool write_back,
          bool check_only) {
    int worst = kOk;
    auto json_items = nlohmann::ordered_json::array();
    for (const auto& file : files) {
      std::string original;
      if (!read_file(file, original)) {
        error_line(file + ": cannot open file");
        worst = std::max(worst, static_cast<int>(kUsage));
        continue;
      }
      Document doc;
      if (int rc = parse(original, file, doc); rc != kOk) {
        worst = std::max(worst, rc);
        continue;
      }
      char* out = nullptr;
      if (pdl_document_format(doc.get(), &out) != PDL_OK) {
        worst = std::max(worst, failure(PDL_ERROR_INTERNAL));
        continue;
      }
      const std::string canonical = OwnedString(out).get();
      const bool is_canonical = canonical == original;
      bool written = false;
      if (write_back && !is_canonical) {
        std::ofstream file_out(file, std::ios::binary | std::ios::trunc);
        if (!(file_out << canonical)) {
          error_line(file + ": cannot write file");
          worst = std::max(worst, static_cast<int>(kUsage));
          continue;
        }
        written = true;
      }
      if (check_only && !is_canonical) {
        if (!options_.json) write(stderr, file + ": not canonically formatted\n");
        worst = std::max(worst, static_cast<int>(kInvalid));
      }
      if (options_.json) {
        nlohmann::ordered_json item;
        item["file"] = file;
        item["canonical"] = is_canonical;
        item["written"] = written;
        if (!write_back && !check_only) item["output"] = canonical;
        json_items.push_back(std::move(item));
      } else if (!write_back && !check_only) {
        write(stdout, canonical);
      }
    }
    if (options_.json) {
      nlohmann::ordered_json j;
      j["files"] = std::move(json_items);
      write(stdout, j.dump(2) + "\n");
    }
    return worst;
  }

  int catalog(const std::string* query) {
    if (!options_.json) {
      Report catalog_report = catalog_diagnostics();
      if (catalog_report) write(stderr, render(catalog_report.get(), PDL_FORMAT_TEXT));
    }
    char* out = nullptr;
    if (pdl_catalog_query(ctx_.get(), query ? query->c_str() : nullptr,
                          format(), &out) != PDL_OK) {
      return failure(PDL_ERROR_INTERNAL);
    }
    write(stdout, OwnedString(out).get());
    return kOk;
  }

 private:
  static bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    out.assign(std::istreambuf_iterator<char>(in), {});
    return true;
  }

  Report make_report() {
    pdl_report* raw = nullptr;
    if (pdl_report_create(&raw) != PDL_OK) error_line(pdl_last_error_message());
    return Report(raw);
  }

  Report catalog_diagnostics() {
    pdl_report* raw = nullptr;
    pdl_context_catalog_report(ctx_.get(), &raw);
    return Report(raw);
  }

  static std::string render(const pdl_report* report, pdl_format format) {
    char* out = nullptr;
    if (pdl_report_render(report, format, &out) != PDL_OK) return {};
    return OwnedString(out).get();
  }

  int failure(pdl_status status) {
    error_line(pdl_last_error_message());
    return exit_for_status(status);
  }

  int parse(const std::string& text, const std::string& source, Document& doc) {
    pdl_document* raw = nullptr;
    const pdl_status status = pdl_document_parse(
        ctx_.get(), text.data(), text.size(), source.c_str(), &raw);
    if (status != PDL_OK) return failure(status);
    doc.reset(raw);
    return kOk;
  }

  int load(const std::string& path, Document& doc) {
    pdl_document* raw = nullptr;
    const pdl_status status = pdl_document_load(ctx_.get(), path.c_str(), &raw);
    if (status != PDL_OK) return failure(status);
    doc.reset(raw);
    return kOk;
  }

  Options options_;
  Context ctx_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pdl - pipeline description language toolchain"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(pdl_version()));

  Options options;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", options.json, "Machine-readable JSON output");
    cmd->add_flag("--strict", options.strict, "Treat warnings as failures");
    cmd->add_option("--catalog", options.catalog_dirs,
                    "Additional chunk catalog directory (repeatable)");
    cmd->add_flag("--no-builtin", options.no_builtin,
                  "Do not load the built-in chunk catalog");
  };
  add_common(&app);

  std::vector<std::string> check_files;
  auto* check = app.add_subcommand("check", "Validate .pdl files");
  check->add_option("files", check_files, "Input files")->required();

  std::string report_file;
  auto* report = app.add_subcommand("report", "Completeness report");
  report->add_option("file", report_file, "Input file")->required();

  std::string diff_a, diff_b, map_a, map_b, level = "process";
  auto* diff = app.add_subcommand("diff", "Diff two process maps");
  diff->add_option("file_a", diff_a, "First file")->required();
  diff->add_option("file_b", diff_b, "Second file")->required();
  diff->add_option("--map-a", map_a, "Map in the first file")->required();
  diff->add_option("--map-b", map_b, "Map in the second file")->required();
  diff->add_option("--level", level, "Granularity to flatten to")
      ->capture_default_str();

  std::string render_file, render_map, render_out;
  auto* render = app.add_subcommand("render", "Export a process map as DOT");
  render->add_option("file", render_file, "Input file")->required();
  render->add_option("--map", render_map, "Map id")->required();
  render->add_option("-o,--output", render_out, "Output .dot file");

  std::vector<std::string> fmt_files;
  bool fmt_write = false;
  bool fmt_check = false;
  auto* fmt = app.add_subcommand("fmt", "Canonically format .pdl files");
  fmt->add_option("files", fmt_files, "Input files")->required();
  auto* write_flag = fmt->add_flag("--write", fmt_write, "Rewrite files in place");
  fmt->add_flag("--check", fmt_check, "Fail if a file is not canonical")
      ->excludes(write_flag);

  auto* catalog = app.add_subcommand("catalog", "Inspect the chunk catalog");
  catalog->require_subcommand(1);
  auto* catalog_list = catalog->add_subcommand("list", "List all chunks");
  std::string query;
  auto* catalog_search =
      catalog->add_subcommand("search", "Search ids, keywords and intentions");
  catalog_search->add_option("query", query, "Search text")->required();

  for (auto* cmd : {check, report, diff, render, fmt, catalog, catalog_list,
                    catalog_search}) {
    add_common(cmd);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  Cli cli(options);
  if (int rc = cli.init(); rc != kOk) return rc;

  if (*check) return cli.check(check_files);
  if (*report) return cli.report(report_file);
  if (*diff) return cli.diff(diff_a, diff_b, map_a, map_b, level);
  if (*render) return cli.render_map(render_file, render_map, render_out);
  if (*fmt) return cli.fmt(fmt_files, fmt_write, fmt_check);
  if (*catalog_list) return cli.catalog(nullptr);
  if (*catalog_search) return cli.catalog(&query);
  return kUsage;
}
