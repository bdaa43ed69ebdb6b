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

#include "pdl/pdl.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "pdl/analyzer.hpp"
#include "pdl/catalog.hpp"
#include "pdl/errors.hpp"
#include "pdl/io.hpp"
#include "pdl/parser.hpp"
#include "pdl/printer.hpp"
#include "pdl/render.hpp"
#include "pdl/reports.hpp"
#include "pdl/validator.hpp"

struct pdl_context {
  std::shared_ptr<const pdl::Catalog> catalog;
  std::vector<pdl::Diagnostic> catalog_diagnostics;
};

struct pdl_document {
  pdl::Resolution resolution;
};

struct pdl_report {
  std::vector<pdl::Diagnostic> diagnostics;
};

namespace {

struct LastError {
  std::string message;
  int line = 0;
  int column = 0;
};

thread_local LastError g_last_error;

pdl_status fail(pdl_status status, std::string message, int line = 0,
                int column = 0) {
  g_last_error = LastError{std::move(message), line, column};
  return status;
}

template <typename Fn>
pdl_status guarded(Fn&& fn) noexcept {
  try {
    g_last_error = LastError{};
    return fn();
  } catch (const pdl::ParseError& e) {
    return fail(PDL_ERROR_PARSE, e.what(), e.line(), e.column());
  } catch (const pdl::IoError& e) {
    return fail(PDL_ERROR_IO, e.what());
  } catch (const pdl::UnknownIdError& e) {
    return fail(PDL_ERROR_NOT_FOUND, e.what());
  } catch (const pdl::PreconditionError& e) {
    return fail(PDL_ERROR_PRECONDITION, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PDL_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PDL_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(PDL_ERROR_INTERNAL, "unknown error");
  }
}

pdl_status copy_out(const std::string& s, char** out) {
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (!buf) return fail(PDL_ERROR_INTERNAL, "out of memory");
  std::memcpy(buf, s.data(), s.size());
  buf[s.size()] = '\0';
  *out = buf;
  return PDL_OK;
}

pdl_status null_argument(const char* name) {
  return fail(PDL_ERROR_INVALID_ARGUMENT,
              std::string("argument '") + name + "' must not be NULL");
}

pdl::ValidationReport as_validation_report(const pdl_report& report) {
  pdl::ValidationReport out;
  out.diagnostics = report.diagnostics;
  for (const auto& d : out.diagnostics) {
    if (d.is_error()) {
      ++out.error_count;
    } else {
      ++out.warning_count;
    }
  }
  return out;
}

pdl_status parse_into(const pdl_context* ctx, std::string_view text,
                      std::string_view source_name, pdl_document** out) {
  auto doc = std::make_unique<pdl_document>(pdl_document{
      pdl::resolve(pdl::parse(text, source_name), ctx->catalog)});
  *out = doc.release();
  return PDL_OK;
}

}  // namespace

extern "C" {

const char* pdl_version(void) { return "1.0.0"; }

const char* pdl_status_name(pdl_status status) {
  switch (status) {
    case PDL_OK:
      return "ok";
    case PDL_ERROR_INVALID_ARGUMENT:
      return "invalid argument";
    case PDL_ERROR_IO:
      return "i/o error";
    case PDL_ERROR_PARSE:
      return "parse error";
    case PDL_ERROR_NOT_FOUND:
      return "not found";
    case PDL_ERROR_PRECONDITION:
      return "precondition failed";
    case PDL_ERROR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* pdl_last_error_message(void) {
  return g_last_error.message.c_str();
}

int pdl_last_error_line(void) { return g_last_error.line; }

int pdl_last_error_column(void) { return g_last_error.column; }

void pdl_string_free(char* s) { std::free(s); }

pdl_status pdl_level_from_name(const char* name, pdl_level* out) {
  if (!name) return null_argument("name");
  if (!out) return null_argument("out");
  const auto level = pdl::level_from_name(name);
  if (!level) {
    return fail(PDL_ERROR_INVALID_ARGUMENT,
                std::string("unknown level '") + name +
                    "' (expected pipeline, process, task or subtask)");
  }
  *out = static_cast<pdl_level>(pdl::level_rank(*level));
  return PDL_OK;
}

pdl_status pdl_context_create(int load_builtin, pdl_context** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    auto ctx = std::make_unique<pdl_context>();
    ctx->catalog = std::make_shared<const pdl::Catalog>(
        load_builtin ? pdl::builtin_catalog() : pdl::Catalog{});
    *out = ctx.release();
    return PDL_OK;
  });
}

void pdl_context_free(pdl_context* ctx) { delete ctx; }

pdl_status pdl_context_add_catalog_dir(pdl_context* ctx, const char* dir) {
  if (!ctx) return null_argument("ctx");
  if (!dir) return null_argument("dir");
  return guarded([&] {
    pdl::CatalogLoadResult loaded = pdl::load_catalog_dir(dir);
    pdl::CatalogLoadResult merged =
        pdl::merge_catalogs(*ctx->catalog, loaded.catalog);
    ctx->catalog = std::make_shared<const pdl::Catalog>(std::move(merged.catalog));
    auto& diags = ctx->catalog_diagnostics;
    diags.insert(diags.end(), loaded.diagnostics.begin(),
                 loaded.diagnostics.end());
    diags.insert(diags.end(), merged.diagnostics.begin(),
                 merged.diagnostics.end());
    return PDL_OK;
  });
}

pdl_status pdl_context_catalog_report(const pdl_context* ctx,
                                      pdl_report** out) {
  if (!ctx) return null_argument("ctx");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new pdl_report{ctx->catalog_diagnostics};
    return PDL_OK;
  });
}

pdl_status pdl_catalog_query(const pdl_context* ctx, const char* query,
                             pdl_format format, char** out) {
  if (!ctx) return null_argument("ctx");
  if (!out) return null_argument("out");
  return guarded([&] {
    const pdl::Catalog& catalog = *ctx->catalog;
    const std::vector<std::string> ids =
        query ? pdl::search_catalog(catalog, query) : catalog.ids();
    return copy_out(format == PDL_FORMAT_JSON ? pdl::catalog_json(catalog, ids)
                                              : pdl::catalog_text(catalog, ids),
                    out);
  });
}

pdl_status pdl_document_parse(const pdl_context* ctx, const char* text,
                              size_t length, const char* source_name,
                              pdl_document** out) {
  if (!ctx) return null_argument("ctx");
  if (!text && length > 0) return null_argument("text");
  if (!out) return null_argument("out");
  return guarded([&] {
    return parse_into(ctx, std::string_view(text ? text : "", length),
                      source_name ? source_name : "<input>", out);
  });
}

pdl_status pdl_document_load(const pdl_context* ctx, const char* path,
                             pdl_document** out) {
  if (!ctx) return null_argument("ctx");
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  return guarded([&] {
    const std::string text = pdl::read_text_file(path);
    return parse_into(ctx, text, path, out);
  });
}

void pdl_document_free(pdl_document* doc) { delete doc; }

pdl_status pdl_document_format(const pdl_document* doc, char** out) {
  if (!doc) return null_argument("doc");
  if (!out) return null_argument("out");
  return guarded([&] {
    return copy_out(
        pdl::print_canonical(doc->resolution.model.document()), out);
  });
}

pdl_status pdl_document_completeness(const pdl_document* doc,
                                     pdl_format format, char** out) {
  if (!doc) return null_argument("doc");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto& model = doc->resolution.model;
    const pdl::CompletenessReport report = pdl::completeness(model);
    const std::string& source = model.document().source_name;
    return copy_out(format == PDL_FORMAT_JSON
                        ? pdl::completeness_json(report, source)
                        : pdl::completeness_text(report, source),
                    out);
  });
}

pdl_status pdl_document_render_dot(const pdl_document* doc, const char* map_id,
                                   char** out) {
  if (!doc) return null_argument("doc");
  if (!map_id) return null_argument("map_id");
  if (!out) return null_argument("out");
  return guarded([&] {
    return copy_out(pdl::to_dot(doc->resolution.model, map_id), out);
  });
}

pdl_status pdl_diff(const pdl_document* doc_a, const char* map_a,
                    const pdl_document* doc_b, const char* map_b,
                    pdl_level level, pdl_format format, char** out) {
  if (!doc_a) return null_argument("doc_a");
  if (!doc_b) return null_argument("doc_b");
  if (!map_a) return null_argument("map_a");
  if (!map_b) return null_argument("map_b");
  if (!out) return null_argument("out");
  if (level < PDL_LEVEL_PIPELINE || level > PDL_LEVEL_SUBTASK) {
    return fail(PDL_ERROR_INVALID_ARGUMENT, "level out of range");
  }
  return guarded([&] {
    const pdl::PipelineDiff d =
        pdl::diff(doc_a->resolution.model, map_a, doc_b->resolution.model,
                  map_b, static_cast<pdl::Level>(level));
    return copy_out(
        format == PDL_FORMAT_JSON ? pdl::diff_json(d) : pdl::diff_text(d), out);
  });
}

pdl_status pdl_document_validate(const pdl_document* doc, pdl_report** out) {
  if (!doc) return null_argument("doc");
  if (!out) return null_argument("out");
  return guarded([&] {
    pdl::ValidationReport report = pdl::validate(doc->resolution);
    *out = new pdl_report{std::move(report.diagnostics)};
    return PDL_OK;
  });
}

pdl_status pdl_check_file(const pdl_context* ctx, const char* path,
                          pdl_report** out) {
  if (!ctx) return null_argument("ctx");
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  return guarded([&] {
    const std::string text = pdl::read_text_file(path);
    try {
      pdl::Resolution resolution =
          pdl::resolve(pdl::parse(text, path), ctx->catalog);
      pdl::ValidationReport report = pdl::validate(resolution);
      *out = new pdl_report{std::move(report.diagnostics)};
      return PDL_OK;
    } catch (const pdl::ParseError& e) {
      *out = new pdl_report{{pdl::Diagnostic::make(
          pdl::codes::kSyntaxError, e.message(), path,
          pdl::SourceLoc{e.line(), e.column()})}};
      return fail(PDL_ERROR_PARSE, e.what(), e.line(), e.column());
    }
  });
}

pdl_status pdl_report_create(pdl_report** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new pdl_report{};
    return PDL_OK;
  });
}

void pdl_report_free(pdl_report* report) { delete report; }

pdl_status pdl_report_append(pdl_report* dst, const pdl_report* src) {
  if (!dst) return null_argument("dst");
  if (!src) return null_argument("src");
  return guarded([&] {
    dst->diagnostics.insert(dst->diagnostics.end(), src->diagnostics.begin(),
                            src->diagnostics.end());
    return PDL_OK;
  });
}

size_t pdl_report_error_count(const pdl_report* report) {
  if (!report) return 0;
  return as_validation_report(*report).error_count;
}

size_t pdl_report_warning_count(const pdl_report* report) {
  if (!report) return 0;
  return as_validation_report(*report).warning_count;
}

pdl_status pdl_report_render(const pdl_report* report, pdl_format format,
                             char** out) {
  if (!report) return null_argument("report");
  if (!out) return null_argument("out");
  return guarded([&] {
    const pdl::ValidationReport r = as_validation_report(*report);
    return copy_out(format == PDL_FORMAT_JSON ? pdl::validation_json(r)
                                              : pdl::validation_text(r),
                    out);
  });
}

}  // extern "C"
