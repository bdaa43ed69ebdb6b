/*
 * Copyright 2026 The PDL Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the pipeline description language (.pdl) toolchain.
 *
 * All functions return a pdl_status. On failure, pdl_last_error_message()
 * describes the most recent error on the calling thread; for PDL_ERROR_PARSE
 * the position is available from pdl_last_error_line/column().
 *
 * Strings returned through `char** out` are NUL-terminated UTF-8, owned by
 * the caller and released with pdl_string_free(). Handles are released with
 * their matching *_free function; passing NULL to a *_free function is a
 * no-op.
 *
 * A pdl_context holds the chunk catalog. Documents keep a reference to the
 * catalog they were resolved against, so a context may be freed while
 * documents created from it are still alive. All handles are immutable
 * after creation except pdl_context (while catalogs are being added) and
 * pdl_report (pdl_report_append); immutable handles may be shared between
 * threads.
 */

#ifndef PDL_PDL_H_
#define PDL_PDL_H_

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#if defined(PDL_BUILDING_LIBRARY)
#define PDL_API __declspec(dllexport)
#else
#define PDL_API __declspec(dllimport)
#endif
#else
#define PDL_API __attribute__((visibility("default")))
#endif

typedef enum pdl_status {
  PDL_OK = 0,
  PDL_ERROR_INVALID_ARGUMENT = 1,
  PDL_ERROR_IO = 2,
  PDL_ERROR_PARSE = 3,
  PDL_ERROR_NOT_FOUND = 4,
  PDL_ERROR_PRECONDITION = 5,
  PDL_ERROR_INTERNAL = 6
} pdl_status;

typedef enum pdl_format { PDL_FORMAT_TEXT = 0, PDL_FORMAT_JSON = 1 } pdl_format;

typedef enum pdl_level {
  PDL_LEVEL_PIPELINE = 0,
  PDL_LEVEL_PROCESS = 1,
  PDL_LEVEL_TASK = 2,
  PDL_LEVEL_SUBTASK = 3
} pdl_level;

typedef struct pdl_context pdl_context;
typedef struct pdl_document pdl_document;
typedef struct pdl_report pdl_report;

PDL_API const char* pdl_version(void);
PDL_API const char* pdl_status_name(pdl_status status);

PDL_API const char* pdl_last_error_message(void);
PDL_API int pdl_last_error_line(void);
PDL_API int pdl_last_error_column(void);

PDL_API void pdl_string_free(char* s);

/* "pipeline", "process", "task" or "subtask". */
PDL_API pdl_status pdl_level_from_name(const char* name, pdl_level* out);

/* ---- context and catalogs ---------------------------------------------- */

/* Creates a context, with the built-in catalog loaded when load_builtin is
 * non-zero. */
PDL_API pdl_status pdl_context_create(int load_builtin, pdl_context** out);
PDL_API void pdl_context_free(pdl_context* ctx);

/* Loads a catalog directory and merges it after the catalogs already
 * present (first definition wins). Duplicate ids, ignored declarations and
 * per-file syntax errors are recorded in the context's catalog report.
 * Fails with PDL_ERROR_IO if the directory cannot be read. */
PDL_API pdl_status pdl_context_add_catalog_dir(pdl_context* ctx,
                                               const char* dir);

/* Diagnostics collected while loading and merging catalogs. */
PDL_API pdl_status pdl_context_catalog_report(const pdl_context* ctx,
                                              pdl_report** out);

/* All catalog chunks (query == NULL) or those matching a case-insensitive
 * substring query, sorted by id. */
PDL_API pdl_status pdl_catalog_query(const pdl_context* ctx, const char* query,
                                     pdl_format format, char** out);

/* ---- documents ---------------------------------------------------------- */

PDL_API pdl_status pdl_document_parse(const pdl_context* ctx, const char* text,
                                      size_t length, const char* source_name,
                                      pdl_document** out);

/* Reads and parses a file; PDL_ERROR_IO if it cannot be read. */
PDL_API pdl_status pdl_document_load(const pdl_context* ctx, const char* path,
                                     pdl_document** out);

PDL_API void pdl_document_free(pdl_document* doc);

/* Canonical .pdl text of the document. */
PDL_API pdl_status pdl_document_format(const pdl_document* doc, char** out);

/* Completeness report. */
PDL_API pdl_status pdl_document_completeness(const pdl_document* doc,
                                             pdl_format format, char** out);

/* DOT graph of a process map. PDL_ERROR_NOT_FOUND for an unknown map,
 * PDL_ERROR_PRECONDITION for a broken intention chain. */
PDL_API pdl_status pdl_document_render_dot(const pdl_document* doc,
                                           const char* map_id, char** out);

/* Diff of two maps flattened to `level`. PDL_ERROR_NOT_FOUND for an unknown
 * map, PDL_ERROR_PRECONDITION if flattening hits a composition cycle. */
PDL_API pdl_status pdl_diff(const pdl_document* doc_a, const char* map_a,
                            const pdl_document* doc_b, const char* map_b,
                            pdl_level level, pdl_format format, char** out);

/* ---- validation reports ------------------------------------------------- */

PDL_API pdl_status pdl_document_validate(const pdl_document* doc,
                                         pdl_report** out);

/* Parses and validates a file in one step. A syntax error is not a failure
 * here: the status is PDL_ERROR_PARSE and *out holds a report with a single
 * E000 diagnostic. On PDL_ERROR_IO no report is produced. */
PDL_API pdl_status pdl_check_file(const pdl_context* ctx, const char* path,
                                  pdl_report** out);

PDL_API pdl_status pdl_report_create(pdl_report** out);
PDL_API void pdl_report_free(pdl_report* report);

/* Appends the diagnostics of `src` to `dst`, keeping their order. */
PDL_API pdl_status pdl_report_append(pdl_report* dst, const pdl_report* src);

PDL_API size_t pdl_report_error_count(const pdl_report* report);
PDL_API size_t pdl_report_warning_count(const pdl_report* report);

/* Text: one "file:line:col: severity: CODE: message" line per diagnostic.
 * JSON: {"diagnostics": [...], "errors": N, "warnings": M}. */
PDL_API pdl_status pdl_report_render(const pdl_report* report,
                                     pdl_format format, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PDL_PDL_H_ */
