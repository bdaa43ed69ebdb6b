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

// Text and JSON renderings of validation, completeness, diff and catalog
// results. JSON keys are emitted in a fixed order:
//
//   validation:   {"diagnostics": [{"code", "severity", "message", "file",
//                  "line", "column", "subject"}], "errors", "warnings"}
//   completeness: {"file", "chunks": [{"id", "present", "score",
//                  "missing"}], "sections": [{"map", "index", "present"}],
//                  "present", "total", "document_score"}
//   diff:         {"level", "sequence_a", "sequence_b", "aligned": [{"a",
//                  "b", "id"}], "only_in_a": [{"position", "id"}],
//                  "only_in_b", "moved", "hyperparameter_deltas": [{"id",
//                  "position_a", "position_b", "deltas": [{"key", "a",
//                  "b"}]}]}
//   catalog:      {"chunks": [{"id", "level", "origin", "intention",
//                  "keywords"}]}
//
// Values inside hyperparameter deltas are rendered in `.pdl` syntax; a key
// missing on one side is null.

#ifndef PDL_REPORTS_HPP_
#define PDL_REPORTS_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "pdl/analyzer.hpp"
#include "pdl/catalog.hpp"
#include "pdl/diagnostic.hpp"

namespace pdl {

std::string validation_json(const ValidationReport& report);
std::string validation_text(const ValidationReport& report);

std::string completeness_json(const CompletenessReport& report,
                              std::string_view source_name);
std::string completeness_text(const CompletenessReport& report,
                              std::string_view source_name);

std::string diff_json(const PipelineDiff& diff);
std::string diff_text(const PipelineDiff& diff);

std::string catalog_json(const Catalog& catalog,
                         const std::vector<std::string>& ids);
std::string catalog_text(const Catalog& catalog,
                         const std::vector<std::string>& ids);

// Shortest decimal that reads back as `value` ("1", "0.975", ...).
std::string format_score(double value);

}  // namespace pdl

#endif  // PDL_REPORTS_HPP_
