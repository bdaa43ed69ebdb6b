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

#ifndef PDL_DIAGNOSTIC_HPP_
#define PDL_DIAGNOSTIC_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdl/model.hpp"

namespace pdl {

// Stable diagnostic codes. E-codes are errors, W-codes warnings.
namespace codes {
inline constexpr std::string_view kSyntaxError = "E000";
inline constexpr std::string_view kDuplicateId = "E001";
inline constexpr std::string_view kDanglingRef = "E002";
inline constexpr std::string_view kCompositionCycle = "E003";
inline constexpr std::string_view kLevelOrder = "E004";
inline constexpr std::string_view kInputUnavailable = "E005";
inline constexpr std::string_view kOutputNotProduced = "E006";
inline constexpr std::string_view kChainBreak = "E007";
inline constexpr std::string_view kIntentionMismatch = "E008";
inline constexpr std::string_view kUnreportedIntention = "W101";
inline constexpr std::string_view kUnreportedStrategy = "W102";
inline constexpr std::string_view kNoHyperparameters = "W103";
inline constexpr std::string_view kMissingSelectionGuideline = "W104";
inline constexpr std::string_view kProductWithoutProperties = "W105";
inline constexpr std::string_view kFlowCheckSkipped = "W106";
inline constexpr std::string_view kIntentionCheckSkipped = "W107";
inline constexpr std::string_view kCatalogIgnoredDeclaration = "W110";
}  // namespace codes

enum class Severity { kError, kWarning };

std::string_view severity_name(Severity severity);

struct Diagnostic {
  std::string code;
  Severity severity = Severity::kError;
  std::string message;
  std::string source_name;
  int line = 1;
  int column = 1;
  std::optional<std::string> subject;

  // Severity follows from the code's prefix.
  static Diagnostic make(std::string_view code, std::string message,
                         std::string source_name, SourceLoc loc,
                         std::optional<std::string> subject = std::nullopt);

  bool is_error() const { return severity == Severity::kError; }

  bool operator==(const Diagnostic&) const = default;
};

// Sorts by (source, line, column, code, subject, message) and removes
// entries repeating an earlier (code, subject, source, line, column).
void sort_and_dedupe(std::vector<Diagnostic>& diagnostics);

struct ValidationReport {
  std::vector<Diagnostic> diagnostics;
  int error_count = 0;
  int warning_count = 0;

  static ValidationReport from(std::vector<Diagnostic> diagnostics);
};

// "file:line:col: error: E007: message"
std::string format_diagnostic(const Diagnostic& diagnostic);

}  // namespace pdl

#endif  // PDL_DIAGNOSTIC_HPP_
