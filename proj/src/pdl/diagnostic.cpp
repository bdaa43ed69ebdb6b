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

#include "pdl/diagnostic.hpp"

#include <algorithm>
#include <tuple>

namespace pdl {

std::string_view severity_name(Severity severity) {
  return severity == Severity::kError ? "error" : "warning";
}

Diagnostic Diagnostic::make(std::string_view code, std::string message,
                            std::string source_name, SourceLoc loc,
                            std::optional<std::string> subject) {
  Diagnostic d;
  d.code = std::string(code);
  d.severity = (!code.empty() && code.front() == 'W') ? Severity::kWarning
                                                      : Severity::kError;
  d.message = std::move(message);
  d.source_name = std::move(source_name);
  d.line = std::max(loc.line, 1);
  d.column = std::max(loc.column, 1);
  d.subject = std::move(subject);
  return d;
}

void sort_and_dedupe(std::vector<Diagnostic>& diagnostics) {
  auto key = [](const Diagnostic& d) {
    return std::tie(d.source_name, d.line, d.column, d.code, d.subject,
                    d.message);
  };
  std::stable_sort(
      diagnostics.begin(), diagnostics.end(),
      [&](const Diagnostic& a, const Diagnostic& b) { return key(a) < key(b); });
  auto same_site = [](const Diagnostic& a, const Diagnostic& b) {
    return a.code == b.code && a.subject == b.subject &&
           a.source_name == b.source_name && a.line == b.line &&
           a.column == b.column;
  };
  diagnostics.erase(
      std::unique(diagnostics.begin(), diagnostics.end(), same_site),
      diagnostics.end());
}

ValidationReport ValidationReport::from(std::vector<Diagnostic> diagnostics) {
  ValidationReport report;
  sort_and_dedupe(diagnostics);
  for (const auto& d : diagnostics) {
    if (d.is_error()) {
      ++report.error_count;
    } else {
      ++report.warning_count;
    }
  }
  report.diagnostics = std::move(diagnostics);
  return report;
}

std::string format_diagnostic(const Diagnostic& d) {
  std::string out = d.source_name;
  out += ':';
  out += std::to_string(d.line);
  out += ':';
  out += std::to_string(d.column);
  out += ": ";
  out += severity_name(d.severity);
  out += ": ";
  out += d.code;
  out += ": ";
  out += d.message;
  return out;
}

}  // namespace pdl
