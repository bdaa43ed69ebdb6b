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

// Build step: the embedded catalog must parse and validate without errors.

#include <cstdio>
#include <memory>

#include "pdl/catalog.hpp"
#include "pdl/parser.hpp"
#include "pdl/reports.hpp"
#include "pdl/validator.hpp"

int main() {
  try {
    pdl::PipelineDocument doc =
        pdl::parse(pdl::builtin_catalog_source(), pdl::kBuiltinSourceName);
    const pdl::ValidationReport report =
        pdl::validate(std::move(doc), std::make_shared<const pdl::Catalog>());
    if (report.error_count != 0) {
      std::fputs(pdl::validation_text(report).c_str(), stderr);
      return 1;
    }
  } catch (const pdl::ParseError& e) {
    std::fprintf(stderr, "built-in catalog: %s\n", e.what());
    return 1;
  }
  return 0;
}
