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

// Cross-reference resolution and structural checks of the reference model.
//
//   E001 duplicate identifier (including a document chunk reusing a catalog
//        chunk id)
//   E002 dangling reference (compose child, section via, input/output)
//   E003 composition cycle
//   E004 composed chunk not at a strictly finer level than its parent
//   E005 composed child needs a product not yet available
//   E006 parent output never produced by its children
//   E007 broken intention chain in a process map
//   E008 section target differs from the via chunk's intention
//   W101-W105 transparency warnings, W106/W107 skipped checks

#ifndef PDL_VALIDATOR_HPP_
#define PDL_VALIDATOR_HPP_

#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pdl/catalog.hpp"
#include "pdl/diagnostic.hpp"
#include "pdl/model.hpp"

namespace pdl {

// A document together with identifier lookups over the document and the
// catalog it was resolved against. Cheap to copy; shares its immutable
// inputs.
class ResolvedModel {
 public:
  const PipelineDocument& document() const { return *document_; }
  const Catalog& catalog() const { return *catalog_; }

  // Document chunks take precedence over catalog chunks with the same id.
  const Chunk* find_chunk(std::string_view id) const;
  const Product* find_product(std::string_view id) const;
  const ProcessMap* find_map(std::string_view id) const;

  bool is_document_chunk(const Chunk* chunk) const;

 private:
  friend struct ResolveAccess;

  std::shared_ptr<const PipelineDocument> document_;
  std::shared_ptr<const Catalog> catalog_;
  std::unordered_map<std::string, const Chunk*> chunks_;
  std::unordered_map<std::string, const Product*> products_;
  std::unordered_map<std::string, const ProcessMap*> maps_;
};

struct Resolution {
  ResolvedModel model;
  std::vector<Diagnostic> diagnostics;
};

// Builds identifier indexes, reporting E001 and E002. Resolution is
// best-effort: first definitions win so later checks still run.
Resolution resolve(PipelineDocument doc, std::shared_ptr<const Catalog> catalog);

// E003 and E004.
std::vector<Diagnostic> check_structure(const ResolvedModel& model);

// E005, E006 and W106.
std::vector<Diagnostic> check_product_flow(const ResolvedModel& model);

// E007, E008 and W107.
std::vector<Diagnostic> check_maps(const ResolvedModel& model);

// W101-W105.
std::vector<Diagnostic> check_transparency(const ResolvedModel& model);

// All checks above, sorted by (line, column, code) and de-duplicated.
ValidationReport validate(const Resolution& resolution);
ValidationReport validate(PipelineDocument doc,
                          std::shared_ptr<const Catalog> catalog);

}  // namespace pdl

#endif  // PDL_VALIDATOR_HPP_
