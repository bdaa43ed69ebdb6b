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

#include "pdl/catalog.hpp"

#include <algorithm>
#include <system_error>

#include "pdl/parser.hpp"
#include "pdl/text.hpp"

namespace pdl {

bool Catalog::add(Chunk chunk, std::string origin) {
  if (index_.contains(chunk.id)) return false;
  index_.emplace(chunk.id, entries_.size());
  entries_.push_back(CatalogEntry{std::move(chunk), std::move(origin)});
  return true;
}

const CatalogEntry* Catalog::find(std::string_view id) const {
  const auto it = index_.find(std::string(id));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

std::vector<std::string> Catalog::ids() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.chunk.id);
  std::sort(out.begin(), out.end());
  return out;
}

Catalog builtin_catalog() {
  static const Catalog kBuiltin = [] {
    Catalog catalog;
    PipelineDocument doc = parse(builtin_catalog_source(), kBuiltinSourceName);
    for (auto& chunk : doc.chunks) {
      catalog.add(std::move(chunk), std::string(kBuiltinOrigin));
    }
    return catalog;
  }();
  return kBuiltin;
}

namespace {

Diagnostic duplicate_in_catalog(const Chunk& chunk, const std::string& source,
                                const std::string& kept_origin) {
  return Diagnostic::make(codes::kDuplicateId,
                          "chunk '" + chunk.id +
                              "' is already defined in catalog (" +
                              kept_origin + "); keeping the first definition",
                          source, chunk.loc, chunk.id);
}

}  // namespace

CatalogLoadResult load_catalog_dir(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw IoError(dir.string() + ": not a readable directory");
  }
  std::vector<fs::path> files;
  fs::directory_iterator it(dir, ec);
  if (ec) throw IoError(dir.string() + ": " + ec.message());
  for (const auto& entry : it) {
    if (entry.path().extension() == ".pdl" && entry.is_regular_file(ec)) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });

  CatalogLoadResult result;
  for (const auto& file : files) {
    const std::string source = file.string();
    const std::string text = read_text_file(file);
    PipelineDocument doc;
    try {
      doc = parse(text, source);
    } catch (const ParseError& e) {
      result.diagnostics.push_back(
          Diagnostic::make(codes::kSyntaxError, e.message(), source,
                           SourceLoc{e.line(), e.column()}));
      continue;
    }
    for (const auto& product : doc.products) {
      result.diagnostics.push_back(Diagnostic::make(
          codes::kCatalogIgnoredDeclaration,
          "product '" + product.id + "' in a catalog file is ignored", source,
          product.loc, product.id));
    }
    for (const auto& map : doc.maps) {
      result.diagnostics.push_back(Diagnostic::make(
          codes::kCatalogIgnoredDeclaration,
          "map '" + map.id + "' in a catalog file is ignored", source, map.loc,
          map.id));
    }
    for (auto& chunk : doc.chunks) {
      if (const CatalogEntry* kept = result.catalog.find(chunk.id)) {
        result.diagnostics.push_back(
            duplicate_in_catalog(chunk, source, kept->origin));
        continue;
      }
      result.catalog.add(std::move(chunk), source);
    }
  }
  return result;
}

CatalogLoadResult merge_catalogs(const Catalog& a, const Catalog& b) {
  CatalogLoadResult result;
  result.catalog = a;
  for (const auto& entry : b.entries()) {
    if (const CatalogEntry* kept = a.find(entry.chunk.id)) {
      const std::string source = entry.origin == kBuiltinOrigin
                                     ? std::string(kBuiltinSourceName)
                                     : entry.origin;
      result.diagnostics.push_back(
          duplicate_in_catalog(entry.chunk, source, kept->origin));
      continue;
    }
    result.catalog.add(entry.chunk, entry.origin);
  }
  return result;
}

namespace {

bool value_matches(const Value& value, const std::string& needle) {
  if (const auto* s = std::get_if<Value::String>(&value.data)) {
    return fold_case(s->text).find(needle) != std::string::npos;
  }
  if (const auto* i = std::get_if<Value::Ident>(&value.data)) {
    return fold_case(i->name).find(needle) != std::string::npos;
  }
  if (const auto* l = std::get_if<Value::List>(&value.data)) {
    return std::any_of(l->items.begin(), l->items.end(),
                       [&](const Value& v) { return value_matches(v, needle); });
  }
  return false;
}

bool chunk_matches(const Chunk& chunk, const std::string& needle) {
  if (fold_case(chunk.id).find(needle) != std::string::npos) return true;
  if (chunk.guideline.intention &&
      fold_case(*chunk.guideline.intention).find(needle) != std::string::npos) {
    return true;
  }
  return std::any_of(chunk.keywords.begin(), chunk.keywords.end(),
                     [&](const Value& v) { return value_matches(v, needle); });
}

}  // namespace

std::vector<std::string> search_catalog(const Catalog& catalog,
                                        std::string_view query) {
  const std::string needle = fold_case(query);
  std::vector<std::string> out;
  for (const auto& entry : catalog.entries()) {
    if (chunk_matches(entry.chunk, needle)) out.push_back(entry.chunk.id);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace pdl
