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

// Chunk catalogs: the built-in reference catalog plus user catalogs loaded
// from directories of `.pdl` files.

#ifndef PDL_CATALOG_HPP_
#define PDL_CATALOG_HPP_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pdl/diagnostic.hpp"
#include "pdl/io.hpp"
#include "pdl/model.hpp"

namespace pdl {

inline constexpr std::string_view kBuiltinOrigin = "builtin";
inline constexpr std::string_view kBuiltinSourceName = "<builtin>";

struct CatalogEntry {
  Chunk chunk;
  // "builtin" or the path of the file that defined the chunk.
  std::string origin;

  bool operator==(const CatalogEntry&) const = default;
};

// Identifier-unique set of chunk definitions, in insertion order.
class Catalog {
 public:
  // Returns false and leaves the catalog unchanged if the id is taken.
  bool add(Chunk chunk, std::string origin);

  const CatalogEntry* find(std::string_view id) const;
  bool contains(std::string_view id) const { return find(id) != nullptr; }

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // All chunk ids, sorted.
  std::vector<std::string> ids() const;

  friend bool operator==(const Catalog& a, const Catalog& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<CatalogEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct CatalogLoadResult {
  Catalog catalog;
  std::vector<Diagnostic> diagnostics;
};

// Text of the embedded built-in catalog asset.
std::string_view builtin_catalog_source();

// The reference catalog: 3 pipeline-, 8 process- and 5 task-level chunks.
Catalog builtin_catalog();

// Loads every `*.pdl` file directly inside `dir`, in lexicographic filename
// order. Only chunk definitions are kept; products and maps yield W110,
// syntax errors E000 (other files still load), and repeated ids E001 with
// the first definition winning. Throws IoError if `dir` or one of
// its files cannot be read.
CatalogLoadResult load_catalog_dir(const std::filesystem::path& dir);

// Union of `a` and `b`. On an id collision `a`'s entry is kept and E001 is
// reported at `b`'s definition.
CatalogLoadResult merge_catalogs(const Catalog& a, const Catalog& b);

// Case-insensitive substring search over ids, keywords and intentions.
// Results are sorted and unique; an empty query matches everything.
std::vector<std::string> search_catalog(const Catalog& catalog,
                                        std::string_view query);

}  // namespace pdl

#endif  // PDL_CATALOG_HPP_
