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

// Domain types of the pipeline reference model: products, chunks with their
// guidelines, and intention-strategy process maps.
//
// All types are plain values. Equality is structural and ignores source
// locations, so a document re-parsed from its canonical printout compares
// equal to the original.

#ifndef PDL_MODEL_HPP_
#define PDL_MODEL_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pdl {

// Position of a construct in its source file (1-based). Locations are
// metadata: they never take part in structural equality.
struct SourceLoc {
  int line = 0;
  int column = 0;

  friend constexpr bool operator==(const SourceLoc&, const SourceLoc&) {
    return true;
  }
};

enum class Level { kPipeline = 0, kProcess = 1, kTask = 2, kSubtask = 3 };

// 0 for pipeline through 3 for subtask; finer levels have larger ranks.
int level_rank(Level level);
std::string_view level_name(Level level);
std::optional<Level> level_from_name(std::string_view name);

enum class ProductKind { kLabels, kImages, kAnnotations };

std::string_view product_kind_name(ProductKind kind);
std::optional<ProductKind> product_kind_from_name(std::string_view name);

enum class Phase { kUnspecified, kDevelopment, kDeployment };

std::string_view phase_name(Phase phase);

// The `?` marker: the author explicitly left a field undocumented.
struct Unreported {
  friend constexpr bool operator==(const Unreported&, const Unreported&) {
    return true;
  }
};

struct Value {
  struct String {
    std::string text;
    bool operator==(const String&) const = default;
  };
  // Kept as the source literal so printing reproduces it exactly.
  struct Number {
    std::string literal;
    bool operator==(const Number&) const = default;
  };
  struct Ident {
    std::string name;
    bool operator==(const Ident&) const = default;
  };
  struct List {
    std::vector<Value> items;
    bool operator==(const List&) const;
  };

  std::variant<Unreported, String, Number, Ident, List> data;

  bool is_unreported() const {
    return std::holds_alternative<Unreported>(data);
  }

  static Value unreported() { return Value{Unreported{}}; }
  static Value string(std::string text) { return Value{String{std::move(text)}}; }
  static Value number(std::string literal) {
    return Value{Number{std::move(literal)}};
  }
  static Value ident(std::string name) { return Value{Ident{std::move(name)}}; }
  static Value list(std::vector<Value> items) {
    return Value{List{std::move(items)}};
  }

  bool operator==(const Value&) const = default;
};

// key = value; entry of a product's properties or a guideline's
// hyperparameters.
struct Property {
  std::string key;
  Value value;
  SourceLoc loc;

  bool operator==(const Property&) const = default;
};

// An identifier used as a reference to a definition elsewhere.
struct Ref {
  std::string id;
  SourceLoc loc;

  bool operator==(const Ref&) const = default;
};

struct Product {
  std::string id;
  ProductKind kind = ProductKind::kLabels;
  std::vector<Property> properties;
  SourceLoc loc;

  bool operator==(const Product&) const = default;
};

struct TextStrategy {
  std::string description;
  bool operator==(const TextStrategy&) const = default;
};

// Sequence of strictly finer chunks; never empty.
struct ComposeStrategy {
  std::vector<Ref> children;
  bool operator==(const ComposeStrategy&) const = default;
};

using Strategy = std::variant<Unreported, TextStrategy, ComposeStrategy>;

// Guideline fields use std::nullopt for `?`.
struct Guideline {
  std::optional<std::string> intention;
  std::optional<std::vector<Ref>> inputs;
  std::optional<std::vector<Ref>> outputs;
  Strategy strategy;
  std::vector<Property> hyperparameters;

  SourceLoc intention_loc;
  SourceLoc inputs_loc;
  SourceLoc outputs_loc;
  SourceLoc strategy_loc;
  // Location of the `hyperparameters` block, or of the chunk when absent.
  SourceLoc hyperparameters_loc;

  bool operator==(const Guideline&) const = default;
};

struct Chunk {
  std::string id;
  Level level = Level::kProcess;
  Guideline guideline;
  std::vector<Value> keywords;
  SourceLoc loc;

  const ComposeStrategy* compose() const {
    return std::get_if<ComposeStrategy>(&guideline.strategy);
  }

  bool operator==(const Chunk&) const = default;
};

struct Section {
  std::string from;
  std::string to;
  Ref via;
  std::optional<std::string> why_intention;
  std::optional<std::string> why_strategy;

  SourceLoc loc;
  SourceLoc from_loc;
  SourceLoc to_loc;

  bool operator==(const Section&) const = default;
};

struct ProcessMap {
  std::string id;
  Phase phase = Phase::kUnspecified;
  std::string start;
  std::vector<Section> sections;

  SourceLoc loc;
  SourceLoc start_loc;

  bool operator==(const ProcessMap&) const = default;
};

struct PipelineDocument {
  std::string source_name;
  std::vector<Product> products;
  std::vector<Chunk> chunks;
  std::vector<ProcessMap> maps;

  bool empty() const {
    return products.empty() && chunks.empty() && maps.empty();
  }

  bool operator==(const PipelineDocument&) const = default;
};

}  // namespace pdl

#endif  // PDL_MODEL_HPP_
