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

// Random well-formed documents for round-trip properties. Source locations
// are left default; structural equality ignores them.

#ifndef PDL_TESTS_SUPPORT_DOC_GENERATOR_HPP_
#define PDL_TESTS_SUPPORT_DOC_GENERATOR_HPP_

#include <random>
#include <string>
#include <vector>

#include "pdl/model.hpp"

namespace pdl::testing {

class DocGenerator {
 public:
  explicit DocGenerator(std::uint64_t seed) : rng_(seed) {}

  PipelineDocument document(const std::string& source_name = "<generated>") {
    PipelineDocument doc;
    doc.source_name = source_name;
    const int products = uniform(0, 4);
    for (int i = 0; i < products; ++i) doc.products.push_back(product());
    const int chunks = uniform(0, 10);
    for (int i = 0; i < chunks; ++i) doc.chunks.push_back(chunk());
    const int maps = uniform(0, 3);
    for (int i = 0; i < maps; ++i) doc.maps.push_back(map());
    return doc;
  }

  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  std::string ident() {
    static const std::vector<std::string> kWords = {
        "chunk", "map",  "text", "labels", "section", "via", "from", "process",
    };
    if (coin(0.1)) return kWords[uniform(0, int(kWords.size()) - 1)];
    static const std::string kStart =
        "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_";
    static const std::string kRest = kStart + "0123456789-";
    std::string out(1, kStart[uniform(0, int(kStart.size()) - 1)]);
    const int len = uniform(0, 8);
    for (int i = 0; i < len; ++i) out += kRest[uniform(0, int(kRest.size()) - 1)];
    return out;
  }

  std::string text() {
    static const std::vector<std::string> kPieces = {
        "a",  "b",    "z",  " ",  "\"", "\\", "#",  "\n", ";",
        "{",  "}",    "?",  "é",  "é", "日", "😀", "\t", "images collected"};
    std::string out;
    const int len = uniform(0, 6);
    for (int i = 0; i < len; ++i) out += kPieces[uniform(0, int(kPieces.size()) - 1)];
    return out;
  }

  std::string number() {
    std::string out = coin(0.2) ? "-" : "";
    out += std::to_string(uniform(0, 100000));
    if (coin()) out += "." + std::to_string(uniform(0, 999));
    return out;
  }

  Value value(int depth = 0) {
    switch (uniform(0, depth < 2 ? 4 : 3)) {
      case 0:
        return Value::unreported();
      case 1:
        return Value::string(text());
      case 2:
        return Value::number(number());
      case 3:
        return Value::ident(ident());
      default: {
        std::vector<Value> items;
        const int n = uniform(0, 3);
        for (int i = 0; i < n; ++i) items.push_back(value(depth + 1));
        return Value::list(std::move(items));
      }
    }
  }

  std::vector<Property> properties(int max) {
    std::vector<Property> out;
    const int n = uniform(0, max);
    for (int i = 0; i < n; ++i) out.push_back(Property{ident(), value(), {}});
    return out;
  }

  std::vector<Ref> refs(int min, int max) {
    std::vector<Ref> out;
    const int n = uniform(min, max);
    for (int i = 0; i < n; ++i) out.push_back(Ref{ident(), {}});
    return out;
  }

  Product product() {
    Product p;
    p.id = ident();
    p.kind = static_cast<ProductKind>(uniform(0, 2));
    p.properties = properties(3);
    return p;
  }

  Chunk chunk() {
    Chunk c;
    c.id = ident();
    c.level = static_cast<Level>(uniform(0, 3));
    Guideline& g = c.guideline;
    if (coin(0.8)) g.intention = text();
    if (coin(0.8)) g.inputs = refs(0, 3);
    if (coin(0.8)) g.outputs = refs(0, 3);
    switch (uniform(0, 2)) {
      case 0:
        g.strategy = Unreported{};
        break;
      case 1:
        g.strategy = TextStrategy{text()};
        break;
      default:
        g.strategy = ComposeStrategy{refs(1, 4)};
    }
    g.hyperparameters = properties(3);
    if (coin(0.3)) {
      const int n = uniform(1, 3);
      for (int i = 0; i < n; ++i) c.keywords.push_back(value());
    }
    return c;
  }

  ProcessMap map() {
    ProcessMap m;
    m.id = ident();
    m.phase = static_cast<Phase>(uniform(0, 2));
    m.start = text();
    const int n = uniform(1, 4);
    for (int i = 0; i < n; ++i) {
      Section s;
      s.from = text();
      s.to = text();
      s.via = Ref{ident(), {}};
      if (coin(0.7)) s.why_intention = text();
      if (coin(0.7)) s.why_strategy = text();
      m.sections.push_back(std::move(s));
    }
    return m;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace pdl::testing

#endif  // PDL_TESTS_SUPPORT_DOC_GENERATOR_HPP_
