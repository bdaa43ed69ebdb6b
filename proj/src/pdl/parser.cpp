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

#include "pdl/parser.hpp"

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace pdl {
namespace {

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string_view source_name)
      : tokens_(std::move(tokens)), source_name_(source_name) {}

  PipelineDocument parse_document() {
    PipelineDocument doc;
    doc.source_name = std::string(source_name_);
    while (peek().kind != TokenKind::kEof) {
      if (at_word("product")) {
        doc.products.push_back(parse_product());
      } else if (at_word("chunk")) {
        doc.chunks.push_back(parse_chunk());
      } else if (at_word("map")) {
        doc.maps.push_back(parse_map());
      } else {
        fail({"product", "chunk", "map"});
      }
    }
    return doc;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  const Token& next() {
    const Token& t = tokens_[pos_];
    if (t.kind != TokenKind::kEof) ++pos_;
    return t;
  }

  static SourceLoc loc_of(const Token& t) { return {t.line, t.column}; }

  bool is_word(const Token& t) const {
    return t.kind == TokenKind::kIdent || t.kind == TokenKind::kKeyword;
  }

  bool at_word(std::string_view word) const {
    return is_word(peek()) && peek().text == word;
  }

  bool at_punct(char c) const {
    return peek().kind == TokenKind::kPunct && peek().text.size() == 1 &&
           peek().text[0] == c;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string found = t.kind == TokenKind::kEof ? std::string("end of input")
                                                  : "'" + t.text + "'";
    std::string message = "expected ";
    if (expected.size() == 1) {
      message += expected.front();
    } else {
      message += "one of ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i > 0) message += ", ";
        message += expected[i];
      }
    }
    message += " but found " + found;
    throw ParseError(std::move(message), std::string(source_name_), t.line,
                     t.column, std::move(expected));
  }

  const Token& expect_punct(char c) {
    if (!at_punct(c)) fail({std::string("'") + c + "'"});
    return next();
  }

  const Token& expect_word(std::string_view word) {
    if (!at_word(word)) fail({std::string(word)});
    return next();
  }

  // Keywords are contextual: any word is accepted where an identifier is.
  const Token& expect_ident() {
    if (!is_word(peek())) fail({"identifier"});
    return next();
  }

  const Token& expect_string() {
    if (peek().kind != TokenKind::kString) fail({"string"});
    return next();
  }

  template <typename T>
  T expect_choice(std::initializer_list<std::pair<std::string_view, T>> options) {
    if (is_word(peek())) {
      for (const auto& [word, value] : options) {
        if (peek().text == word) {
          next();
          return value;
        }
      }
    }
    std::vector<std::string> expected;
    for (const auto& option : options) expected.emplace_back(option.first);
    fail(std::move(expected));
  }

  void expect_field(std::string_view name) {
    expect_word(name);
    expect_punct(':');
  }

  Value parse_value() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::kString:
        return Value::string(next().value);
      case TokenKind::kNumber:
        return Value::number(next().text);
      case TokenKind::kIdent:
      case TokenKind::kKeyword:
        return Value::ident(next().text);
      case TokenKind::kPunct:
        if (at_punct('?')) {
          next();
          return Value::unreported();
        }
        if (at_punct('[')) return Value::list(parse_list());
        break;
      case TokenKind::kEof:
        break;
    }
    fail({"string", "number", "identifier", "'?'", "'['"});
  }

  std::vector<Value> parse_list() {
    expect_punct('[');
    std::vector<Value> items;
    if (at_punct(']')) {
      next();
      return items;
    }
    items.push_back(parse_value());
    while (at_punct(',')) {
      next();
      items.push_back(parse_value());
    }
    if (!at_punct(']')) fail({"','", "']'"});
    next();
    return items;
  }

  Property parse_property() {
    Property prop;
    const Token& key = expect_ident();
    prop.key = key.text;
    prop.loc = loc_of(key);
    expect_punct('=');
    prop.value = parse_value();
    expect_punct(';');
    return prop;
  }

  // Properties up to and including the closing brace.
  std::vector<Property> parse_properties_until_close() {
    std::vector<Property> props;
    while (!at_punct('}')) {
      if (!is_word(peek())) fail({"identifier", "'}'"});
      props.push_back(parse_property());
    }
    next();
    return props;
  }

  Product parse_product() {
    Product product;
    product.loc = loc_of(expect_word("product"));
    product.id = expect_ident().text;
    expect_punct('{');
    expect_field("kind");
    product.kind = expect_choice<ProductKind>({{"labels", ProductKind::kLabels},
                                               {"images", ProductKind::kImages},
                                               {"annotations",
                                                ProductKind::kAnnotations}});
    expect_punct(';');
    product.properties = parse_properties_until_close();
    return product;
  }

  std::optional<std::string> parse_str_or_unknown() {
    if (at_punct('?')) {
      next();
      return std::nullopt;
    }
    if (peek().kind != TokenKind::kString) fail({"string", "'?'"});
    return next().value;
  }

  std::optional<std::vector<Ref>> parse_ids_or_unknown() {
    if (at_punct('?')) {
      next();
      return std::nullopt;
    }
    if (!at_punct('[')) fail({"'['", "'?'"});
    next();
    std::vector<Ref> ids;
    if (at_punct(']')) {
      next();
      return ids;
    }
    ids.push_back(parse_ref());
    while (at_punct(',')) {
      next();
      ids.push_back(parse_ref());
    }
    if (!at_punct(']')) fail({"','", "']'"});
    next();
    return ids;
  }

  Ref parse_ref() {
    const Token& t = expect_ident();
    return Ref{t.text, loc_of(t)};
  }

  Strategy parse_strategy() {
    if (at_punct('?')) {
      next();
      return Unreported{};
    }
    if (at_word("text")) {
      next();
      return TextStrategy{expect_string().value};
    }
    if (at_word("compose")) {
      next();
      expect_punct('[');
      ComposeStrategy compose;
      compose.children.push_back(parse_ref());
      while (at_punct(',')) {
        next();
        compose.children.push_back(parse_ref());
      }
      if (!at_punct(']')) fail({"','", "']'"});
      next();
      return compose;
    }
    fail({"text", "compose", "'?'"});
  }

  Chunk parse_chunk() {
    Chunk chunk;
    chunk.loc = loc_of(expect_word("chunk"));
    chunk.id = expect_ident().text;
    expect_punct('@');
    chunk.level = expect_choice<Level>({{"pipeline", Level::kPipeline},
                                        {"process", Level::kProcess},
                                        {"task", Level::kTask},
                                        {"subtask", Level::kSubtask}});
    expect_punct('{');

    Guideline& g = chunk.guideline;
    g.intention_loc = loc_of(peek());
    expect_field("intention");
    g.intention = parse_str_or_unknown();
    expect_punct(';');

    g.inputs_loc = loc_of(peek());
    expect_field("inputs");
    g.inputs = parse_ids_or_unknown();
    expect_punct(';');

    g.outputs_loc = loc_of(peek());
    expect_field("outputs");
    g.outputs = parse_ids_or_unknown();
    expect_punct(';');

    g.strategy_loc = loc_of(peek());
    expect_field("strategy");
    g.strategy = parse_strategy();
    expect_punct(';');

    g.hyperparameters_loc = chunk.loc;
    bool seen_hyperparameters = false;
    if (at_word("hyperparameters")) {
      seen_hyperparameters = true;
      g.hyperparameters_loc = loc_of(next());
      expect_punct('{');
      g.hyperparameters = parse_properties_until_close();
    }
    bool seen_keywords = false;
    if (at_word("keywords")) {
      seen_keywords = true;
      next();
      expect_punct(':');
      chunk.keywords = parse_list();
      expect_punct(';');
    }
    if (!at_punct('}')) {
      std::vector<std::string> expected;
      if (!seen_keywords) {
        if (!seen_hyperparameters) expected.emplace_back("hyperparameters");
        expected.emplace_back("keywords");
      }
      expected.emplace_back("'}'");
      fail(std::move(expected));
    }
    next();
    return chunk;
  }

  Section parse_section() {
    Section section;
    section.loc = loc_of(expect_word("section"));
    expect_punct('{');
    section.from_loc = loc_of(peek());
    expect_field("from");
    section.from = expect_string().value;
    expect_punct(';');
    section.to_loc = loc_of(peek());
    expect_field("to");
    section.to = expect_string().value;
    expect_punct(';');
    expect_field("via");
    section.via = parse_ref();
    expect_punct(';');
    bool seen_strategy = false;
    if (at_word("why_intention")) {
      next();
      expect_punct(':');
      section.why_intention = parse_str_or_unknown();
      expect_punct(';');
    }
    if (at_word("why_strategy")) {
      next();
      expect_punct(':');
      section.why_strategy = parse_str_or_unknown();
      expect_punct(';');
      seen_strategy = true;
    }
    if (!at_punct('}')) {
      if (seen_strategy) fail({"'}'"});
      fail({"why_intention", "why_strategy", "'}'"});
    }
    next();
    return section;
  }

  ProcessMap parse_map() {
    ProcessMap map;
    map.loc = loc_of(expect_word("map"));
    map.id = expect_ident().text;
    expect_punct('{');
    if (at_word("phase")) {
      next();
      expect_punct(':');
      map.phase = expect_choice<Phase>({{"development", Phase::kDevelopment},
                                        {"deployment", Phase::kDeployment}});
      expect_punct(';');
    }
    if (!at_word("start")) {
      if (map.phase == Phase::kUnspecified) fail({"phase", "start"});
      fail({"start"});
    }
    map.start_loc = loc_of(peek());
    expect_field("start");
    map.start = expect_string().value;
    expect_punct(';');
    map.sections.push_back(parse_section());
    while (at_word("section")) map.sections.push_back(parse_section());
    if (!at_punct('}')) fail({"section", "'}'"});
    next();
    return map;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::string_view source_name_;
};

}  // namespace

PipelineDocument parse(std::string_view text, std::string_view source_name) {
  return Parser(tokenize(text, source_name), source_name).parse_document();
}

}  // namespace pdl
