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

#include "pdl/printer.hpp"

#include <variant>

namespace pdl {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

class Printer {
 public:
  std::string finish() { return std::move(out_); }

  void document(const PipelineDocument& doc) {
    bool first = true;
    auto separate = [&] {
      if (!first) out_ += '\n';
      first = false;
    };
    // Products, then chunks, then maps; each kind in source order.
    for (const auto& product : doc.products) {
      separate();
      print(product);
    }
    for (const auto& chunk : doc.chunks) {
      separate();
      print(chunk);
    }
    for (const auto& map : doc.maps) {
      separate();
      print(map);
    }
  }

 private:
  void line(int depth, std::string_view text) {
    out_.append(static_cast<std::size_t>(depth) * 2, ' ');
    out_ += text;
    out_ += '\n';
  }

  void properties(int depth, const std::vector<Property>& props) {
    for (const auto& p : props) {
      line(depth, p.key + " = " + print_value(p.value) + ";");
    }
  }

  static std::string str_or_unknown(const std::optional<std::string>& s) {
    return s ? quote_string(*s) : std::string("?");
  }

  static std::string ids_or_unknown(const std::optional<std::vector<Ref>>& ids) {
    if (!ids) return "?";
    std::string out = "[";
    for (std::size_t i = 0; i < ids->size(); ++i) {
      if (i > 0) out += ", ";
      out += (*ids)[i].id;
    }
    out += ']';
    return out;
  }

  static std::string strategy(const Strategy& s) {
    return std::visit(
        Overloaded{
            [](const Unreported&) { return std::string("?"); },
            [](const TextStrategy& t) {
              return "text " + quote_string(t.description);
            },
            [](const ComposeStrategy& c) {
              std::string out = "compose [";
              for (std::size_t i = 0; i < c.children.size(); ++i) {
                if (i > 0) out += ", ";
                out += c.children[i].id;
              }
              out += ']';
              return out;
            },
        },
        s);
  }

  void print(const Product& product) {
    line(0, "product " + product.id + " {");
    line(1, "kind: " + std::string(product_kind_name(product.kind)) + ";");
    properties(1, product.properties);
    line(0, "}");
  }

  void print(const Chunk& chunk) {
    const Guideline& g = chunk.guideline;
    line(0, "chunk " + chunk.id + " @" + std::string(level_name(chunk.level)) +
                " {");
    line(1, "intention: " + str_or_unknown(g.intention) + ";");
    line(1, "inputs: " + ids_or_unknown(g.inputs) + ";");
    line(1, "outputs: " + ids_or_unknown(g.outputs) + ";");
    line(1, "strategy: " + strategy(g.strategy) + ";");
    if (!g.hyperparameters.empty()) {
      line(1, "hyperparameters {");
      properties(2, g.hyperparameters);
      line(1, "}");
    }
    if (!chunk.keywords.empty()) {
      line(1, "keywords: " + print_value(Value::list(chunk.keywords)) + ";");
    }
    line(0, "}");
  }

  void print(const ProcessMap& map) {
    line(0, "map " + map.id + " {");
    if (map.phase != Phase::kUnspecified) {
      line(1, "phase: " + std::string(phase_name(map.phase)) + ";");
    }
    line(1, "start: " + quote_string(map.start) + ";");
    for (const auto& section : map.sections) {
      line(1, "section {");
      line(2, "from: " + quote_string(section.from) + ";");
      line(2, "to: " + quote_string(section.to) + ";");
      line(2, "via: " + section.via.id + ";");
      if (section.why_intention) {
        line(2, "why_intention: " + quote_string(*section.why_intention) + ";");
      }
      if (section.why_strategy) {
        line(2, "why_strategy: " + quote_string(*section.why_strategy) + ";");
      }
      line(1, "}");
    }
    line(0, "}");
  }

  std::string out_;
};

}  // namespace

std::string quote_string(std::string_view text) {
  std::string out;
  out.reserve(text.size() + 2);
  out += '"';
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string print_value(const Value& value) {
  return std::visit(
      Overloaded{
          [](const Unreported&) { return std::string("?"); },
          [](const Value::String& s) { return quote_string(s.text); },
          [](const Value::Number& n) { return n.literal; },
          [](const Value::Ident& i) { return i.name; },
          [](const Value::List& l) {
            std::string out = "[";
            for (std::size_t i = 0; i < l.items.size(); ++i) {
              if (i > 0) out += ", ";
              out += print_value(l.items[i]);
            }
            out += ']';
            return out;
          },
      },
      value.data);
}

std::string print_canonical(const PipelineDocument& doc) {
  Printer printer;
  printer.document(doc);
  return printer.finish();
}

}  // namespace pdl
