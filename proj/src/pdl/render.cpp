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

#include "pdl/render.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>
#include <vector>

#include "pdl/text.hpp"

namespace pdl {
namespace {

bool is_plain_dot_id(std::string_view id) {
  static constexpr std::array<std::string_view, 6> kDotKeywords = {
      "node", "edge", "graph", "digraph", "subgraph", "strict"};
  if (id.empty() || (id.front() >= '0' && id.front() <= '9')) return false;
  const bool plain = std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
  return plain && std::find(kDotKeywords.begin(), kDotKeywords.end(),
                            ascii_lower(id)) == kDotKeywords.end();
}

}  // namespace

std::string escape_dot(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string to_dot(const ResolvedModel& model, std::string_view map_id) {
  const ProcessMap* map = model.find_map(map_id);
  if (!map) {
    throw UnknownIdError("unknown map '" + std::string(map_id) + "'");
  }

  std::vector<std::string> nodes;  // normalized intention per node index
  std::unordered_map<std::string, std::size_t> node_of;
  auto node = [&](const std::string& intention) {
    std::string key = normalize_intention(intention);
    const auto [it, inserted] = node_of.emplace(key, nodes.size());
    if (inserted) nodes.push_back(std::move(key));
    return it->second;
  };

  struct Edge {
    std::size_t from;
    std::size_t to;
    std::string label;
  };
  std::vector<Edge> edges;
  const std::string* expected = &map->start;
  node(map->start);
  for (std::size_t i = 0; i < map->sections.size(); ++i) {
    const Section& s = map->sections[i];
    if (!intentions_equal(s.from, *expected)) {
      throw PreconditionError("map '" + map->id + "' has a broken chain at "
                              "section " + std::to_string(i + 1));
    }
    expected = &s.to;
    Edge edge{node(s.from), node(s.to), escape_dot(s.via.id)};
    for (const auto* why : {&s.why_intention, &s.why_strategy}) {
      if (*why && !why->value().empty()) {
        edge.label += "\\n" + escape_dot(**why);
      }
    }
    edges.push_back(std::move(edge));
  }

  std::string out = "digraph ";
  out += is_plain_dot_id(map->id) ? map->id
                                  : "\"" + escape_dot(map->id) + "\"";
  out += " {\n";
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    out += "  n" + std::to_string(k) + " [shape=ellipse, label=\"" +
           escape_dot(nodes[k]) + "\"];\n";
  }
  for (const auto& e : edges) {
    out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) +
           " [label=\"" + e.label + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace pdl
