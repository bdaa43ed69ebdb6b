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

#include "pdl/reports.hpp"

#include <charconv>

#include "json.hpp"
#include "pdl/printer.hpp"

namespace pdl {
namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json diagnostic_json(const Diagnostic& d) {
  Json j;
  j["code"] = d.code;
  j["severity"] = severity_name(d.severity);
  j["message"] = d.message;
  j["file"] = d.source_name;
  j["line"] = d.line;
  j["column"] = d.column;
  j["subject"] = d.subject ? Json(*d.subject) : Json(nullptr);
  return j;
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

}  // namespace

std::string format_score(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, result.ptr);
}

std::string validation_json(const ValidationReport& report) {
  Json j;
  j["diagnostics"] = Json::array();
  for (const auto& d : report.diagnostics) {
    j["diagnostics"].push_back(diagnostic_json(d));
  }
  j["errors"] = report.error_count;
  j["warnings"] = report.warning_count;
  return dump(j);
}

std::string validation_text(const ValidationReport& report) {
  std::string out;
  for (const auto& d : report.diagnostics) {
    out += format_diagnostic(d);
    out += '\n';
  }
  return out;
}

std::string completeness_json(const CompletenessReport& report,
                              std::string_view source_name) {
  Json j;
  j["file"] = source_name;
  j["chunks"] = Json::array();
  for (const auto& c : report.chunks) {
    Json entry;
    entry["id"] = c.chunk_id;
    entry["present"] = c.present;
    entry["score"] = c.score();
    entry["missing"] = c.missing;
    j["chunks"].push_back(std::move(entry));
  }
  j["sections"] = Json::array();
  for (const auto& s : report.sections) {
    Json entry;
    entry["map"] = s.map_id;
    entry["index"] = s.section_index;
    entry["present"] = s.present;
    j["sections"].push_back(std::move(entry));
  }
  j["present"] = report.present_fields;
  j["total"] = report.scored_fields;
  j["document_score"] = report.document_score();
  return dump(j);
}

std::string completeness_text(const CompletenessReport& report,
                              std::string_view source_name) {
  std::string out = std::string(source_name) + ": document score " +
                    format_score(report.document_score()) + " (" +
                    std::to_string(report.present_fields) + "/" +
                    std::to_string(report.scored_fields) +
                    " fields reported)\n";
  for (const auto& c : report.chunks) {
    out += "  chunk " + c.chunk_id + ": " + std::to_string(c.present) + "/" +
           std::to_string(kChunkFieldCount);
    if (!c.missing.empty()) out += " (missing: " + join(c.missing, ", ") + ")";
    out += '\n';
  }
  for (const auto& s : report.sections) {
    out += "  map " + s.map_id + " section " +
           std::to_string(s.section_index + 1) + ": " +
           std::to_string(s.present) + "/" +
           std::to_string(kSectionFieldCount) + '\n';
  }
  return out;
}

namespace {

Json optional_value(const std::optional<Value>& v) {
  return v ? Json(print_value(*v)) : Json(nullptr);
}

}  // namespace

std::string diff_json(const PipelineDiff& diff) {
  Json j;
  j["level"] = level_name(diff.level);
  j["sequence_a"] = diff.sequence_a;
  j["sequence_b"] = diff.sequence_b;
  j["aligned"] = Json::array();
  for (const auto& pair : diff.aligned) {
    Json entry;
    entry["a"] = pair.a;
    entry["b"] = pair.b;
    entry["id"] = diff.sequence_a[pair.a];
    j["aligned"].push_back(std::move(entry));
  }
  auto positioned = [](const std::vector<PositionedId>& items) {
    Json arr = Json::array();
    for (const auto& item : items) {
      Json entry;
      entry["position"] = item.position;
      entry["id"] = item.id;
      arr.push_back(std::move(entry));
    }
    return arr;
  };
  j["only_in_a"] = positioned(diff.only_in_a);
  j["only_in_b"] = positioned(diff.only_in_b);
  j["moved"] = diff.moved;
  j["hyperparameter_deltas"] = Json::array();
  for (const auto& chunk : diff.hyperparameter_deltas) {
    Json entry;
    entry["id"] = chunk.chunk_id;
    entry["position_a"] = chunk.position_a;
    entry["position_b"] = chunk.position_b;
    entry["deltas"] = Json::array();
    for (const auto& d : chunk.deltas) {
      Json delta;
      delta["key"] = d.key;
      delta["a"] = optional_value(d.value_a);
      delta["b"] = optional_value(d.value_b);
      entry["deltas"].push_back(std::move(delta));
    }
    j["hyperparameter_deltas"].push_back(std::move(entry));
  }
  return dump(j);
}

std::string diff_text(const PipelineDiff& diff) {
  std::string out = "level: " + std::string(level_name(diff.level)) + "\n";
  out += "a: " + join(diff.sequence_a, " ") + "\n";
  out += "b: " + join(diff.sequence_b, " ") + "\n";
  std::vector<std::string> aligned;
  for (const auto& pair : diff.aligned) {
    aligned.push_back(diff.sequence_a[pair.a]);
  }
  out += "aligned (" + std::to_string(aligned.size()) + "): " +
         join(aligned, ", ") + "\n";
  if (!diff.moved.empty()) out += "moved: " + join(diff.moved, ", ") + "\n";
  for (const auto& item : diff.only_in_a) {
    out += "only in a: " + item.id + " (position " +
           std::to_string(item.position + 1) + ")\n";
  }
  for (const auto& item : diff.only_in_b) {
    out += "only in b: " + item.id + " (position " +
           std::to_string(item.position + 1) + ")\n";
  }
  for (const auto& chunk : diff.hyperparameter_deltas) {
    for (const auto& d : chunk.deltas) {
      out += "hyperparameter " + chunk.chunk_id + "." + d.key + ": " +
             (d.value_a ? print_value(*d.value_a) : "(absent)") + " -> " +
             (d.value_b ? print_value(*d.value_b) : "(absent)") + "\n";
    }
  }
  return out;
}

std::string catalog_json(const Catalog& catalog,
                         const std::vector<std::string>& ids) {
  Json j;
  j["chunks"] = Json::array();
  for (const auto& id : ids) {
    const CatalogEntry* entry = catalog.find(id);
    if (!entry) continue;
    const Chunk& c = entry->chunk;
    Json item;
    item["id"] = c.id;
    item["level"] = level_name(c.level);
    item["origin"] = entry->origin;
    item["intention"] = c.guideline.intention ? Json(*c.guideline.intention)
                                              : Json(nullptr);
    Json keywords = Json::array();
    for (const auto& k : c.keywords) {
      if (const auto* s = std::get_if<Value::String>(&k.data)) {
        keywords.push_back(s->text);
      } else {
        keywords.push_back(print_value(k));
      }
    }
    item["keywords"] = std::move(keywords);
    j["chunks"].push_back(std::move(item));
  }
  return dump(j);
}

std::string catalog_text(const Catalog& catalog,
                         const std::vector<std::string>& ids) {
  std::string out;
  for (const auto& id : ids) {
    const CatalogEntry* entry = catalog.find(id);
    if (!entry) continue;
    out += id + " @" + std::string(level_name(entry->chunk.level));
    if (entry->chunk.guideline.intention) {
      out += "  \"" + *entry->chunk.guideline.intention + "\"";
    }
    if (entry->origin != kBuiltinOrigin) out += "  [" + entry->origin + "]";
    out += '\n';
  }
  return out;
}

}  // namespace pdl
