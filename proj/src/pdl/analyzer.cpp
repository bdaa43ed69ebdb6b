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

#include "pdl/analyzer.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace pdl {

CompletenessReport completeness(const ResolvedModel& model) {
  const PipelineDocument& doc = model.document();
  CompletenessReport report;
  for (const auto& chunk : doc.chunks) {
    const Guideline& g = chunk.guideline;
    const bool hyper = std::any_of(
        g.hyperparameters.begin(), g.hyperparameters.end(),
        [](const Property& p) { return !p.value.is_unreported(); });
    const bool fields[kChunkFieldCount] = {
        g.intention.has_value(), g.inputs.has_value(), g.outputs.has_value(),
        !std::holds_alternative<Unreported>(g.strategy), hyper};
    ChunkCompleteness entry;
    entry.chunk_id = chunk.id;
    for (int i = 0; i < kChunkFieldCount; ++i) {
      if (fields[i]) {
        ++entry.present;
      } else {
        entry.missing.emplace_back(kScoredChunkFields[i]);
      }
    }
    report.present_fields += entry.present;
    report.scored_fields += kChunkFieldCount;
    report.chunks.push_back(std::move(entry));
  }
  for (const auto& map : doc.maps) {
    for (std::size_t i = 0; i < map.sections.size(); ++i) {
      const Section& s = map.sections[i];
      SectionCompleteness entry;
      entry.map_id = map.id;
      entry.section_index = i;
      entry.present = (s.why_intention ? 1 : 0) + (s.why_strategy ? 1 : 0);
      report.present_fields += entry.present;
      report.scored_fields += kSectionFieldCount;
      report.sections.push_back(std::move(entry));
    }
  }
  return report;
}

namespace {

void expand(const ResolvedModel& model, const std::string& id, Level target,
            std::vector<std::string>& path, std::vector<std::string>& out) {
  const Chunk* chunk = model.find_chunk(id);
  const ComposeStrategy* compose = chunk ? chunk->compose() : nullptr;
  if (!chunk || !compose || level_rank(chunk->level) >= level_rank(target)) {
    out.push_back(id);
    return;
  }
  if (std::find(path.begin(), path.end(), id) != path.end()) {
    throw PreconditionError("composition cycle through chunk '" + id +
                            "'; cannot flatten");
  }
  path.push_back(id);
  for (const auto& child : compose->children) {
    expand(model, child.id, target, path, out);
  }
  path.pop_back();
}

}  // namespace

std::vector<std::string> flatten(const ResolvedModel& model,
                                 std::string_view map_id, Level target) {
  const ProcessMap* map = model.find_map(map_id);
  if (!map) {
    throw UnknownIdError("unknown map '" + std::string(map_id) + "'");
  }
  std::vector<std::string> out;
  std::vector<std::string> path;
  for (const auto& section : map->sections) {
    expand(model, section.via.id, target, path, out);
  }
  return out;
}

std::vector<AlignedIndex> lcs_align(std::span<const std::string> a,
                                    std::span<const std::string> b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  // table[i][j]: LCS length of a[0, i) and b[0, j).
  std::vector<std::vector<std::size_t>> table(n + 1,
                                              std::vector<std::size_t>(m + 1));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      table[i][j] = a[i - 1] == b[j - 1]
                        ? table[i - 1][j - 1] + 1
                        : std::max(table[i - 1][j], table[i][j - 1]);
    }
  }
  std::vector<AlignedIndex> out;
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 && j > 0) {
    if (a[i - 1] == b[j - 1]) {
      out.push_back({i - 1, j - 1});
      --i;
      --j;
    } else if (table[i - 1][j] >= table[i][j - 1]) {
      --i;
    } else {
      --j;
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<HyperparameterDelta> hyperparameter_deltas(const Chunk& a,
                                                       const Chunk& b) {
  const auto& ha = a.guideline.hyperparameters;
  const auto& hb = b.guideline.hyperparameters;
  auto find = [](const std::vector<Property>& props, const std::string& key)
      -> const Property* {
    for (const auto& p : props) {
      if (p.key == key) return &p;
    }
    return nullptr;
  };
  std::vector<HyperparameterDelta> out;
  for (const auto& pa : ha) {
    const Property* pb = find(hb, pa.key);
    if (pb && pb->value == pa.value) continue;
    out.push_back(HyperparameterDelta{
        pa.key, pa.value, pb ? std::optional<Value>(pb->value) : std::nullopt});
  }
  for (const auto& pb : hb) {
    if (find(ha, pb.key)) continue;
    out.push_back(HyperparameterDelta{pb.key, std::nullopt, pb.value});
  }
  return out;
}

PipelineDiff diff(const ResolvedModel& model_a, std::string_view map_a,
                  const ResolvedModel& model_b, std::string_view map_b,
                  Level level) {
  PipelineDiff result;
  result.level = level;
  result.sequence_a = flatten(model_a, map_a, level);
  result.sequence_b = flatten(model_b, map_b, level);
  const auto& seq_a = result.sequence_a;
  const auto& seq_b = result.sequence_b;
  result.aligned = lcs_align(seq_a, seq_b);

  std::vector<bool> aligned_a(seq_a.size(), false);
  std::vector<bool> aligned_b(seq_b.size(), false);
  for (const auto& pair : result.aligned) {
    aligned_a[pair.a] = true;
    aligned_b[pair.b] = true;
  }
  const std::unordered_set<std::string> ids_a(seq_a.begin(), seq_a.end());
  const std::unordered_set<std::string> ids_b(seq_b.begin(), seq_b.end());
  std::unordered_set<std::string> moved_seen;
  auto classify = [&](const std::vector<std::string>& seq,
                      const std::vector<bool>& aligned,
                      const std::unordered_set<std::string>& other_ids,
                      std::vector<PositionedId>& only) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (aligned[i]) continue;
      if (other_ids.contains(seq[i])) {
        if (moved_seen.insert(seq[i]).second) result.moved.push_back(seq[i]);
      } else {
        only.push_back(PositionedId{i, seq[i]});
      }
    }
  };
  classify(seq_a, aligned_a, ids_b, result.only_in_a);
  classify(seq_b, aligned_b, ids_a, result.only_in_b);

  for (const auto& pair : result.aligned) {
    const Chunk* ca = model_a.find_chunk(seq_a[pair.a]);
    const Chunk* cb = model_b.find_chunk(seq_b[pair.b]);
    if (!ca || !cb) continue;
    auto deltas = hyperparameter_deltas(*ca, *cb);
    if (deltas.empty()) continue;
    result.hyperparameter_deltas.push_back(
        ChunkDelta{ca->id, pair.a, pair.b, std::move(deltas)});
  }
  return result;
}

}  // namespace pdl
