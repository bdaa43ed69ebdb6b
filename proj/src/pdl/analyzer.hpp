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

// Completeness scoring, map flattening and pipeline diffs.

#ifndef PDL_ANALYZER_HPP_
#define PDL_ANALYZER_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pdl/errors.hpp"
#include "pdl/model.hpp"
#include "pdl/validator.hpp"

namespace pdl {

// Scored guideline fields of a chunk, in report order.
inline constexpr std::string_view kScoredChunkFields[] = {
    "intention", "inputs", "outputs", "strategy", "hyperparameters"};
inline constexpr int kChunkFieldCount = 5;
inline constexpr int kSectionFieldCount = 2;

struct ChunkCompleteness {
  std::string chunk_id;
  int present = 0;  // 0..5
  std::vector<std::string> missing;

  double score() const {
    return static_cast<double>(present) / kChunkFieldCount;
  }
};

struct SectionCompleteness {
  std::string map_id;
  std::size_t section_index = 0;  // 0-based
  int present = 0;                // 0..2
};

// Scores are kept as exact integer ratios; the double accessors divide once.
struct CompletenessReport {
  std::vector<ChunkCompleteness> chunks;
  std::vector<SectionCompleteness> sections;
  long present_fields = 0;
  long scored_fields = 0;

  // 1.0 when nothing is scored.
  double document_score() const {
    return scored_fields == 0
               ? 1.0
               : static_cast<double>(present_fields) / scored_fields;
  }
};

// A field is present iff it is neither omitted nor `?`. Hyperparameters are
// present iff at least one entry has a reported value. Only chunks defined
// in the document are scored; sections of every map are.
CompletenessReport completeness(const ResolvedModel& model);

// Expands the via-chunks of `map_id` depth-first until `target` granularity:
// a chunk coarser than `target` with a compose strategy is replaced by its
// children; anything else is emitted as is. Throws UnknownIdError for an
// unknown map and PreconditionError on a composition cycle.
std::vector<std::string> flatten(const ResolvedModel& model,
                                 std::string_view map_id, Level target);

struct AlignedIndex {
  std::size_t a = 0;
  std::size_t b = 0;
  bool operator==(const AlignedIndex&) const = default;
};

// Longest common subsequence alignment in increasing index order. Ties are
// broken by the classic prefix-table backtrack from the end: take the
// diagonal on a match, otherwise step up (drop from `a`) when that keeps the
// length, else step left.
std::vector<AlignedIndex> lcs_align(std::span<const std::string> a,
                                    std::span<const std::string> b);

struct PositionedId {
  std::size_t position = 0;
  std::string id;
  bool operator==(const PositionedId&) const = default;
};

struct HyperparameterDelta {
  std::string key;
  std::optional<Value> value_a;  // nullopt: key absent on that side
  std::optional<Value> value_b;
  bool operator==(const HyperparameterDelta&) const = default;
};

struct ChunkDelta {
  std::string chunk_id;
  std::size_t position_a = 0;
  std::size_t position_b = 0;
  std::vector<HyperparameterDelta> deltas;
};

struct PipelineDiff {
  Level level = Level::kProcess;
  std::vector<std::string> sequence_a;
  std::vector<std::string> sequence_b;
  std::vector<AlignedIndex> aligned;
  std::vector<PositionedId> only_in_a;
  std::vector<PositionedId> only_in_b;
  // Ids present in both sequences but left out of the alignment, in order of
  // first appearance (a first, then b).
  std::vector<std::string> moved;
  // Aligned pairs whose hyperparameters differ.
  std::vector<ChunkDelta> hyperparameter_deltas;
};

// Chunks are matched by id only.
PipelineDiff diff(const ResolvedModel& model_a, std::string_view map_a,
                  const ResolvedModel& model_b, std::string_view map_b,
                  Level level);

std::vector<HyperparameterDelta> hyperparameter_deltas(const Chunk& a,
                                                       const Chunk& b);

}  // namespace pdl

#endif  // PDL_ANALYZER_HPP_
