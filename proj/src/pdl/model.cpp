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

#include "pdl/model.hpp"

#include <array>
#include <utility>

namespace pdl {

bool Value::List::operator==(const List& other) const {
  return items == other.items;
}

namespace {

constexpr std::array<std::pair<Level, std::string_view>, 4> kLevelNames = {{
    {Level::kPipeline, "pipeline"},
    {Level::kProcess, "process"},
    {Level::kTask, "task"},
    {Level::kSubtask, "subtask"},
}};

constexpr std::array<std::pair<ProductKind, std::string_view>, 3> kKindNames = {{
    {ProductKind::kLabels, "labels"},
    {ProductKind::kImages, "images"},
    {ProductKind::kAnnotations, "annotations"},
}};

}  // namespace

int level_rank(Level level) { return static_cast<int>(level); }

std::string_view level_name(Level level) {
  for (const auto& [l, name] : kLevelNames) {
    if (l == level) return name;
  }
  return "?";
}

std::optional<Level> level_from_name(std::string_view name) {
  for (const auto& [l, n] : kLevelNames) {
    if (n == name) return l;
  }
  return std::nullopt;
}

std::string_view product_kind_name(ProductKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<ProductKind> product_kind_from_name(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::string_view phase_name(Phase phase) {
  switch (phase) {
    case Phase::kDevelopment:
      return "development";
    case Phase::kDeployment:
      return "deployment";
    case Phase::kUnspecified:
      break;
  }
  return "unspecified";
}

}  // namespace pdl
