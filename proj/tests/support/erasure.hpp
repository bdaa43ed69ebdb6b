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

// Single-field erasure used by the completeness monotonicity properties.

#ifndef PDL_TESTS_SUPPORT_ERASURE_HPP_
#define PDL_TESTS_SUPPORT_ERASURE_HPP_

#include <functional>
#include <random>
#include <vector>

#include "pdl/model.hpp"

namespace pdl::testing {

// Every way to turn one present guideline field of `doc` into `?`.
inline std::vector<std::function<void(PipelineDocument&)>> erasures(
    const PipelineDocument& doc) {
  std::vector<std::function<void(PipelineDocument&)>> out;
  for (std::size_t c = 0; c < doc.chunks.size(); ++c) {
    const Guideline& g = doc.chunks[c].guideline;
    if (g.intention) {
      out.push_back([c](PipelineDocument& d) {
        d.chunks[c].guideline.intention.reset();
      });
    }
    if (g.inputs) {
      out.push_back(
          [c](PipelineDocument& d) { d.chunks[c].guideline.inputs.reset(); });
    }
    if (g.outputs) {
      out.push_back(
          [c](PipelineDocument& d) { d.chunks[c].guideline.outputs.reset(); });
    }
    if (!std::holds_alternative<Unreported>(g.strategy)) {
      out.push_back([c](PipelineDocument& d) {
        d.chunks[c].guideline.strategy = Unreported{};
      });
    }
    for (std::size_t h = 0; h < g.hyperparameters.size(); ++h) {
      if (g.hyperparameters[h].value.is_unreported()) continue;
      out.push_back([c, h](PipelineDocument& d) {
        d.chunks[c].guideline.hyperparameters[h].value = Value::unreported();
      });
    }
  }
  for (std::size_t m = 0; m < doc.maps.size(); ++m) {
    for (std::size_t s = 0; s < doc.maps[m].sections.size(); ++s) {
      const Section& sec = doc.maps[m].sections[s];
      if (sec.why_intention) {
        out.push_back([m, s](PipelineDocument& d) {
          d.maps[m].sections[s].why_intention.reset();
        });
      }
      if (sec.why_strategy) {
        out.push_back([m, s](PipelineDocument& d) {
          d.maps[m].sections[s].why_strategy.reset();
        });
      }
    }
  }
  return out;
}

// Applies one random erasure; false when nothing is left to erase.
inline bool erase_random_field(PipelineDocument& doc, std::mt19937_64& rng) {
  auto options = erasures(doc);
  if (options.empty()) return false;
  options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(
      rng)](doc);
  return true;
}

}  // namespace pdl::testing

#endif  // PDL_TESTS_SUPPORT_ERASURE_HPP_
