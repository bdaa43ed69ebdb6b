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

// Graphviz DOT export of intention-strategy maps: intentions are nodes and
// each section is an edge labelled with its via chunk.

#ifndef PDL_RENDER_HPP_
#define PDL_RENDER_HPP_

#include <string>
#include <string_view>

#include "pdl/errors.hpp"
#include "pdl/validator.hpp"

namespace pdl {

// Throws UnknownIdError for an unknown map and PreconditionError when the
// map's intention chain is broken.
std::string to_dot(const ResolvedModel& model, std::string_view map_id);

// Contents of a DOT double-quoted string (without the quotes).
std::string escape_dot(std::string_view text);

}  // namespace pdl

#endif  // PDL_RENDER_HPP_
