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

#ifndef PDL_PRINTER_HPP_
#define PDL_PRINTER_HPP_

#include <string>
#include <string_view>

#include "pdl/model.hpp"

namespace pdl {

// Canonical `.pdl` text: two-space indentation, one field per line,
// declarations in document order separated by a blank line, exactly one
// trailing newline. An empty document prints as the empty string.
std::string print_canonical(const PipelineDocument& doc);

// Surface syntax of a single value, e.g. `"flickr"`, `12`, `[a, ?]`.
std::string print_value(const Value& value);

std::string quote_string(std::string_view text);

}  // namespace pdl

#endif  // PDL_PRINTER_HPP_
