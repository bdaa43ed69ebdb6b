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

#ifndef PDL_PARSER_HPP_
#define PDL_PARSER_HPP_

#include <string_view>

#include "pdl/lexer.hpp"
#include "pdl/model.hpp"

namespace pdl {

// Parses one `.pdl` document. Only grammar shape is checked here; duplicate
// identifiers and dangling references are left to the validator. The first
// syntax error aborts with a ParseError listing the expected tokens.
PipelineDocument parse(std::string_view text, std::string_view source_name);

}  // namespace pdl

#endif  // PDL_PARSER_HPP_
