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

// Text helpers shared by the validator, analyzer and renderer.

#ifndef PDL_TEXT_HPP_
#define PDL_TEXT_HPP_

#include <string>
#include <string_view>

namespace pdl {

// Canonical form used to compare intentions: ASCII whitespace trimmed at
// both ends, then Unicode NFC. Input must be valid UTF-8.
std::string normalize_intention(std::string_view text);

bool intentions_equal(std::string_view a, std::string_view b);

// True when `a` and `b` are different but equal after ASCII case folding of
// their normalized forms. Used for near-miss hints.
bool differ_only_by_case(std::string_view a, std::string_view b);

std::string ascii_lower(std::string_view text);

// Unicode default case folding, for case-insensitive search.
std::string fold_case(std::string_view text);

}  // namespace pdl

#endif  // PDL_TEXT_HPP_
