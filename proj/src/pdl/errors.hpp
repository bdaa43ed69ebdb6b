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

#ifndef PDL_ERRORS_HPP_
#define PDL_ERRORS_HPP_

#include <stdexcept>

namespace pdl {

// A map or chunk identifier that the model does not define.
class UnknownIdError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The model violates a precondition of the requested operation, e.g. a
// broken intention chain passed to the renderer.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pdl

#endif  // PDL_ERRORS_HPP_
