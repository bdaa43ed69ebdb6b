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

#ifndef PDL_IO_HPP_
#define PDL_IO_HPP_

#include <filesystem>
#include <stdexcept>
#include <string>

namespace pdl {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Whole file as bytes. Throws IoError if it cannot be opened or read.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace pdl

#endif  // PDL_IO_HPP_
