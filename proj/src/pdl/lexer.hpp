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

// Tokenizer for the `.pdl` format.
//
// Identifiers match [A-Za-z_][A-Za-z0-9_-]*, numbers -?[0-9]+(.[0-9]+)?,
// strings are double-quoted with `\"` and `\\` as the only escapes, and `#`
// starts a comment running to the end of the line. Columns count Unicode
// code points.

#ifndef PDL_LEXER_HPP_
#define PDL_LEXER_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pdl {

enum class TokenKind { kIdent, kString, kNumber, kPunct, kKeyword, kEof };

std::string_view token_kind_name(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::kEof;
  // Raw lexeme as it appears in the source, quotes and escapes included.
  std::string text;
  // Decoded string contents for kString; equals `text` otherwise.
  std::string value;
  int line = 1;
  int column = 1;
  std::size_t offset = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::string source_name, int line,
             int column, std::vector<std::string> expected = {});

  const std::string& message() const { return message_; }
  const std::string& source_name() const { return source_name_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::string message_;
  std::string source_name_;
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

bool is_keyword(std::string_view word);

// Throws ParseError on an unterminated string, a bad escape, malformed UTF-8
// or an illegal character. The result always ends with a kEof token.
std::vector<Token> tokenize(std::string_view text, std::string_view source_name);

}  // namespace pdl

#endif  // PDL_LEXER_HPP_
