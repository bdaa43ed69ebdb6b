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

#include "pdl/lexer.hpp"

#include <algorithm>
#include <array>

namespace pdl {
namespace {

constexpr std::array<std::string_view, 29> kKeywords = {
    "product",      "chunk",        "map",
    "kind",         "labels",       "images",
    "annotations",  "intention",    "inputs",
    "outputs",      "strategy",     "hyperparameters",
    "keywords",     "pipeline",     "process",
    "task",         "subtask",      "text",
    "compose",      "phase",        "development",
    "deployment",   "start",        "section",
    "from",         "to",           "via",
    "why_intention", "why_strategy",
};

bool is_ident_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool is_ident_continue(char c) {
  return is_ident_start(c) || (c >= '0' && c <= '9') || c == '-';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_punct(char c) {
  switch (c) {
    case '{':
    case '}':
    case '[':
    case ']':
    case ':':
    case ';':
    case '=':
    case ',':
    case '@':
    case '?':
      return true;
    default:
      return false;
  }
}

// Length of the well-formed UTF-8 sequence starting at `s[i]`, or 0.
std::size_t utf8_sequence_length(std::string_view s, std::size_t i) {
  const auto byte = [&](std::size_t k) {
    return static_cast<unsigned char>(s[k]);
  };
  const unsigned char b0 = byte(i);
  if (b0 < 0x80) return 1;
  std::size_t len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return 0;
  }
  if (i + len > s.size()) return 0;
  for (std::size_t k = 1; k < len; ++k) {
    if ((byte(i + k) & 0xC0) != 0x80) return 0;
    cp = (cp << 6) | (byte(i + k) & 0x3F);
  }
  static constexpr char32_t kMinForLength[] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMinForLength[len] || cp > 0x10FFFF ||
      (cp >= 0xD800 && cp <= 0xDFFF)) {
    return 0;
  }
  return len;
}

class Lexer {
 public:
  Lexer(std::string_view text, std::string_view source_name)
      : text_(text), source_name_(source_name) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    for (;;) {
      skip_trivia();
      if (at_end()) break;
      tokens.push_back(next_token());
    }
    Token eof;
    eof.kind = TokenKind::kEof;
    eof.line = line_;
    eof.column = column_;
    eof.offset = pos_;
    tokens.push_back(std::move(eof));
    return tokens;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  [[noreturn]] void fail(const std::string& message, int line, int column) {
    throw ParseError(message, std::string(source_name_), line, column);
  }

  // Advances over one code point, updating line/column.
  void advance() {
    const std::size_t len = utf8_sequence_length(text_, pos_);
    if (len == 0) fail("malformed UTF-8", line_, column_);
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    pos_ += len;
  }

  void skip_trivia() {
    while (!at_end()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
          c == '\v') {
        advance();
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  Token start_token(TokenKind kind) const {
    Token t;
    t.kind = kind;
    t.line = line_;
    t.column = column_;
    t.offset = pos_;
    return t;
  }

  void finish(Token& t) const {
    t.text.assign(text_.substr(t.offset, pos_ - t.offset));
    if (t.kind != TokenKind::kString) t.value = t.text;
  }

  Token next_token() {
    const char c = peek();
    if (is_ident_start(c)) {
      Token t = start_token(TokenKind::kIdent);
      while (!at_end() && is_ident_continue(peek())) advance();
      finish(t);
      if (is_keyword(t.text)) t.kind = TokenKind::kKeyword;
      return t;
    }
    if (is_digit(c) || (c == '-' && is_digit(peek(1)))) {
      return lex_number();
    }
    if (c == '"') return lex_string();
    if (is_punct(c)) {
      Token t = start_token(TokenKind::kPunct);
      advance();
      finish(t);
      return t;
    }
    if (utf8_sequence_length(text_, pos_) == 0) {
      fail("malformed UTF-8", line_, column_);
    }
    std::string shown;
    if (static_cast<unsigned char>(c) >= 0x20 &&
        static_cast<unsigned char>(c) < 0x7F) {
      shown = std::string("'") + c + "'";
    } else {
      shown = "byte 0x";
      static constexpr char kHex[] = "0123456789abcdef";
      const auto b = static_cast<unsigned char>(c);
      shown += kHex[b >> 4];
      shown += kHex[b & 0xF];
    }
    fail("illegal character " + shown, line_, column_);
  }

  Token lex_number() {
    Token t = start_token(TokenKind::kNumber);
    if (peek() == '-') advance();
    while (is_digit(peek())) advance();
    if (peek() == '.' && is_digit(peek(1))) {
      advance();
      while (is_digit(peek())) advance();
    }
    finish(t);
    return t;
  }

  Token lex_string() {
    Token t = start_token(TokenKind::kString);
    advance();  // opening quote
    std::string value;
    for (;;) {
      if (at_end()) fail("unterminated string", t.line, t.column);
      const char c = peek();
      if (c == '"') {
        advance();
        break;
      }
      if (c == '\\') {
        const int line = line_;
        const int column = column_;
        advance();
        if (at_end()) fail("unterminated string", t.line, t.column);
        const char e = peek();
        if (e != '"' && e != '\\') {
          fail("invalid escape sequence in string (only \\\" and \\\\ are "
               "allowed)",
               line, column);
        }
        value += e;
        advance();
        continue;
      }
      const std::size_t start = pos_;
      advance();
      value.append(text_.substr(start, pos_ - start));
    }
    finish(t);
    t.value = std::move(value);
    return t;
  }

  std::string_view text_;
  std::string_view source_name_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

std::string format_what(const std::string& source_name, int line, int column,
                        const std::string& message) {
  return source_name + ":" + std::to_string(line) + ":" +
         std::to_string(column) + ": " + message;
}

}  // namespace

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdent:
      return "identifier";
    case TokenKind::kString:
      return "string";
    case TokenKind::kNumber:
      return "number";
    case TokenKind::kPunct:
      return "punctuation";
    case TokenKind::kKeyword:
      return "keyword";
    case TokenKind::kEof:
      return "end of input";
  }
  return "token";
}

ParseError::ParseError(std::string message, std::string source_name, int line,
                       int column, std::vector<std::string> expected)
    : std::runtime_error(format_what(source_name, line, column, message)),
      message_(std::move(message)),
      source_name_(std::move(source_name)),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::vector<Token> tokenize(std::string_view text,
                            std::string_view source_name) {
  return Lexer(text, source_name).run();
}

}  // namespace pdl
