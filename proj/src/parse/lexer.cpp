// Copyright 2026 The CircIR Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "circir/parse/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace circir {

namespace {

constexpr std::array<std::string_view, 17> kKeywords = {
    "fun", "circuit", "val", "let", "if", "else", "return", "input", "output",
    "reduce", "int", "bool", "true", "false", "host", "min", "max",
};

// Longest match first.
constexpr std::array<std::string_view, 25> kPuncts = {
    "->", "<=", "==", "!=", "&&", "||", "(", ")", "{", "}", "[", "]", "<",
    ">", ",", ";", ":", "@", "=", "+", "-", "*", "/", "%", "^",
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

bool is_identifier(std::string_view word) {
  if (word.empty() || !ident_start(word[0])) return false;
  if (!std::all_of(word.begin(), word.end(), ident_char)) return false;
  return !is_keyword(word);
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1;
  int col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token tok;
    tok.span = SourceSpan{i, i, line, col};
    std::size_t len = 0;
    if (ident_start(c)) {
      while (i + len < text.size() && ident_char(text[i + len])) ++len;
      tok.text = std::string(text.substr(i, len));
      tok.kind = is_keyword(tok.text) ? Tok::Keyword : Tok::Ident;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i + len < text.size() && std::isdigit(static_cast<unsigned char>(text[i + len]))) ++len;
      tok.text = std::string(text.substr(i, len));
      tok.kind = Tok::Int;
    } else {
      for (auto p : kPuncts) {
        if (text.substr(i, p.size()) == p) {
          len = p.size();
          break;
        }
      }
      if (len == 0) {
        len = 1;
        tok.kind = Tok::Invalid;
      } else {
        tok.kind = Tok::Punct;
      }
      tok.text = std::string(text.substr(i, len));
    }
    advance(len);
    tok.span.end = i;
    out.push_back(std::move(tok));
  }
  Token end;
  end.kind = Tok::End;
  end.span = SourceSpan{text.size(), text.size(), line, col};
  out.push_back(end);
  return out;
}

}  // namespace circir
