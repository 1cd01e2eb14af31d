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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "circir/ir/ast.hpp"

namespace circir {

enum class Tok : std::uint8_t {
  Ident, Int, Keyword, Punct, End, Invalid,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourceSpan span;
};

/// Splits source text into tokens. Never throws: unknown characters become
/// `Invalid` tokens and the stream always ends with one `End` token.
std::vector<Token> tokenize(std::string_view text);

bool is_keyword(std::string_view word);

/// Identifiers are `[A-Za-z_][A-Za-z0-9_]*` and not keywords.
bool is_identifier(std::string_view word);

}  // namespace circir
