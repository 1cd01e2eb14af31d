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

#include <optional>
#include <string_view>
#include <vector>

#include "circir/ir/ast.hpp"
#include "circir/parse/diagnostic.hpp"

namespace circir {

/// Strict programs keep all computation inside circuit functions. Surface
/// programs may also compute inline in ordinary functions (`ComputeLet`);
/// they are the splitter's input.
enum class Mode { Strict, Surface };

struct ParseResult {
  std::optional<Program> program;  // set iff there are no error diagnostics
  std::vector<Diagnostic> diagnostics;

  [[nodiscard]] bool ok() const { return program.has_value(); }
};

/// Parses program text. Never throws; syntax errors come back as
/// diagnostics after statement-level resynchronisation.
ParseResult parse_program(std::string_view text, Mode mode);

}  // namespace circir
