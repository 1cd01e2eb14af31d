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

#include <string>

#include "circir/ir/ast.hpp"

namespace circir {

/// Canonical program text. Deterministic, two-space indentation, and
/// `parse_program(pretty_print(p))` reproduces `p` up to source spans.
std::string pretty_print(const Program& p);

std::string print_expr(const ScalarExpr& e);
std::string print_type(const Type& t);
std::string print_stmt(const Stmt& s, int indent = 0);

}  // namespace circir
