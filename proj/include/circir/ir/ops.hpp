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

#include "circir/ir/value.hpp"

namespace circir {

enum class BinOp : std::uint8_t {
  Add, Sub, Mul, Div, Mod, Min, Max, Eq, Ne, Lt, Le, And, Or, Xor,
};

inline constexpr BinOp kAllOps[] = {
    BinOp::Add, BinOp::Sub, BinOp::Mul, BinOp::Div, BinOp::Mod,
    BinOp::Min, BinOp::Max, BinOp::Eq,  BinOp::Ne,  BinOp::Lt,
    BinOp::Le,  BinOp::And, BinOp::Or,  BinOp::Xor,
};

std::string_view op_symbol(BinOp op);
std::optional<BinOp> op_from_symbol(std::string_view text);

/// Result element type of `lhs op rhs` for operands of type `operand`, or
/// nullopt when the op is not defined on that type.
std::optional<ElemType> op_result_type(BinOp op, ElemType operand);

/// True for ops spelled as calls (`min(a, b)`) rather than infix.
bool op_is_prefix(BinOp op);

/// Infix binding strength; larger binds tighter. Only meaningful for infix ops.
int op_precedence(BinOp op);

/// Scalar semantics: 64-bit wrapping +,-,*; truncating / and %; comparisons
/// yield bool. Throws DivisionByZero or TypeMismatch.
Value eval_binop(BinOp op, const Value& lhs, const Value& rhs);

}  // namespace circir
