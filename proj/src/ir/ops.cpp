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

#include "circir/ir/ops.hpp"

#include <algorithm>
#include <limits>

#include "circir/ir/error.hpp"

namespace circir {

namespace {

struct OpInfo {
  BinOp op;
  std::string_view symbol;
  int precedence;  // 0 for prefix ops
};

constexpr OpInfo kOpTable[] = {
    {BinOp::Add, "+", 6},  {BinOp::Sub, "-", 6},   {BinOp::Mul, "*", 7},
    {BinOp::Div, "/", 7},  {BinOp::Mod, "%", 7},   {BinOp::Min, "min", 0},
    {BinOp::Max, "max", 0}, {BinOp::Eq, "==", 4},  {BinOp::Ne, "!=", 4},
    {BinOp::Lt, "<", 5},   {BinOp::Le, "<=", 5},   {BinOp::And, "&&", 2},
    {BinOp::Or, "||", 1},  {BinOp::Xor, "^", 3},
};

const OpInfo& info(BinOp op) {
  for (const auto& entry : kOpTable) {
    if (entry.op == op) return entry;
  }
  fail(ErrorCode::InternalError, "unknown operator");
}

std::int64_t wrap(std::uint64_t x) { return static_cast<std::int64_t>(x); }

}  // namespace

std::string_view op_symbol(BinOp op) { return info(op).symbol; }

std::optional<BinOp> op_from_symbol(std::string_view text) {
  for (const auto& entry : kOpTable) {
    if (entry.symbol == text) return entry.op;
  }
  return std::nullopt;
}

bool op_is_prefix(BinOp op) { return info(op).precedence == 0; }

int op_precedence(BinOp op) { return info(op).precedence; }

std::optional<ElemType> op_result_type(BinOp op, ElemType operand) {
  switch (op) {
    case BinOp::Add:
    case BinOp::Sub:
    case BinOp::Mul:
    case BinOp::Div:
    case BinOp::Mod:
    case BinOp::Min:
    case BinOp::Max:
      if (operand == ElemType::Int) return ElemType::Int;
      return std::nullopt;
    case BinOp::Lt:
    case BinOp::Le:
      if (operand == ElemType::Int) return ElemType::Bool;
      return std::nullopt;
    case BinOp::Eq:
    case BinOp::Ne:
      return ElemType::Bool;
    case BinOp::And:
    case BinOp::Or:
      if (operand == ElemType::Bool) return ElemType::Bool;
      return std::nullopt;
    case BinOp::Xor:
      return operand;
  }
  return std::nullopt;
}

Value eval_binop(BinOp op, const Value& lhs, const Value& rhs) {
  if (!lhs.is_scalar() || !rhs.is_scalar()) {
    fail(ErrorCode::TypeMismatch,
         std::string("operator ") + std::string(op_symbol(op)) + " applied to an array");
  }
  if (lhs.elem() != rhs.elem()) {
    fail(ErrorCode::TypeMismatch, std::string("operand types differ for ") +
                                      std::string(op_symbol(op)) + ": " + lhs.to_string() +
                                      ", " + rhs.to_string());
  }
  auto result = op_result_type(op, lhs.elem());
  if (!result) {
    fail(ErrorCode::TypeMismatch, std::string("operator ") + std::string(op_symbol(op)) +
                                      " not defined on " + std::string(to_string(lhs.elem())));
  }
  const std::int64_t a = lhs.data()[0];
  const std::int64_t b = rhs.data()[0];
  const auto ua = static_cast<std::uint64_t>(a);
  const auto ub = static_cast<std::uint64_t>(b);
  constexpr auto kMin = std::numeric_limits<std::int64_t>::min();

  auto make = [&](std::int64_t x) {
    return *result == ElemType::Bool ? Value::of_bool(x != 0) : Value::of_int(x);
  };

  switch (op) {
    case BinOp::Add: return make(wrap(ua + ub));
    case BinOp::Sub: return make(wrap(ua - ub));
    case BinOp::Mul: return make(wrap(ua * ub));
    case BinOp::Div:
      if (b == 0) fail(ErrorCode::DivisionByZero, "division by zero");
      if (a == kMin && b == -1) return make(kMin);
      return make(a / b);
    case BinOp::Mod:
      if (b == 0) fail(ErrorCode::DivisionByZero, "remainder by zero");
      if (a == kMin && b == -1) return make(0);
      return make(a % b);
    case BinOp::Min: return make(std::min(a, b));
    case BinOp::Max: return make(std::max(a, b));
    case BinOp::Eq: return make(a == b);
    case BinOp::Ne: return make(a != b);
    case BinOp::Lt: return make(a < b);
    case BinOp::Le: return make(a <= b);
    case BinOp::And: return make(a != 0 && b != 0);
    case BinOp::Or: return make(a != 0 || b != 0);
    case BinOp::Xor: return make(a ^ b);
  }
  fail(ErrorCode::InternalError, "unhandled operator");
}

}  // namespace circir
