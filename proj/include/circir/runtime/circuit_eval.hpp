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

#include <map>
#include <string>
#include <vector>

#include "circir/ir/ast.hpp"

namespace circir {

/// Names in scope while evaluating circuit code. Size parameters are int
/// scalars; index binders are added and removed during iteration.
using CircuitEnv = std::map<std::string, Value>;

/// Evaluates one scalar expression. Reduce is a left fold from `init` over
/// the index range 0..bound-1.
Value eval_scalar(const ScalarExpr& e, CircuitEnv& env);

/// Materializes `x[ib...] = body`: iterates the binder ranges in row-major
/// order. No binders yields a scalar. The result element type is taken from
/// the first element, or from `empty_elem` when some range is empty.
Value eval_comprehension(const std::vector<IndexBound>& binders, const ScalarExpr& body,
                         CircuitEnv& env, ElemType empty_elem = ElemType::Int);

/// Runs a circuit body on cleartext values. `sizes` and `args` follow the
/// declaration order. Returns one value per `returns` entry. Throws
/// ShapeMismatch when an argument does not have its declared shape.
std::vector<Value> eval_circuit(const CircuitFun& f, const std::vector<std::int64_t>& sizes,
                                const std::vector<Value>& args);

/// Concrete shape of a type given the names in scope.
Shape concrete_shape(const Type& t, const CircuitEnv& env);

/// Static element type of an expression, given element types of free names.
ElemType static_elem(const ScalarExpr& e, const std::map<std::string, ElemType>& names);

}  // namespace circir
