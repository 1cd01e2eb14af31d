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
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "circir/ir/ast.hpp"
#include "circir/parse/diagnostic.hpp"
#include "circir/parse/parser.hpp"

namespace circir {

enum class VarRole : std::uint8_t { Value, Size, Index };

/// What the checker knows about a name in scope.
struct VarInfo {
  Type type;
  /// Storage format. Unset for function parameters, whose format is chosen
  /// by each caller.
  std::optional<Protocol> format;
  VarRole role = VarRole::Value;
  /// Bound by an inline computation (surface programs only).
  bool computed = false;
};

/// Types of the variables bound by each statement, keyed by statement
/// address. Valid while the checked program is alive and unmodified.
using BindingTable = std::unordered_map<const Stmt*, std::vector<VarInfo>>;

/// Whole-program well-formedness. Returns every violation found; checking
/// continues past errors. Strict mode also rejects inline computation.
std::vector<Diagnostic> check_program(const Program& p, Mode mode,
                                      BindingTable* bindings = nullptr);

/// Scoping, typing and symbolic shape rules for one circuit function.
/// `hosts` is the program's host universe, used to resolve bare protocols.
std::vector<Diagnostic> check_shapes(const CircuitFun& f,
                                     const std::vector<std::string>& hosts = {});

/// Nominal equality of dimension atoms: same variable or same literal.
bool same_dim(const Atom& a, const Atom& b);
bool same_type(const Type& a, const Type& b);

/// Replace size-parameter names in `t` by the corresponding atoms.
Type substitute_sizes(const Type& t, const std::vector<std::string>& params,
                      const std::vector<Atom>& args);

/// Whether the transfer table has a rule from `from` to `to`. Both must be
/// storage formats (or Public for literals).
bool has_transfer_rule(const Protocol& from, const Protocol& to);

}  // namespace circir
