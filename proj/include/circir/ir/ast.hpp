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
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "circir/ir/ops.hpp"
#include "circir/ir/protocol.hpp"
#include "circir/ir/value.hpp"

namespace circir {

/// Source location of a node. Spans never take part in structural equality:
/// two trees that differ only in where they came from compare equal.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  int line = 0;
  int column = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) { return true; }
};

/// Owning, deep-copying pointer used for recursive AST nodes.
template <class T>
class Box {
 public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}  // NOLINT
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;
  ~Box() = default;

  const T& operator*() const { return *ptr_; }
  const T* operator->() const { return ptr_.get(); }
  T& operator*() { return *ptr_; }
  T* operator->() { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) { return *a.ptr_ == *b.ptr_; }

 private:
  std::unique_ptr<T> ptr_;
};

/// `a ::= v | x`. Literals are scalars only.
struct Atom {
  std::variant<Value, std::string> node;
  SourceSpan span;

  static Atom lit(Value v) { return Atom{std::move(v), {}}; }
  static Atom var(std::string name) { return Atom{std::move(name), {}}; }

  [[nodiscard]] bool is_var() const { return std::holds_alternative<std::string>(node); }
  [[nodiscard]] const std::string& var_name() const { return std::get<std::string>(node); }
  [[nodiscard]] const Value& literal() const { return std::get<Value>(node); }

  friend bool operator==(const Atom&, const Atom&) = default;
};

std::string to_string(const Atom& a);

struct Type {
  ElemType elem = ElemType::Int;
  std::vector<Atom> dims;

  friend bool operator==(const Type&, const Type&) = default;
};

/// `x < a`
struct IndexBound {
  std::string var;
  Atom bound;

  friend bool operator==(const IndexBound&, const IndexBound&) = default;
};

struct ScalarExpr;

struct Lookup {
  std::string array;
  std::vector<Atom> indices;
  friend bool operator==(const Lookup&, const Lookup&) = default;
};

struct Binary {
  BinOp op;
  Box<ScalarExpr> lhs;
  Box<ScalarExpr> rhs;
  friend bool operator==(const Binary&, const Binary&) = default;
};

struct Reduce {
  BinOp op;
  Box<ScalarExpr> init;
  IndexBound bound;
  Box<ScalarExpr> body;
  friend bool operator==(const Reduce&, const Reduce&) = default;
};

struct ScalarExpr {
  std::variant<Atom, Lookup, Binary, Reduce> node;
  SourceSpan span;

  friend bool operator==(const ScalarExpr&, const ScalarExpr&) = default;
};

ScalarExpr make_atom(Atom a);
ScalarExpr make_lookup(std::string array, std::vector<Atom> indices);
ScalarExpr make_binary(BinOp op, ScalarExpr lhs, ScalarExpr rhs);
ScalarExpr make_reduce(BinOp op, ScalarExpr init, IndexBound bound, ScalarExpr body);

struct CallCmd {
  std::string callee;
  std::vector<Atom> sizes;
  std::vector<Atom> args;
  friend bool operator==(const CallCmd&, const CallCmd&) = default;
};

struct InputCmd {
  std::string host;
  Type type;
  friend bool operator==(const InputCmd&, const InputCmd&) = default;
};

struct OutputCmd {
  std::string host;
  Atom value;
  friend bool operator==(const OutputCmd&, const OutputCmd&) = default;
};

struct Command {
  std::variant<Atom, CallCmd, InputCmd, OutputCmd> node;
  friend bool operator==(const Command&, const Command&) = default;
};

/// `let x[ib...] = e` inside a circuit function.
struct CircuitStmt {
  std::string target;
  std::vector<IndexBound> binders;
  ScalarExpr body;
  SourceSpan span;
  friend bool operator==(const CircuitStmt&, const CircuitStmt&) = default;
};

inline constexpr std::string_view kWildcard = "_";

struct Binding {
  std::string var;
  Protocol format;
  friend bool operator==(const Binding&, const Binding&) = default;
};

/// `val x@F = m`, or `val (x@F, y@G) = f(...)` for multi-output calls, or
/// `val () = f(...)` for calls without outputs.
struct LetStmt {
  std::vector<Binding> bindings;
  Command cmd;
  friend bool operator==(const LetStmt&, const LetStmt&) = default;
};

/// Inline computation in a non-circuit function: `val x[i < n]@MPC = e`.
/// Only valid in surface programs; the splitter moves these into circuits.
struct ComputeLet {
  std::string var;
  std::vector<IndexBound> binders;
  bool explicit_binders = false;  // `x[]` was written
  Protocol protocol;
  ScalarExpr body;
  friend bool operator==(const ComputeLet&, const ComputeLet&) = default;
};

struct Stmt;

struct IfStmt {
  Atom cond;
  std::vector<Stmt> then_body;
  std::vector<Stmt> else_body;
  friend bool operator==(const IfStmt&, const IfStmt&);
};

struct Stmt {
  std::variant<LetStmt, ComputeLet, IfStmt> node;
  SourceSpan span;
  friend bool operator==(const Stmt&, const Stmt&) = default;
};

inline bool operator==(const IfStmt& a, const IfStmt& b) {
  return a.cond == b.cond && a.then_body == b.then_body && a.else_body == b.else_body;
}

struct Param {
  std::string name;
  Type type;
  friend bool operator==(const Param&, const Param&) = default;
};

struct CircuitFun {
  std::string name;
  std::vector<std::string> sizes;
  Protocol protocol;
  std::vector<Param> inputs;
  std::vector<Param> outputs;
  std::vector<CircuitStmt> body;
  std::vector<std::string> returns;
  SourceSpan span;
  friend bool operator==(const CircuitFun&, const CircuitFun&) = default;
};

struct Fun {
  std::string name;
  std::vector<std::string> sizes;
  std::vector<Param> inputs;
  std::vector<Param> outputs;
  std::vector<Stmt> body;
  std::vector<std::string> returns;
  SourceSpan span;
  friend bool operator==(const Fun&, const Fun&) = default;
};

using Decl = std::variant<CircuitFun, Fun>;

const std::string& decl_name(const Decl& d);
const SourceSpan& decl_span(const Decl& d);

inline constexpr std::string_view kEntryPoint = "main";

struct Program {
  std::vector<std::string> hosts;  // declared host universe, may be empty
  std::vector<Decl> decls;

  [[nodiscard]] const Decl* find(std::string_view name) const;
  [[nodiscard]] const Fun* find_fun(std::string_view name) const;
  [[nodiscard]] const CircuitFun* find_circuit(std::string_view name) const;

  /// Declared hosts, or every host mentioned in the program in order of
  /// first appearance when none are declared.
  [[nodiscard]] std::vector<std::string> host_universe() const;

  friend bool operator==(const Program&, const Program&) = default;
};

/// Free variables of a scalar expression; a reduce binder is bound in its body.
std::set<std::string> free_vars(const ScalarExpr& expr);

/// Variables read by an atom list (literals contribute nothing).
void collect_atom_vars(const std::vector<Atom>& atoms, std::set<std::string>& out);

/// Variables read by a statement, including size positions, conditions and,
/// for If, everything read in either branch.
std::set<std::string> stmt_reads(const Stmt& s);

/// Variables bound by a statement at its own level (not inside If branches).
std::vector<std::string> stmt_defs(const Stmt& s);

}  // namespace circir
