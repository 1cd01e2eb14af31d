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

#include "circir/check/checker.hpp"

#include <algorithm>
#include <set>

#include "circir/parse/printer.hpp"

namespace circir {

bool same_dim(const Atom& a, const Atom& b) { return a == b; }

bool same_type(const Type& a, const Type& b) {
  if (a.elem != b.elem || a.dims.size() != b.dims.size()) return false;
  for (std::size_t i = 0; i < a.dims.size(); ++i) {
    if (!same_dim(a.dims[i], b.dims[i])) return false;
  }
  return true;
}

Type substitute_sizes(const Type& t, const std::vector<std::string>& params,
                      const std::vector<Atom>& args) {
  Type out = t;
  for (auto& dim : out.dims) {
    if (!dim.is_var()) continue;
    for (std::size_t i = 0; i < params.size() && i < args.size(); ++i) {
      if (dim.var_name() == params[i]) {
        dim = args[i];
        break;
      }
    }
  }
  return out;
}

bool has_transfer_rule(const Protocol& from, const Protocol& to) {
  if (to.kind == ProtocolKind::Public || !to.can_store()) return false;
  if (from.kind == ProtocolKind::Commit) {
    if (to.kind == ProtocolKind::Commit) return from == to;
    return to.kind != ProtocolKind::Shares;
  }
  if (from.kind == ProtocolKind::Shares && to.kind == ProtocolKind::Commit) return false;
  return true;
}

namespace {

std::string indices_word(std::size_t n) { return n == 1 ? "index" : "indices"; }

std::string type_text(const Type& t) { return print_type(t); }

class Scope {
 public:
  const VarInfo* find(const std::string& name) const {
    auto it = vars_.find(name);
    return it == vars_.end() ? nullptr : &it->second;
  }
  bool contains(const std::string& name) const { return vars_.count(name) != 0; }
  void bind(const std::string& name, VarInfo info) { vars_[name] = std::move(info); }
  void unbind(const std::string& name) { vars_.erase(name); }

  std::map<std::string, Atom> bounds;  // index variable -> its bound

 private:
  std::map<std::string, VarInfo> vars_;
};

VarInfo int_scalar(VarRole role) {
  VarInfo v;
  v.type = Type{ElemType::Int, {}};
  v.role = role;
  return v;
}

class Checker {
 public:
  Checker(const Program* program, Mode mode, BindingTable* table,
          std::vector<std::string> hosts)
      : program_(program), mode_(mode), table_(table), hosts_(std::move(hosts)) {}

  std::vector<Diagnostic> take() { return std::move(diags_); }

  void error(const std::string& message, const SourceSpan& span) {
    diags_.push_back({Severity::Error, message, span});
  }

  // ---- program ----------------------------------------------------------

  void check_program(const Program& p) {
    std::set<std::string> seen_hosts;
    for (const auto& h : p.hosts) {
      if (!seen_hosts.insert(h).second) error("duplicate host '" + h + "'", {});
    }
    std::set<std::string> names;
    for (const auto& d : p.decls) {
      if (!names.insert(decl_name(d)).second) {
        error("duplicate declaration '" + decl_name(d) + "'", decl_span(d));
      }
    }
    const auto* entry = p.find(kEntryPoint);
    if (entry == nullptr) {
      error("missing entry function 'main'", {});
    } else if (const auto* f = std::get_if<Fun>(entry)) {
      if (!f->inputs.empty() || !f->sizes.empty()) {
        error("'main' must not take parameters", f->span);
      }
    } else {
      error("'main' must be a non-circuit function", decl_span(*entry));
    }
    for (const auto& d : p.decls) {
      if (const auto* cf = std::get_if<CircuitFun>(&d)) {
        check_circuit(*cf);
      } else {
        check_fun(std::get<Fun>(d));
      }
    }
  }

  // ---- protocols ----------------------------------------------------------

  std::optional<Protocol> resolve(const Protocol& raw, const SourceSpan& span) {
    auto p = resolve_hosts(raw, hosts_);
    if (auto msg = validate_protocol(p)) {
      error(*msg + " in " + to_string(raw), span);
      return std::nullopt;
    }
    if (program_ != nullptr && !program_->hosts.empty()) {
      for (const auto& h : p.participants()) {
        if (std::find(hosts_.begin(), hosts_.end(), h) == hosts_.end()) {
          error("unknown host '" + h + "'", span);
          return std::nullopt;
        }
      }
    }
    return p;
  }

  void check_host(const std::string& host, const SourceSpan& span) {
    if (program_ != nullptr && !program_->hosts.empty() &&
        std::find(hosts_.begin(), hosts_.end(), host) == hosts_.end()) {
      error("unknown host '" + host + "'", span);
    }
  }

  // ---- shared pieces ----------------------------------------------------

  bool bind_fresh(Scope& scope, const std::string& name, VarInfo info, const SourceSpan& span) {
    if (name == kWildcard) return true;
    if (scope.contains(name)) {
      error("'" + name + "' is already bound", span);
      return false;
    }
    scope.bind(name, std::move(info));
    return true;
  }

  static bool is_public(const VarInfo& v) {
    if (v.role == VarRole::Size) return true;
    if (v.role != VarRole::Value) return false;
    return !v.format || v.format->kind == ProtocolKind::Repl;
  }

  // A size position: array bound, input dimension, size argument. Circuit
  // bodies only admit size parameters and literals; ordinary functions also
  // admit public int scalars bound before any computation.
  bool check_size_atom(const Scope& scope, const Atom& a, bool allow_values,
                       const SourceSpan& span) {
    if (!a.is_var()) {
      const auto& v = a.literal();
      if (v.elem() != ElemType::Int || v.as_int() < 0) {
        error("size must be a non-negative int, got " + v.to_string(), span);
        return false;
      }
      return true;
    }
    const auto* info = scope.find(a.var_name());
    if (info == nullptr) {
      error("unknown size '" + a.var_name() + "'", span);
      return false;
    }
    if (info->role == VarRole::Size) return true;
    if (allow_values && info->role == VarRole::Value) {
      if (info->type.elem != ElemType::Int || !info->type.dims.empty()) {
        error("size '" + a.var_name() + "' must be an int scalar", span);
        return false;
      }
      if (!is_public(*info)) {
        error("size '" + a.var_name() + "' must be public (replicated)", span);
        return false;
      }
      if (info->computed) {
        error("size '" + a.var_name() + "' must be known before computation", span);
        return false;
      }
      return true;
    }
    error("unknown size '" + a.var_name() + "'", span);
    return false;
  }

  void check_type_dims(const Scope& scope, const Type& t, bool allow_values,
                       const SourceSpan& span) {
    for (const auto& dim : t.dims) check_size_atom(scope, dim, allow_values, span);
  }

  // ---- scalar expressions -------------------------------------------------

  void check_index(const Scope& scope, const Atom& idx, bool allow_values,
                   const std::string& array, std::size_t dim_pos, const Type& array_type,
                   const SourceSpan& span) {
    if (!idx.is_var()) {
      const auto& v = idx.literal();
      if (v.elem() != ElemType::Int) error("index must be an int, got " + v.to_string(), span);
      return;
    }
    const auto& name = idx.var_name();
    const auto* info = scope.find(name);
    if (info == nullptr) {
      error("unknown variable '" + name + "'", span);
      return;
    }
    if (info->role == VarRole::Index) {
      auto bound = scope.bounds.find(name);
      if (bound != scope.bounds.end() && dim_pos < array_type.dims.size() &&
          !same_dim(bound->second, array_type.dims[dim_pos])) {
        error("shape mismatch: index '" + name + "' ranges over " + to_string(bound->second) +
                  " but dimension " + std::to_string(dim_pos) + " of '" + array +
                  "' has size " + to_string(array_type.dims[dim_pos]),
              span);
      }
      return;
    }
    if (info->role == VarRole::Size) return;
    if (allow_values && info->role == VarRole::Value && info->type.dims.empty() &&
        info->type.elem == ElemType::Int && is_public(*info) && !info->computed) {
      return;
    }
    error("index '" + name + "' must be an index variable, size parameter, or literal", span);
  }

  std::optional<ElemType> check_expr(Scope& scope, const ScalarExpr& e, bool allow_values) {
    return std::visit(
        [&](const auto& n) -> std::optional<ElemType> {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Atom>) {
            if (!n.is_var()) return n.literal().elem();
            const auto* info = scope.find(n.var_name());
            if (info == nullptr) {
              error("unknown variable '" + n.var_name() + "'", e.span);
              return std::nullopt;
            }
            if (info->role != VarRole::Value) return ElemType::Int;
            if (!info->type.dims.empty()) {
              error("rank mismatch: expected " + std::to_string(info->type.dims.size()) + " " +
                        indices_word(info->type.dims.size()) + " on '" + n.var_name() + "'",
                    e.span);
              return std::nullopt;
            }
            return info->type.elem;
          } else if constexpr (std::is_same_v<T, Lookup>) {
            const auto* info = scope.find(n.array);
            if (info == nullptr) {
              error("unknown variable '" + n.array + "'", e.span);
              return std::nullopt;
            }
            if (info->role != VarRole::Value) {
              error("'" + n.array + "' is not an array", e.span);
              return std::nullopt;
            }
            const auto rank = info->type.dims.size();
            if (n.indices.size() != rank) {
              error("rank mismatch: expected " + std::to_string(rank) + " " + indices_word(rank),
                    e.span);
              return std::nullopt;
            }
            const Type array_type = info->type;
            const ElemType elem = info->type.elem;
            for (std::size_t d = 0; d < n.indices.size(); ++d) {
              check_index(scope, n.indices[d], allow_values, n.array, d, array_type, e.span);
            }
            return elem;
          } else if constexpr (std::is_same_v<T, Binary>) {
            auto lhs = check_expr(scope, *n.lhs, allow_values);
            auto rhs = check_expr(scope, *n.rhs, allow_values);
            if (!lhs || !rhs) return std::nullopt;
            if (*lhs != *rhs) {
              error("operand types differ for '" + std::string(op_symbol(n.op)) + "': " +
                        std::string(to_string(*lhs)) + " and " + std::string(to_string(*rhs)),
                    e.span);
              return std::nullopt;
            }
            auto result = op_result_type(n.op, *lhs);
            if (!result) {
              error("operator '" + std::string(op_symbol(n.op)) + "' not defined on " +
                        std::string(to_string(*lhs)),
                    e.span);
            }
            return result;
          } else {
            auto init = check_expr(scope, *n.init, allow_values);
            check_size_atom(scope, n.bound.bound, allow_values, e.span);
            if (!bind_fresh(scope, n.bound.var, int_scalar(VarRole::Index), e.span)) {
              return std::nullopt;
            }
            scope.bounds[n.bound.var] = n.bound.bound;
            auto body = check_expr(scope, *n.body, allow_values);
            scope.unbind(n.bound.var);
            scope.bounds.erase(n.bound.var);
            if (!init || !body) return std::nullopt;
            if (*init != *body) {
              error("reduce init has type " + std::string(to_string(*init)) + " but body has " +
                        std::string(to_string(*body)),
                    e.span);
              return std::nullopt;
            }
            if (op_result_type(n.op, *init) != init) {
              error("reduce operator '" + std::string(op_symbol(n.op)) + "' does not map " +
                        std::string(to_string(*init)) + " x " + std::string(to_string(*init)) +
                        " to " + std::string(to_string(*init)),
                    e.span);
              return std::nullopt;
            }
            return init;
          }
        },
        e.node);
  }

  // Binds comprehension index variables, checks the body, unbinds.
  std::optional<ElemType> check_comprehension(Scope& scope, const std::vector<IndexBound>& binders,
                                              const ScalarExpr& body, bool allow_values,
                                              const SourceSpan& span) {
    std::vector<std::string> bound;
    bool ok = true;
    for (const auto& b : binders) {
      check_size_atom(scope, b.bound, allow_values, span);
      if (bind_fresh(scope, b.var, int_scalar(VarRole::Index), span)) {
        scope.bounds[b.var] = b.bound;
        bound.push_back(b.var);
      } else {
        ok = false;
      }
    }
    auto elem = check_expr(scope, body, allow_values);
    for (const auto& v : bound) {
      scope.unbind(v);
      scope.bounds.erase(v);
    }
    return ok ? elem : std::nullopt;
  }

  static Type comprehension_type(ElemType elem, const std::vector<IndexBound>& binders) {
    Type t;
    t.elem = elem;
    for (const auto& b : binders) t.dims.push_back(b.bound);
    return t;
  }

  void check_returns(const Scope& scope, const std::vector<std::string>& returns,
                     const std::vector<Param>& outputs, const SourceSpan& span) {
    if (returns.size() != outputs.size()) {
      error("function declares " + std::to_string(outputs.size()) + " outputs but returns " +
                std::to_string(returns.size()),
            span);
      return;
    }
    for (std::size_t i = 0; i < returns.size(); ++i) {
      const auto* info = scope.find(returns[i]);
      if (info == nullptr || info->role != VarRole::Value) {
        error("returned variable '" + returns[i] + "' is not bound", span);
        continue;
      }
      if (!same_type(info->type, outputs[i].type)) {
        error("return type mismatch for '" + returns[i] + "': " + type_text(info->type) +
                  " vs declared " + type_text(outputs[i].type),
              span);
      }
    }
  }

  void bind_params(Scope& scope, const std::vector<std::string>& sizes,
                   const std::vector<Param>& inputs, const std::vector<Param>& outputs,
                   const SourceSpan& span) {
    for (const auto& s : sizes) bind_fresh(scope, s, int_scalar(VarRole::Size), span);
    for (const auto* group : {&inputs, &outputs}) {
      std::set<std::string> names;
      for (const auto& p : *group) {
        if (!names.insert(p.name).second) error("duplicate parameter '" + p.name + "'", span);
        check_type_dims(scope, p.type, false, span);
      }
    }
    for (const auto& p : inputs) {
      VarInfo v;
      v.type = p.type;
      bind_fresh(scope, p.name, v, span);
    }
  }

  // ---- circuit functions ----------------------------------------------------

  void check_circuit(const CircuitFun& f) {
    const bool standalone = program_ == nullptr && hosts_.empty();
    if (auto p = standalone ? std::optional<Protocol>(f.protocol) : resolve(f.protocol, f.span)) {
      if (!p->can_compute()) {
        error("'" + std::string(protocol_info(p->kind).name) + "' is not a computation protocol",
              f.span);
      }
    }
    Scope scope;
    bind_params(scope, f.sizes, f.inputs, f.outputs, f.span);
    for (const auto& s : f.body) {
      auto elem = check_comprehension(scope, s.binders, s.body, false, s.span);
      if (!elem) {
        if (!scope.contains(s.target)) scope.bind(s.target, VarInfo{});
        continue;
      }
      VarInfo v;
      v.type = comprehension_type(*elem, s.binders);
      bind_fresh(scope, s.target, v, s.span);
    }
    check_returns(scope, f.returns, f.outputs, f.span);
  }

  // ---- ordinary functions ---------------------------------------------------

  void check_fun(const Fun& f) {
    Scope scope;
    bind_params(scope, f.sizes, f.inputs, f.outputs, f.span);
    check_body(scope, f.body);
    check_returns(scope, f.returns, f.outputs, f.span);
  }

  void check_body(Scope& scope, const std::vector<Stmt>& body) {
    for (const auto& s : body) check_stmt(scope, s);
  }

  void check_transfer(const std::optional<Protocol>& from, const std::optional<Protocol>& to,
                      const std::string& what, const SourceSpan& span) {
    if (!from || !to) return;
    if (!has_transfer_rule(*from, *to)) {
      error("no transfer rule from " + to_string(*from) + " to " + to_string(*to) + " for " +
                what,
            span);
    }
  }

  // Type and format of a value atom used as a command or argument.
  std::optional<VarInfo> atom_info(const Scope& scope, const Atom& a, const SourceSpan& span) {
    if (!a.is_var()) {
      VarInfo v;
      v.type = Type{a.literal().elem(), {}};
      v.format = Protocol::pub();
      return v;
    }
    const auto* info = scope.find(a.var_name());
    if (info == nullptr) {
      error("unknown variable '" + a.var_name() + "'", span);
      return std::nullopt;
    }
    if (info->role == VarRole::Index) {
      error("index variable '" + a.var_name() + "' used outside a computation", span);
      return std::nullopt;
    }
    if (info->role == VarRole::Size) {
      VarInfo v = *info;
      v.format = Protocol::pub();
      return v;
    }
    return *info;
  }

  void check_stmt(Scope& scope, const Stmt& s) {
    if (const auto* let = std::get_if<LetStmt>(&s.node)) {
      check_let(scope, s, *let);
    } else if (const auto* c = std::get_if<ComputeLet>(&s.node)) {
      check_compute(scope, s, *c);
    } else {
      const auto& i = std::get<IfStmt>(s.node);
      if (auto info = atom_info(scope, i.cond, s.span)) {
        if (info->type.elem != ElemType::Bool || !info->type.dims.empty()) {
          error("condition must be a bool scalar", s.span);
        } else if (i.cond.is_var() && !is_public(*info)) {
          error("condition '" + i.cond.var_name() + "' must be public (replicated)", s.span);
        }
      }
      Scope then_scope = scope;
      check_body(then_scope, i.then_body);
      Scope else_scope = scope;
      check_body(else_scope, i.else_body);
    }
  }

  void check_let(Scope& scope, const Stmt& s, const LetStmt& let) {
    std::vector<std::optional<Protocol>> formats;
    for (const auto& b : let.bindings) {
      auto p = resolve(b.format, s.span);
      if (p && !p->can_store()) {
        error("'" + std::string(protocol_info(p->kind).name) + "' is not a storage format",
              s.span);
        p.reset();
      }
      formats.push_back(p);
    }

    std::vector<VarInfo> results;
    bool ok = true;
    std::visit(
        [&](const auto& c) {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, Atom>) {
            auto info = atom_info(scope, c, s.span);
            if (!info) {
              ok = false;
              return;
            }
            for (const auto& f : formats) check_transfer(info->format, f, to_string(c), s.span);
            results.push_back(*info);
          } else if constexpr (std::is_same_v<T, CallCmd>) {
            ok = check_call(scope, s, c, formats, results);
          } else if constexpr (std::is_same_v<T, InputCmd>) {
            check_host(c.host, s.span);
            check_type_dims(scope, c.type, true, s.span);
            VarInfo v;
            v.type = c.type;
            v.format = Protocol::local(c.host);
            for (const auto& f : formats) check_transfer(v.format, f, "input", s.span);
            results.push_back(v);
          } else {
            check_host(c.host, s.span);
            auto info = atom_info(scope, c.value, s.span);
            if (info && info->format && info->format->kind != ProtocolKind::Public) {
              const auto& fmt = *info->format;
              bool visible = (fmt.kind == ProtocolKind::Local || fmt.kind == ProtocolKind::Repl) &&
                             fmt.involves(c.host);
              if (!visible) {
                error("'" + to_string(c.value) + "' is not visible to host " + c.host + " (stored " +
                          to_string(fmt) + ")",
                      s.span);
              }
            }
            for (const auto& b : let.bindings) {
              if (b.var != kWildcard) {
                error("output produces no value; bind it to '_'", s.span);
                break;
              }
            }
            if (let.bindings.size() > 1) error("output produces no value; bind it to '_'", s.span);
          }
        },
        let.cmd.node);

    const bool is_output = std::holds_alternative<OutputCmd>(let.cmd.node);
    if (ok && !is_output && results.size() != let.bindings.size()) {
      error("expected " + std::to_string(results.size()) + " bindings, got " +
                std::to_string(let.bindings.size()),
            s.span);
      ok = false;
    }

    std::vector<VarInfo> bound;
    for (std::size_t i = 0; i < let.bindings.size(); ++i) {
      VarInfo v;
      if (ok && !is_output && i < results.size()) {
        v.type = results[i].type;
      }
      v.format = formats[i];
      v.role = VarRole::Value;
      bind_fresh(scope, let.bindings[i].var, v, s.span);
      bound.push_back(v);
    }
    if (table_ != nullptr) (*table_)[&s] = bound;
  }

  bool check_call(const Scope& scope, const Stmt& s, const CallCmd& c,
                  const std::vector<std::optional<Protocol>>& formats,
                  std::vector<VarInfo>& results) {
    const Decl* callee = program_ != nullptr ? program_->find(c.callee) : nullptr;
    if (callee == nullptr) {
      error("unknown function '" + c.callee + "'", s.span);
      return false;
    }
    const auto& sizes = std::visit([](const auto& d) -> const auto& { return d.sizes; }, *callee);
    const auto& inputs = std::visit([](const auto& d) -> const auto& { return d.inputs; }, *callee);
    const auto& outputs =
        std::visit([](const auto& d) -> const auto& { return d.outputs; }, *callee);
    const auto* circuit = std::get_if<CircuitFun>(callee);

    bool ok = true;
    if (c.sizes.size() != sizes.size()) {
      error("'" + c.callee + "' expects " + std::to_string(sizes.size()) +
                " size arguments, got " + std::to_string(c.sizes.size()),
            s.span);
      ok = false;
    }
    for (const auto& a : c.sizes) {
      if (!check_size_atom(scope, a, true, s.span)) ok = false;
    }
    if (c.args.size() != inputs.size()) {
      error("'" + c.callee + "' expects " + std::to_string(inputs.size()) + " arguments, got " +
                std::to_string(c.args.size()),
            s.span);
      return false;
    }
    std::optional<Protocol> import_format;
    if (circuit != nullptr) {
      auto p = resolve_hosts(circuit->protocol, hosts_);
      if (!validate_protocol(p) && p.can_compute()) import_format = storage_of(p);
    }
    for (std::size_t i = 0; i < c.args.size(); ++i) {
      auto info = atom_info(scope, c.args[i], s.span);
      if (!info) {
        ok = false;
        continue;
      }
      if (ok) {
        auto expected = substitute_sizes(inputs[i].type, sizes, c.sizes);
        if (!same_type(info->type, expected)) {
          error("argument " + std::to_string(i + 1) + " of '" + c.callee + "' has type " +
                    type_text(info->type) + ", expected " + type_text(expected),
                s.span);
        }
      }
      check_transfer(info->format, import_format, to_string(c.args[i]), s.span);
    }
    if (!ok) return false;
    for (std::size_t i = 0; i < outputs.size(); ++i) {
      VarInfo v;
      v.type = substitute_sizes(outputs[i].type, sizes, c.sizes);
      v.format = import_format;
      if (i < formats.size()) check_transfer(import_format, formats[i], "result", s.span);
      results.push_back(v);
    }
    return true;
  }

  void check_compute(Scope& scope, const Stmt& s, const ComputeLet& c) {
    if (mode_ == Mode::Strict) {
      error("computation not allowed in non-circuit function", s.span);
    }
    std::optional<Protocol> format;
    if (auto p = resolve(c.protocol, s.span)) {
      if (!p->can_compute()) {
        error("'" + std::string(protocol_info(p->kind).name) + "' is not a computation protocol",
              s.span);
      } else {
        format = storage_of(*p);
      }
    }
    if (c.var == kWildcard) error("a computation must bind a named variable", s.span);
    if (format) {
      auto reads = free_vars(c.body);
      for (const auto& b : c.binders) reads.erase(b.var);
      for (const auto& name : reads) {
        const auto* info = scope.find(name);
        if (info != nullptr && info->role == VarRole::Value) {
          check_transfer(info->format, format, name, s.span);
        }
      }
    }
    auto elem = check_comprehension(scope, c.binders, c.body, true, s.span);
    VarInfo v;
    if (elem) v.type = comprehension_type(*elem, c.binders);
    v.format = format;
    v.computed = true;
    bind_fresh(scope, c.var, v, s.span);
    if (table_ != nullptr) (*table_)[&s] = {v};
  }

 private:
  const Program* program_;
  Mode mode_;
  BindingTable* table_;
  std::vector<std::string> hosts_;
  std::vector<Diagnostic> diags_;
};

}  // namespace

std::vector<Diagnostic> check_program(const Program& p, Mode mode, BindingTable* bindings) {
  Checker checker(&p, mode, bindings, p.host_universe());
  checker.check_program(p);
  return checker.take();
}

std::vector<Diagnostic> check_shapes(const CircuitFun& f, const std::vector<std::string>& hosts) {
  Checker checker(nullptr, Mode::Strict, nullptr, hosts);
  checker.check_circuit(f);
  return checker.take();
}

}  // namespace circir
