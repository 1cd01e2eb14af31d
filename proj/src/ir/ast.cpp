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

#include "circir/ir/ast.hpp"

#include <algorithm>

namespace circir {

std::string to_string(const Atom& a) {
  if (a.is_var()) return a.var_name();
  return a.literal().to_string();
}

ScalarExpr make_atom(Atom a) { return ScalarExpr{std::move(a), {}}; }

ScalarExpr make_lookup(std::string array, std::vector<Atom> indices) {
  return ScalarExpr{Lookup{std::move(array), std::move(indices)}, {}};
}

ScalarExpr make_binary(BinOp op, ScalarExpr lhs, ScalarExpr rhs) {
  return ScalarExpr{Binary{op, std::move(lhs), std::move(rhs)}, {}};
}

ScalarExpr make_reduce(BinOp op, ScalarExpr init, IndexBound bound, ScalarExpr body) {
  return ScalarExpr{Reduce{op, std::move(init), std::move(bound), std::move(body)}, {}};
}

const std::string& decl_name(const Decl& d) {
  return std::visit([](const auto& x) -> const std::string& { return x.name; }, d);
}

const SourceSpan& decl_span(const Decl& d) {
  return std::visit([](const auto& x) -> const SourceSpan& { return x.span; }, d);
}

const Decl* Program::find(std::string_view name) const {
  for (const auto& d : decls) {
    if (decl_name(d) == name) return &d;
  }
  return nullptr;
}

const Fun* Program::find_fun(std::string_view name) const {
  const auto* d = find(name);
  return d ? std::get_if<Fun>(d) : nullptr;
}

const CircuitFun* Program::find_circuit(std::string_view name) const {
  const auto* d = find(name);
  return d ? std::get_if<CircuitFun>(d) : nullptr;
}

namespace {

struct HostCollector {
  std::vector<std::string> hosts;

  void add(const std::string& h) {
    if (std::find(hosts.begin(), hosts.end(), h) == hosts.end()) hosts.push_back(h);
  }
  void add(const Protocol& p) {
    for (const auto& h : p.participants()) add(h);
  }
  void add(const std::vector<Stmt>& body) {
    for (const auto& s : body) add(s);
  }
  void add(const Stmt& s) {
    if (const auto* let = std::get_if<LetStmt>(&s.node)) {
      for (const auto& b : let->bindings) add(b.format);
      if (const auto* in = std::get_if<InputCmd>(&let->cmd.node)) add(in->host);
      if (const auto* out = std::get_if<OutputCmd>(&let->cmd.node)) add(out->host);
    } else if (const auto* c = std::get_if<ComputeLet>(&s.node)) {
      add(c->protocol);
    } else if (const auto* i = std::get_if<IfStmt>(&s.node)) {
      add(i->then_body);
      add(i->else_body);
    }
  }
};

void collect_expr(const ScalarExpr& e, std::set<std::string>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Atom>) {
          if (n.is_var()) out.insert(n.var_name());
        } else if constexpr (std::is_same_v<T, Lookup>) {
          out.insert(n.array);
          collect_atom_vars(n.indices, out);
        } else if constexpr (std::is_same_v<T, Binary>) {
          collect_expr(*n.lhs, out);
          collect_expr(*n.rhs, out);
        } else {
          collect_expr(*n.init, out);
          if (n.bound.bound.is_var()) out.insert(n.bound.bound.var_name());
          std::set<std::string> inner;
          collect_expr(*n.body, inner);
          inner.erase(n.bound.var);
          out.insert(inner.begin(), inner.end());
        }
      },
      e.node);
}

}  // namespace

std::vector<std::string> Program::host_universe() const {
  if (!hosts.empty()) return hosts;
  HostCollector c;
  for (const auto& d : decls) {
    if (const auto* cf = std::get_if<CircuitFun>(&d)) {
      c.add(cf->protocol);
    } else {
      c.add(std::get<Fun>(d).body);
    }
  }
  return c.hosts;
}

std::set<std::string> free_vars(const ScalarExpr& expr) {
  std::set<std::string> out;
  collect_expr(expr, out);
  return out;
}

void collect_atom_vars(const std::vector<Atom>& atoms, std::set<std::string>& out) {
  for (const auto& a : atoms) {
    if (a.is_var()) out.insert(a.var_name());
  }
}

std::set<std::string> stmt_reads(const Stmt& s) {
  std::set<std::string> out;
  if (const auto* let = std::get_if<LetStmt>(&s.node)) {
    std::visit(
        [&](const auto& c) {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, Atom>) {
            if (c.is_var()) out.insert(c.var_name());
          } else if constexpr (std::is_same_v<T, CallCmd>) {
            collect_atom_vars(c.sizes, out);
            collect_atom_vars(c.args, out);
          } else if constexpr (std::is_same_v<T, InputCmd>) {
            collect_atom_vars(c.type.dims, out);
          } else {
            if (c.value.is_var()) out.insert(c.value.var_name());
          }
        },
        let->cmd.node);
  } else if (const auto* c = std::get_if<ComputeLet>(&s.node)) {
    auto body = free_vars(c->body);
    for (const auto& b : c->binders) body.erase(b.var);
    out = std::move(body);
    for (const auto& b : c->binders) {
      if (b.bound.is_var()) out.insert(b.bound.var_name());
    }
  } else {
    const auto& i = std::get<IfStmt>(s.node);
    if (i.cond.is_var()) out.insert(i.cond.var_name());
    for (const auto* branch : {&i.then_body, &i.else_body}) {
      for (const auto& inner : *branch) {
        auto r = stmt_reads(inner);
        out.insert(r.begin(), r.end());
      }
    }
  }
  return out;
}

std::vector<std::string> stmt_defs(const Stmt& s) {
  std::vector<std::string> out;
  if (const auto* let = std::get_if<LetStmt>(&s.node)) {
    for (const auto& b : let->bindings) {
      if (b.var != kWildcard) out.push_back(b.var);
    }
  } else if (const auto* c = std::get_if<ComputeLet>(&s.node)) {
    out.push_back(c->var);
  }
  return out;
}

}  // namespace circir
