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

#include "circir/parse/printer.hpp"

#include <sstream>

namespace circir {

namespace {

template <class T, class F>
std::string join(const std::vector<T>& xs, F&& f, std::string_view sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += f(xs[i]);
  }
  return out;
}

std::string atom_text(const Atom& a) { return to_string(a); }
std::string ident(const std::string& s) { return s; }

std::string print_atoms(const std::vector<Atom>& atoms) { return join(atoms, atom_text); }

std::string print_bound(const IndexBound& ib) { return ib.var + " < " + to_string(ib.bound); }

std::string print_binders(const std::vector<IndexBound>& binders) {
  return "[" + join(binders, print_bound) + "]";
}

std::string print_param(const Param& p) { return p.name + ": " + print_type(p.type); }

std::string print_params(const std::vector<Param>& ps) { return "(" + join(ps, print_param) + ")"; }

std::string print_sizes(const std::vector<std::string>& sizes) {
  if (sizes.empty()) return "";
  return "<" + join(sizes, ident) + ">";
}

std::string expr_text(const ScalarExpr& e, int parent_prec, bool right_operand) {
  return std::visit(
      [&](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Atom>) {
          return to_string(n);
        } else if constexpr (std::is_same_v<T, Lookup>) {
          return n.array + "[" + print_atoms(n.indices) + "]";
        } else if constexpr (std::is_same_v<T, Binary>) {
          if (op_is_prefix(n.op)) {
            return std::string(op_symbol(n.op)) + "(" + expr_text(*n.lhs, 0, false) + ", " +
                   expr_text(*n.rhs, 0, false) + ")";
          }
          const int prec = op_precedence(n.op);
          std::string text = expr_text(*n.lhs, prec, false) + " " + std::string(op_symbol(n.op)) +
                             " " + expr_text(*n.rhs, prec, true);
          if (prec < parent_prec || (prec == parent_prec && right_operand)) {
            return "(" + text + ")";
          }
          return text;
        } else {
          return "reduce(" + std::string(op_symbol(n.op)) + ", " + expr_text(*n.init, 0, false) +
                 ", " + print_bound(n.bound) + ", " + expr_text(*n.body, 0, false) + ")";
        }
      },
      e.node);
}

std::string print_command(const Command& c) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Atom>) {
          return to_string(n);
        } else if constexpr (std::is_same_v<T, CallCmd>) {
          std::string out = n.callee;
          if (!n.sizes.empty()) out += "<" + print_atoms(n.sizes) + ">";
          return out + "(" + print_atoms(n.args) + ")";
        } else if constexpr (std::is_same_v<T, InputCmd>) {
          return "input " + n.host + " " + print_type(n.type);
        } else {
          return "output " + n.host + " " + to_string(n.value);
        }
      },
      c.node);
}

std::string print_binding(const Binding& b) { return b.var + "@" + to_string(b.format); }

void print_body(std::ostringstream& os, const std::vector<Stmt>& body, int indent) {
  for (const auto& s : body) os << print_stmt(s, indent);
}

}  // namespace

std::string print_type(const Type& t) {
  std::string out(to_string(t.elem));
  if (!t.dims.empty()) out += "[" + print_atoms(t.dims) + "]";
  return out;
}

std::string print_expr(const ScalarExpr& e) { return expr_text(e, 0, false); }

std::string print_stmt(const Stmt& s, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  std::ostringstream os;
  if (const auto* let = std::get_if<LetStmt>(&s.node)) {
    os << pad << "val ";
    if (let->bindings.size() == 1) {
      os << print_binding(let->bindings[0]);
    } else {
      os << "(" << join(let->bindings, print_binding) << ")";
    }
    os << " = " << print_command(let->cmd) << ";\n";
  } else if (const auto* c = std::get_if<ComputeLet>(&s.node)) {
    os << pad << "val " << c->var;
    if (c->explicit_binders || !c->binders.empty()) os << print_binders(c->binders);
    os << "@" << to_string(c->protocol) << " = " << print_expr(c->body) << ";\n";
  } else {
    const auto& i = std::get<IfStmt>(s.node);
    os << pad << "if " << to_string(i.cond) << " {\n";
    print_body(os, i.then_body, indent + 1);
    os << pad << "} else {\n";
    print_body(os, i.else_body, indent + 1);
    os << pad << "}\n";
  }
  return os.str();
}

std::string pretty_print(const Program& p) {
  std::ostringstream os;
  bool first = true;
  if (!p.hosts.empty()) {
    os << "host " << join(p.hosts, ident) << ";\n";
    first = false;
  }
  for (const auto& d : p.decls) {
    if (!first) os << "\n";
    first = false;
    if (const auto* cf = std::get_if<CircuitFun>(&d)) {
      os << "circuit fun " << cf->name << print_sizes(cf->sizes) << "@" << to_string(cf->protocol)
         << print_params(cf->inputs) << " -> " << print_params(cf->outputs) << " {\n";
      for (const auto& s : cf->body) {
        os << "  let " << s.target << print_binders(s.binders) << " = " << print_expr(s.body)
           << ";\n";
      }
      os << "  return";
      if (!cf->returns.empty()) os << " " << join(cf->returns, ident);
      os << "\n}\n";
    } else {
      const auto& f = std::get<Fun>(d);
      os << "fun " << f.name << print_sizes(f.sizes) << print_params(f.inputs) << " -> "
         << print_params(f.outputs) << " {";
      std::string ret = "return";
      if (!f.returns.empty()) ret += " " + join(f.returns, ident);
      if (f.body.empty()) {
        os << " " << ret << " }\n";
      } else {
        os << "\n";
        print_body(os, f.body, 1);
        os << "  " << ret << "\n}\n";
      }
    }
  }
  return os.str();
}

}  // namespace circir
