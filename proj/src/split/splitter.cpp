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

#include "circir/split/splitter.hpp"

#include <algorithm>
#include <set>

#include "circir/check/checker.hpp"
#include "circir/parse/parser.hpp"

namespace circir {

std::string format_metrics(const Metrics& m) {
  return "num_blocks: " + std::to_string(m.num_blocks) +
         "\nnum_cross_edges: " + std::to_string(m.num_cross_edges) + "\n";
}

namespace {

void add_var(const Atom& a, std::set<std::string>& out) {
  if (a.is_var()) out.insert(a.var_name());
}

// Variables in size positions: reduce bounds and lookup indices that are
// not bound by an enclosing binder.
void collect_sizes(const ScalarExpr& e, std::set<std::string>& locals, std::set<std::string>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Lookup>) {
          for (const auto& i : n.indices) {
            if (i.is_var() && !locals.count(i.var_name())) out.insert(i.var_name());
          }
        } else if constexpr (std::is_same_v<T, Binary>) {
          collect_sizes(*n.lhs, locals, out);
          collect_sizes(*n.rhs, locals, out);
        } else if constexpr (std::is_same_v<T, Reduce>) {
          collect_sizes(*n.init, locals, out);
          add_var(n.bound.bound, out);
          const bool fresh = locals.insert(n.bound.var).second;
          collect_sizes(*n.body, locals, out);
          if (fresh) locals.erase(n.bound.var);
        }
      },
      e.node);
}

void count_reads(const std::vector<Stmt>& body, std::map<std::string, std::size_t>& counts) {
  for (const auto& s : body) {
    if (const auto* i = std::get_if<IfStmt>(&s.node)) {
      if (i->cond.is_var()) ++counts[i->cond.var_name()];
      count_reads(i->then_body, counts);
      count_reads(i->else_body, counts);
      continue;
    }
    for (const auto& name : stmt_reads(s)) ++counts[name];
  }
}

VarInfo size_info() {
  VarInfo v;
  v.type = Type{ElemType::Int, {}};
  v.role = VarRole::Size;
  return v;
}

class Splitter {
 public:
  Splitter(const Program& p, const BindingTable& table, std::vector<RegionReport>* reports)
      : p_(p), table_(table), reports_(reports), universe_(p.host_universe()) {
    for (const auto& d : p.decls) taken_.insert(decl_name(d));
  }

  Program run() {
    Program out;
    out.hosts = p_.hosts;
    for (const auto& d : p_.decls) {
      if (const auto* f = std::get_if<Fun>(&d)) {
        emitted_.clear();
        Fun g = split_fun(*f);
        for (auto& c : emitted_) out.decls.emplace_back(std::move(c));
        out.decls.emplace_back(std::move(g));
      } else {
        out.decls.push_back(d);
      }
    }
    return out;
  }

  [[nodiscard]] const Metrics& metrics() const { return metrics_; }

 private:
  Fun split_fun(const Fun& f) {
    fun_ = &f;
    block_index_ = 0;
    read_counts_.clear();
    count_reads(f.body, read_counts_);
    returned_ = std::set<std::string>(f.returns.begin(), f.returns.end());

    ScopeInfo scope;
    for (const auto& s : f.sizes) scope[s] = size_info();
    for (const auto& param : f.inputs) {
      VarInfo v;
      v.type = param.type;
      scope[param.name] = v;
    }
    Fun g = f;
    g.body = split_body(f.body, scope);
    return g;
  }

  std::vector<Stmt> split_body(const std::vector<Stmt>& body, ScopeInfo scope) {
    std::vector<Stmt> out;
    std::vector<const Stmt*> region;
    for (const auto& s : body) {
      const auto* i = std::get_if<IfStmt>(&s.node);
      if (i == nullptr) {
        region.push_back(&s);
        continue;
      }
      flush(region, scope, out);
      region.clear();
      IfStmt branch{i->cond, split_body(i->then_body, scope), split_body(i->else_body, scope)};
      out.push_back(Stmt{std::move(branch), s.span});
    }
    flush(region, scope, out);
    return out;
  }

  void flush(const std::vector<const Stmt*>& region, ScopeInfo& scope, std::vector<Stmt>& out) {
    if (region.empty()) return;
    for (const auto* s : region) {
      auto it = table_.find(s);
      if (it == table_.end()) continue;
      const auto defs = binding_names(*s);
      for (std::size_t k = 0; k < defs.size() && k < it->second.size(); ++k) {
        if (defs[k] != kWildcard) scope[defs[k]] = it->second[k];
      }
    }
    const bool has_compute = std::any_of(region.begin(), region.end(), [](const Stmt* s) {
      return std::holds_alternative<ComputeLet>(s->node);
    });
    DepGraph g = build_dep_graph(region, scope, universe_);
    Blocking b = schedule(g);
    if (!has_compute) {
      for (const auto* s : region) out.push_back(*s);
      if (reports_ != nullptr) reports_->push_back({fun_->name, std::move(g), std::move(b)});
      return;
    }
    metrics_.num_blocks += compute_block_count(b);
    metrics_.num_cross_edges += cross_edge_count(g, b);
    for (const auto& block : b) {
      if (!block.compute) {
        out.push_back(*region[block.nodes.front()]);
        continue;
      }
      std::vector<const Stmt*> stmts;
      for (auto id : block.nodes) stmts.push_back(region[id]);
      out.push_back(emit_block(stmts, scope));
    }
    if (reports_ != nullptr) reports_->push_back({fun_->name, std::move(g), std::move(b)});
  }

  static std::vector<std::string> binding_names(const Stmt& s) {
    std::vector<std::string> out;
    if (const auto* let = std::get_if<LetStmt>(&s.node)) {
      for (const auto& b : let->bindings) out.push_back(b.var);
    } else if (const auto* c = std::get_if<ComputeLet>(&s.node)) {
      out.push_back(c->var);
    }
    return out;
  }

  std::string fresh_name() {
    std::string base = "blk_" + fun_->name + "_" + std::to_string(block_index_++);
    std::string name = base;
    for (int j = 1; taken_.count(name); ++j) name = base + "_" + std::to_string(j);
    taken_.insert(name);
    return name;
  }

  Stmt emit_block(const std::vector<const Stmt*>& stmts, const ScopeInfo& scope) {
    const auto& first = std::get<ComputeLet>(stmts.front()->node);
    std::set<std::string> defined;
    std::set<std::string> sizes;
    std::vector<std::string> candidates;
    std::map<std::string, std::size_t> block_reads;
    for (const auto* s : stmts) {
      const auto& c = std::get<ComputeLet>(s->node);
      std::set<std::string> locals;
      for (const auto& b : c.binders) {
        add_var(b.bound, sizes);
        locals.insert(b.var);
      }
      collect_sizes(c.body, locals, sizes);
      for (const auto& name : stmt_reads(*s)) {
        ++block_reads[name];
        if (!defined.count(name) &&
            std::find(candidates.begin(), candidates.end(), name) == candidates.end()) {
          candidates.push_back(name);
        }
      }
      defined.insert(c.var);
    }
    for (const auto& name : candidates) {
      auto it = scope.find(name);
      if (it == scope.end()) continue;
      if (it->second.role == VarRole::Size) sizes.insert(name);
    }
    for (const auto& name : candidates) {
      if (sizes.count(name)) continue;
      for (const auto& d : scope.at(name).type.dims) add_var(d, sizes);
    }

    CircuitFun cf;
    cf.name = fresh_name();
    cf.sizes.assign(sizes.begin(), sizes.end());
    cf.protocol = first.protocol;
    CallCmd call{cf.name, {}, {}};
    for (const auto& s : cf.sizes) call.sizes.push_back(Atom::var(s));
    for (const auto& name : candidates) {
      if (sizes.count(name)) continue;
      cf.inputs.push_back(Param{name, scope.at(name).type});
      call.args.push_back(Atom::var(name));
    }
    LetStmt let;
    let.cmd = Command{std::move(call)};
    const Protocol home = storage_of(first.protocol);
    for (const auto* s : stmts) {
      const auto& c = std::get<ComputeLet>(s->node);
      cf.body.push_back(CircuitStmt{c.var, c.binders, c.body, s->span});
      const std::size_t total = read_counts_.count(c.var) ? read_counts_.at(c.var) : 0;
      const std::size_t inside = block_reads.count(c.var) ? block_reads.at(c.var) : 0;
      if (total > inside || returned_.count(c.var)) {
        cf.outputs.push_back(Param{c.var, table_.at(s).at(0).type});
        cf.returns.push_back(c.var);
        let.bindings.push_back(Binding{c.var, home});
      }
    }
    cf.span = stmts.front()->span;
    emitted_.push_back(std::move(cf));
    return Stmt{std::move(let), stmts.front()->span};
  }

  const Program& p_;
  const BindingTable& table_;
  std::vector<RegionReport>* reports_;
  std::vector<std::string> universe_;
  std::set<std::string> taken_;
  std::vector<CircuitFun> emitted_;
  Metrics metrics_;

  const Fun* fun_ = nullptr;
  std::size_t block_index_ = 0;
  std::map<std::string, std::size_t> read_counts_;
  std::set<std::string> returned_;
};

}  // namespace

SplitResult split(const Program& p) { return split(p, nullptr); }

SplitResult split(const Program& p, std::vector<RegionReport>* regions) {
  SplitResult result;
  BindingTable table;
  result.diagnostics = check_program(p, Mode::Surface, &table);
  if (has_errors(result.diagnostics)) return result;
  Splitter splitter(p, table, regions);
  Program out = splitter.run();
  for (const auto& d : check_program(out, Mode::Strict)) {
    result.diagnostics.push_back(
        {d.severity, "internal error: split output does not check: " + d.message, d.span});
  }
  if (has_errors(result.diagnostics)) return result;
  result.program = std::move(out);
  result.metrics = splitter.metrics();
  return result;
}

}  // namespace circir
