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

#include "circir/split/depgraph.hpp"

#include <algorithm>
#include <set>

namespace circir {

std::string_view to_string(Effect e) {
  switch (e) {
    case Effect::None: return "none";
    case Effect::Input: return "input";
    case Effect::Output: return "output";
    case Effect::Call: return "call";
    case Effect::Commit: return "commit";
    case Effect::Reveal: return "reveal";
  }
  return "?";
}

namespace {

bool is_cleartext(ProtocolKind k) { return k == ProtocolKind::Local || k == ProtocolKind::Repl; }

// Hidden, or a parameter whose format is only known at the call site.
bool maybe_hidden(const ScopeInfo& scope, const std::string& name) {
  auto it = scope.find(name);
  if (it == scope.end() || it->second.role != VarRole::Value) return false;
  return !it->second.format || is_hidden(it->second.format->kind);
}

}  // namespace

Effect classify(const Stmt& s, const ScopeInfo& scope, const std::vector<std::string>& universe) {
  if (const auto* let = std::get_if<LetStmt>(&s.node)) {
    if (std::holds_alternative<InputCmd>(let->cmd.node)) return Effect::Input;
    if (std::holds_alternative<OutputCmd>(let->cmd.node)) return Effect::Output;
    if (std::holds_alternative<CallCmd>(let->cmd.node)) return Effect::Call;
    const auto& src = std::get<Atom>(let->cmd.node);
    for (const auto& b : let->bindings) {
      if (resolve_hosts(b.format, universe).kind == ProtocolKind::Commit) return Effect::Commit;
    }
    if (src.is_var() && maybe_hidden(scope, src.var_name())) {
      for (const auto& b : let->bindings) {
        if (is_cleartext(b.format.kind)) return Effect::Reveal;
      }
    }
    return Effect::None;
  }
  if (const auto* c = std::get_if<ComputeLet>(&s.node)) {
    if (!is_cleartext(c->protocol.kind)) return Effect::None;
    auto reads = free_vars(c->body);
    for (const auto& b : c->binders) reads.erase(b.var);
    for (const auto& name : reads) {
      if (maybe_hidden(scope, name)) return Effect::Reveal;
    }
  }
  return Effect::None;
}

std::vector<std::vector<std::size_t>> DepGraph::predecessors() const {
  std::vector<std::vector<std::size_t>> preds(nodes.size());
  for (const auto& e : edges) preds[e.to].push_back(e.from);
  return preds;
}

DepGraph build_dep_graph(const std::vector<const Stmt*>& region, const ScopeInfo& scope,
                         const std::vector<std::string>& universe) {
  DepGraph g;
  std::map<std::string, std::size_t> def_site;
  std::optional<std::size_t> last_effect;
  for (std::size_t i = 0; i < region.size(); ++i) {
    const Stmt& s = *region[i];
    DepNode n;
    n.id = i;
    n.stmt = &s;
    if (const auto* c = std::get_if<ComputeLet>(&s.node)) {
      n.protocol = resolve_hosts(c->protocol, universe);
    }
    n.effect = classify(s, scope, universe);
    for (const auto& name : stmt_reads(s)) {
      auto it = def_site.find(name);
      if (it != def_site.end()) g.edges.push_back({it->second, i, EdgeKind::Data});
    }
    if (n.effect != Effect::None) {
      if (last_effect) g.edges.push_back({*last_effect, i, EdgeKind::Safety});
      last_effect = i;
    }
    for (const auto& d : stmt_defs(s)) def_site[d] = i;
    g.nodes.push_back(std::move(n));
  }
  return g;
}

namespace {

// Scheduler state between protocol choices.
class Scheduler {
 public:
  explicit Scheduler(const DepGraph& g)
      : g_(&g), preds_(g.predecessors()), done_(g.nodes.size(), false),
        remaining_(g.nodes.size()) {}

  // Extends the open block and emits ready singletons until a new block
  // must be opened. Returns the candidate protocols, best first by the
  // one-block lookahead; empty when everything is scheduled.
  std::vector<Protocol> advance() {
    const std::size_t n = g_->nodes.size();
    if (current_) {
      while (auto next = first_ready([&](const DepNode& d) {
               return d.groupable() && *d.protocol == *current_;
             })) {
        out_.back().nodes.push_back(*next);
        mark(*next);
      }
      current_.reset();
    }
    while (auto single = first_ready([](const DepNode& d) { return !d.groupable(); })) {
      const auto& node = g_->nodes[*single];
      out_.push_back(Block{node.protocol, node.is_compute(), {*single}});
      mark(*single);
    }
    if (remaining_ == 0) return {};

    struct Candidate {
      Protocol protocol;
      std::size_t stranded = 0;
      std::size_t size = 0;
    };
    std::vector<Candidate> candidates;  // first-seen order = lowest ready id
    for (std::size_t i = 0; i < n; ++i) {
      if (!ready(i, done_) || !g_->nodes[i].groupable()) continue;
      const auto& p = *g_->nodes[i].protocol;
      if (std::any_of(candidates.begin(), candidates.end(),
                      [&](const Candidate& c) { return c.protocol == p; })) {
        continue;
      }
      auto trial = done_;
      std::size_t size = 0;
      for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t j = 0; j < n; ++j) {
          if (!trial[j] && of_protocol(j, p) && ready(j, trial)) {
            trial[j] = true;
            ++size;
            grew = true;
          }
        }
      }
      std::size_t stranded = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (!trial[j] && of_protocol(j, p)) ++stranded;
      }
      candidates.push_back({p, stranded, size});
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& a, const Candidate& b) {
                       if (a.stranded != b.stranded) return a.stranded < b.stranded;
                       return a.size > b.size;
                     });
    std::vector<Protocol> out;
    for (auto& c : candidates) out.push_back(std::move(c.protocol));
    return out;
  }

  void open(const Protocol& p) {
    current_ = p;
    out_.push_back(Block{p, true, {}});
  }

  // Finishes the schedule always taking the first candidate.
  void finish_greedily() {
    for (auto c = advance(); !c.empty(); c = advance()) open(c.front());
  }

  Blocking take() { return std::move(out_); }
  [[nodiscard]] const Blocking& blocking() const { return out_; }

 private:
  [[nodiscard]] bool ready(std::size_t i, const std::vector<bool>& done) const {
    if (done[i]) return false;
    return std::all_of(preds_[i].begin(), preds_[i].end(), [&](std::size_t p) { return done[p]; });
  }

  [[nodiscard]] bool of_protocol(std::size_t i, const Protocol& p) const {
    const auto& d = g_->nodes[i];
    return d.groupable() && *d.protocol == p;
  }

  template <class Pred>
  std::optional<std::size_t> first_ready(Pred pred) const {
    for (std::size_t i = 0; i < g_->nodes.size(); ++i) {
      if (ready(i, done_) && pred(g_->nodes[i])) return i;
    }
    return std::nullopt;
  }

  void mark(std::size_t i) {
    done_[i] = true;
    --remaining_;
  }

  const DepGraph* g_;
  std::vector<std::vector<std::size_t>> preds_;
  std::vector<bool> done_;
  std::size_t remaining_;
  Blocking out_;
  std::optional<Protocol> current_;
};

}  // namespace

Blocking schedule(const DepGraph& g) {
  Scheduler s(g);
  for (auto candidates = s.advance(); !candidates.empty(); candidates = s.advance()) {
    // Roll each choice out with the one-block lookahead and keep the one
    // that ends with the fewest blocks; ties keep the lookahead's order.
    const Protocol* best = &candidates.front();
    if (candidates.size() > 1) {
      std::size_t best_count = 0;
      for (const auto& c : candidates) {
        Scheduler trial = s;
        trial.open(c);
        trial.finish_greedily();
        const auto count = compute_block_count(trial.blocking());
        if (&c == &candidates.front() || count < best_count) {
          best = &c;
          best_count = count;
        }
      }
    }
    s.open(*best);
  }
  return s.take();
}

std::size_t compute_block_count(const Blocking& b) {
  return static_cast<std::size_t>(
      std::count_if(b.begin(), b.end(), [](const Block& x) { return x.compute; }));
}

std::size_t cross_edge_count(const DepGraph& g, const Blocking& b) {
  std::vector<std::size_t> block_of(g.nodes.size(), 0);
  for (std::size_t k = 0; k < b.size(); ++k) {
    for (auto id : b[k].nodes) block_of[id] = k;
  }
  return static_cast<std::size_t>(std::count_if(g.edges.begin(), g.edges.end(), [&](const DepEdge& e) {
    return e.kind == EdgeKind::Data && g.nodes[e.from].is_compute() &&
           g.nodes[e.to].is_compute() && block_of[e.from] != block_of[e.to];
  }));
}

std::size_t compute_block_count(const DepGraph& g, const std::vector<std::size_t>& order) {
  std::size_t blocks = 0;
  std::optional<Protocol> open;
  for (auto id : order) {
    const auto& node = g.nodes[id];
    if (!node.groupable()) {
      open.reset();
      if (node.is_compute()) ++blocks;
      continue;
    }
    if (!open || *open != *node.protocol) {
      ++blocks;
      open = node.protocol;
    }
  }
  return blocks;
}

}  // namespace circir
