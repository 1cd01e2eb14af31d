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

#include "circir/runtime/interpreter.hpp"

#include "circir/runtime/circuit_eval.hpp"
#include "circir/runtime/transfer.hpp"

namespace circir {

std::string_view to_string(ExitKind k) {
  switch (k) {
    case ExitKind::Completed: return "completed";
    case ExitKind::StepLimit: return "step_limit";
    case ExitKind::Error: return "error";
  }
  return "?";
}

std::vector<StoredValue> eval_circuit_call(const CircuitFun& f, const Protocol& proto,
                                           const std::vector<std::int64_t>& sizes,
                                           const std::vector<StoredValue>& args,
                                           const std::vector<std::string>& arg_names,
                                           const std::vector<Protocol>& out_formats,
                                           const std::vector<std::string>& out_names,
                                           World& world, const BackendRegistry& backends) {
  const auto& backend = backends.get(proto.kind);
  backend.build(world);
  std::vector<Value> wires;
  wires.reserve(args.size());
  for (std::size_t i = 0; i < args.size(); ++i) {
    world.log(ImportEvent{arg_names.at(i), args[i].format, proto});
    wires.push_back(backend.import_value(args[i], proto, world, arg_names[i]));
  }
  CircuitEvalEvent eval{f.name, proto, {}};
  for (std::size_t i = 0; i < sizes.size() && i < f.sizes.size(); ++i) {
    eval.sizes.emplace_back(f.sizes[i], sizes[i]);
  }
  world.log(std::move(eval));
  auto results = backend.eval_circuit(f, proto, sizes, wires, world);
  std::vector<StoredValue> out;
  for (std::size_t i = 0; i < results.size() && i < out_formats.size(); ++i) {
    world.log(ExportEvent{out_names.at(i), proto, out_formats[i]});
    out.push_back(backend.export_value(results[i], proto, out_formats[i], world, out_names[i]));
  }
  backend.destroy(world);
  return out;
}

namespace {

struct StepLimitReached {};

using Frame = std::map<std::string, StoredValue>;

struct TailCall {
  const Fun* fun;
  std::vector<std::int64_t> sizes;
  std::vector<StoredValue> args;
};

class Interpreter {
 public:
  Interpreter(const Program& p, World& w, const BackendRegistry& backends, RunLimits limits)
      : p_(p), w_(w), backends_(backends), limits_(limits), universe_(p.host_universe()) {}

  void run() {
    const Fun* main = p_.find_fun(kEntryPoint);
    if (main == nullptr) fail(ErrorCode::UnknownFunction, "missing entry function 'main'");
    call_fun(*main, {}, {}, 1);
  }

  [[nodiscard]] std::uint64_t steps() const { return steps_; }

 private:
  Protocol resolve(const Protocol& p) const { return resolve_hosts(p, universe_); }

  void step() {
    if (steps_ >= limits_.max_steps) throw StepLimitReached{};
    ++steps_;
  }

  static const StoredValue& lookup(const Frame& frame, const std::string& name) {
    auto it = frame.find(name);
    if (it == frame.end()) fail(ErrorCode::UnknownVariable, "unknown variable '" + name + "'");
    return it->second;
  }

  static StoredValue atom_value(const Frame& frame, const Atom& a) {
    return a.is_var() ? lookup(frame, a.var_name()) : StoredValue::literal(a.literal());
  }

  static std::int64_t size_value(const Frame& frame, const Atom& a) {
    const std::int64_t n =
        a.is_var() ? public_value(lookup(frame, a.var_name())).as_int() : a.literal().as_int();
    if (n < 0) fail(ErrorCode::ShapeMismatch, "negative size " + std::to_string(n));
    return n;
  }

  static std::vector<std::int64_t> size_values(const Frame& frame, const std::vector<Atom>& as) {
    std::vector<std::int64_t> out;
    out.reserve(as.size());
    for (const auto& a : as) out.push_back(size_value(frame, a));
    return out;
  }

  static void bind(Frame& frame, const std::string& name, StoredValue v) {
    if (name != kWildcard) frame.insert_or_assign(name, std::move(v));
  }

  std::vector<StoredValue> call_fun(const Fun& f, std::vector<std::int64_t> sizes,
                                    std::vector<StoredValue> args, std::uint64_t depth) {
    if (depth > limits_.max_depth) {
      fail(ErrorCode::DepthExceeded, "call depth exceeded " + std::to_string(limits_.max_depth) +
                                         " in '" + f.name + "'");
    }
    const Fun* cur = &f;
    for (;;) {
      Frame frame;
      for (std::size_t i = 0; i < cur->sizes.size(); ++i) {
        frame.insert_or_assign(cur->sizes[i], StoredValue::literal(Value::of_int(sizes.at(i))));
      }
      for (std::size_t i = 0; i < cur->inputs.size(); ++i) {
        frame.insert_or_assign(cur->inputs[i].name, std::move(args.at(i)));
      }
      auto tail = exec_body(cur->body, frame, depth, cur->returns.empty());
      if (tail) {
        cur = tail->fun;
        sizes = std::move(tail->sizes);
        args = std::move(tail->args);
        continue;
      }
      std::vector<StoredValue> out;
      out.reserve(cur->returns.size());
      for (const auto& r : cur->returns) out.push_back(lookup(frame, r));
      return out;
    }
  }

  std::optional<TailCall> exec_body(const std::vector<Stmt>& body, Frame& frame,
                                    std::uint64_t depth, bool tail_ok) {
    for (std::size_t i = 0; i < body.size(); ++i) {
      auto tail = exec_stmt(body[i], frame, depth, tail_ok && i + 1 == body.size());
      if (tail) return tail;
    }
    return std::nullopt;
  }

  std::optional<TailCall> exec_stmt(const Stmt& s, Frame& frame, std::uint64_t depth,
                                    bool tail_ok) {
    step();
    if (const auto* let = std::get_if<LetStmt>(&s.node)) return exec_let(*let, frame, depth, tail_ok);
    if (const auto* c = std::get_if<ComputeLet>(&s.node)) {
      exec_compute(*c, frame);
      return std::nullopt;
    }
    const auto& i = std::get<IfStmt>(s.node);
    const bool taken = public_value(atom_value(frame, i.cond)).as_bool();
    return exec_body(taken ? i.then_body : i.else_body, frame, depth, tail_ok);
  }

  std::optional<TailCall> exec_let(const LetStmt& let, Frame& frame, std::uint64_t depth,
                                   bool tail_ok) {
    std::vector<Protocol> formats;
    std::vector<std::string> names;
    for (const auto& b : let.bindings) {
      formats.push_back(resolve(b.format));
      names.push_back(b.var);
    }
    return std::visit(
        [&](const auto& c) -> std::optional<TailCall> {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, Atom>) {
            auto sv = atom_value(frame, c);
            for (std::size_t i = 0; i < formats.size(); ++i) {
              bind(frame, names[i], transfer(sv, formats[i], w_, names[i]));
            }
          } else if constexpr (std::is_same_v<T, InputCmd>) {
            Shape shape;
            for (const auto& d : c.type.dims) shape.push_back(size_value(frame, d));
            Value v = w_.next_input(c.host, c.type.elem, shape);
            for (std::size_t i = 0; i < formats.size(); ++i) {
              bind(frame, names[i], materialize(v, c.host, formats[i], w_, names[i]));
            }
          } else if constexpr (std::is_same_v<T, OutputCmd>) {
            w_.emit_output(c.host, visible_value(atom_value(frame, c.value), c.host));
          } else {
            return exec_call(c, formats, names, frame, depth, tail_ok);
          }
          return std::nullopt;
        },
        let.cmd.node);
  }

  std::optional<TailCall> exec_call(const CallCmd& c, const std::vector<Protocol>& formats,
                                    const std::vector<std::string>& names, Frame& frame,
                                    std::uint64_t depth, bool tail_ok) {
    auto sizes = size_values(frame, c.sizes);
    std::vector<StoredValue> args;
    std::vector<std::string> arg_names;
    for (const auto& a : c.args) {
      args.push_back(atom_value(frame, a));
      arg_names.push_back(to_string(a));
    }
    if (const auto* circuit = p_.find_circuit(c.callee)) {
      auto results = eval_circuit_call(*circuit, resolve(circuit->protocol), sizes, args,
                                       arg_names, formats, names, w_, backends_);
      for (std::size_t i = 0; i < results.size(); ++i) bind(frame, names[i], std::move(results[i]));
      return std::nullopt;
    }
    const Fun* fun = p_.find_fun(c.callee);
    if (fun == nullptr) fail(ErrorCode::UnknownFunction, "unknown function '" + c.callee + "'");
    if (tail_ok && formats.empty() && fun->outputs.empty()) {
      return TailCall{fun, std::move(sizes), std::move(args)};
    }
    auto results = call_fun(*fun, std::move(sizes), std::move(args), depth + 1);
    for (std::size_t i = 0; i < results.size() && i < formats.size(); ++i) {
      bind(frame, names[i], transfer(results[i], formats[i], w_, names[i]));
    }
    return std::nullopt;
  }

  void exec_compute(const ComputeLet& c, Frame& frame) {
    const Protocol proto = resolve(c.protocol);
    const auto& backend = backends_.get(proto.kind);
    auto reads = free_vars(c.body);
    for (const auto& b : c.binders) {
      reads.erase(b.var);
      if (b.bound.is_var()) reads.insert(b.bound.var_name());
    }
    backend.build(w_);
    CircuitEnv env;
    std::map<std::string, ElemType> elems;
    for (const auto& name : reads) {
      const auto& sv = lookup(frame, name);
      if (sv.format.kind == ProtocolKind::Public) {
        env[name] = public_value(sv);
      } else {
        w_.log(ImportEvent{name, sv.format, proto});
        env[name] = backend.import_value(sv, proto, w_, name);
      }
      elems[name] = env[name].elem();
    }
    CircuitEvalEvent eval{"<inline " + c.var + ">", proto, {}};
    for (const auto& b : c.binders) {
      if (b.bound.is_var()) eval.sizes.emplace_back(b.bound.var_name(), env[b.bound.var_name()].as_int());
    }
    w_.log(std::move(eval));
    Value result;
    {
      CircuitScope scope(w_);
      result = eval_comprehension(c.binders, c.body, env, static_elem(c.body, elems));
    }
    const Protocol home = storage_of(proto);
    w_.log(ExportEvent{c.var, proto, home});
    bind(frame, c.var, backend.export_value(result, proto, home, w_, c.var));
    backend.destroy(w_);
  }

  const Program& p_;
  World& w_;
  const BackendRegistry& backends_;
  RunLimits limits_;
  std::vector<std::string> universe_;
  std::uint64_t steps_ = 0;
};

}  // namespace

RunResult run_program(const Program& p, RunOptions options) {
  World world(std::move(options.script), options.seed, options.cleartext_reference);
  if (options.input_provider) world.set_input_provider(std::move(options.input_provider));
  const auto& backends = options.backends ? *options.backends : BackendRegistry::standard();
  Interpreter interp(p, world, backends, options.limits);
  RunResult result;
  try {
    interp.run();
  } catch (const StepLimitReached&) {
    result.exit = ExitKind::StepLimit;
  } catch (const Error& e) {
    result.exit = ExitKind::Error;
    result.error = RunError{e.code(), e.what()};
  } catch (const std::exception& e) {
    result.exit = ExitKind::Error;
    result.error = RunError{ErrorCode::InternalError, e.what()};
  }
  result.steps = interp.steps();
  result.outputs = world.outputs();
  result.purity_violations = world.purity_violations();
  result.lifecycle = world.lifecycle();
  result.trace = world.take_trace();
  return result;
}

}  // namespace circir
