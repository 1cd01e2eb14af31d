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

#include "circir/runtime/circuit_eval.hpp"

#include "circir/ir/error.hpp"

namespace circir {

namespace {

const Value& lookup_name(const CircuitEnv& env, const std::string& name) {
  auto it = env.find(name);
  if (it == env.end()) fail(ErrorCode::UnknownVariable, "unknown variable '" + name + "'");
  return it->second;
}

Value eval_atom(const Atom& a, const CircuitEnv& env) {
  return a.is_var() ? lookup_name(env, a.var_name()) : a.literal();
}

std::int64_t eval_bound(const Atom& a, const CircuitEnv& env) {
  const std::int64_t n = eval_atom(a, env).as_int();
  if (n < 0) fail(ErrorCode::ShapeMismatch, "negative bound " + std::to_string(n));
  return n;
}

// Binds each binder in turn, calling `fn` once per index vector.
template <class Fn>
void for_each_index(const std::vector<IndexBound>& binders, const Shape& shape, CircuitEnv& env,
                    std::size_t level, Fn&& fn) {
  if (level == binders.size()) {
    fn();
    return;
  }
  const auto& name = binders[level].var;
  for (std::int64_t i = 0; i < shape[level]; ++i) {
    env[name] = Value::of_int(i);
    for_each_index(binders, shape, env, level + 1, fn);
  }
  env.erase(name);
}

}  // namespace

Shape concrete_shape(const Type& t, const CircuitEnv& env) {
  Shape shape;
  for (const auto& d : t.dims) shape.push_back(eval_bound(d, env));
  return shape;
}

Value eval_scalar(const ScalarExpr& e, CircuitEnv& env) {
  return std::visit(
      [&](const auto& n) -> Value {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Atom>) {
          return eval_atom(n, env);
        } else if constexpr (std::is_same_v<T, Lookup>) {
          std::vector<std::int64_t> idx;
          idx.reserve(n.indices.size());
          for (const auto& a : n.indices) idx.push_back(eval_atom(a, env).as_int());
          return array_get(lookup_name(env, n.array), idx);
        } else if constexpr (std::is_same_v<T, Binary>) {
          Value l = eval_scalar(*n.lhs, env);
          Value r = eval_scalar(*n.rhs, env);
          return eval_binop(n.op, l, r);
        } else {
          Value acc = eval_scalar(*n.init, env);
          const std::int64_t bound = eval_bound(n.bound.bound, env);
          for (std::int64_t i = 0; i < bound; ++i) {
            env[n.bound.var] = Value::of_int(i);
            acc = eval_binop(n.op, acc, eval_scalar(*n.body, env));
          }
          env.erase(n.bound.var);
          return acc;
        }
      },
      e.node);
}

Value eval_comprehension(const std::vector<IndexBound>& binders, const ScalarExpr& body,
                         CircuitEnv& env, ElemType empty_elem) {
  if (binders.empty()) return eval_scalar(body, env);
  Shape shape;
  for (const auto& b : binders) shape.push_back(eval_bound(b.bound, env));
  std::vector<std::int64_t> data;
  data.reserve(element_count(shape));
  std::optional<ElemType> elem;
  for_each_index(binders, shape, env, 0, [&] {
    Value v = eval_scalar(body, env);
    elem = v.elem();
    data.push_back(v.data().front());
  });
  return Value::array(elem.value_or(empty_elem), std::move(shape), std::move(data));
}

ElemType static_elem(const ScalarExpr& e, const std::map<std::string, ElemType>& names) {
  return std::visit(
      [&](const auto& n) -> ElemType {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Atom>) {
          if (!n.is_var()) return n.literal().elem();
          auto it = names.find(n.var_name());
          return it == names.end() ? ElemType::Int : it->second;
        } else if constexpr (std::is_same_v<T, Lookup>) {
          auto it = names.find(n.array);
          return it == names.end() ? ElemType::Int : it->second;
        } else if constexpr (std::is_same_v<T, Binary>) {
          auto operand = static_elem(*n.lhs, names);
          return op_result_type(n.op, operand).value_or(ElemType::Int);
        } else {
          return static_elem(*n.init, names);
        }
      },
      e.node);
}

std::vector<Value> eval_circuit(const CircuitFun& f, const std::vector<std::int64_t>& sizes,
                                const std::vector<Value>& args) {
  if (sizes.size() != f.sizes.size() || args.size() != f.inputs.size()) {
    fail(ErrorCode::InternalError, "wrong number of arguments to circuit '" + f.name + "'");
  }
  CircuitEnv env;
  std::map<std::string, ElemType> elems;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 0) fail(ErrorCode::ShapeMismatch, "negative size for '" + f.sizes[i] + "'");
    env[f.sizes[i]] = Value::of_int(sizes[i]);
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    const auto& p = f.inputs[i];
    const Shape want = concrete_shape(p.type, env);
    if (args[i].shape() != want || args[i].elem() != p.type.elem) {
      fail(ErrorCode::ShapeMismatch, "argument '" + p.name + "' of '" + f.name +
                                         "' does not match its declared type");
    }
    env[p.name] = args[i];
    elems[p.name] = p.type.elem;
  }
  for (const auto& s : f.body) {
    const ElemType elem = static_elem(s.body, elems);
    env[s.target] = eval_comprehension(s.binders, s.body, env, elem);
    elems[s.target] = elem;
  }
  std::vector<Value> out;
  out.reserve(f.returns.size());
  for (const auto& r : f.returns) out.push_back(lookup_name(env, r));
  return out;
}

}  // namespace circir
