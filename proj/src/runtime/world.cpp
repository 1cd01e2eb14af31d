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

#include "circir/runtime/world.hpp"

#include <algorithm>

#include "circir/ir/error.hpp"

namespace circir {

World::World(IoScript script, std::uint64_t seed, bool cleartext_reference)
    : script_(std::move(script)), rng_(seed), cleartext_reference_(cleartext_reference) {}

Value World::next_input(const std::string& host, ElemType elem, const Shape& shape) {
  if (circuit_depth_ > 0) ++purity_violations_;
  std::optional<Value> v;
  auto it = script_.inputs.find(host);
  if (it != script_.inputs.end() && !it->second.empty()) {
    v = std::move(it->second.front());
    it->second.pop_front();
  } else if (provider_) {
    v = provider_(host, elem, shape);
  }
  if (!v) fail(ErrorCode::ScriptExhausted, "no more input for host " + host);
  if (v->elem() != elem || v->shape() != shape) {
    std::string want(to_string(elem));
    if (!shape.empty()) {
      want += "[";
      for (std::size_t i = 0; i < shape.size(); ++i) {
        want += (i ? "," : "") + std::to_string(shape[i]);
      }
      want += "]";
    }
    fail(ErrorCode::TypeMismatch,
         "input for host " + host + " expected " + want + ", got " + v->to_string());
  }
  log(InputEvent{host, *v});
  return *v;
}

void World::emit_output(const std::string& host, const Value& v) {
  if (circuit_depth_ > 0) ++purity_violations_;
  outputs_[host].push_back(v);
  log(OutputEvent{host, v});
}

void World::log(EventData data) { trace_.push_back(TraceEvent{next_seq_++, std::move(data)}); }

std::optional<Fault> World::take_fault(Fault::Kind kind, std::string_view var) {
  auto& faults = script_.faults;
  auto it = std::find_if(faults.begin(), faults.end(),
                         [&](const Fault& f) { return f.kind == kind && f.var == var; });
  if (it == faults.end()) return std::nullopt;
  Fault f = *it;
  faults.erase(it);
  return f;
}

}  // namespace circir
