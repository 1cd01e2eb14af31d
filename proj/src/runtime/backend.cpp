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

#include "circir/runtime/backend.hpp"

#include "circir/ir/error.hpp"
#include "circir/runtime/circuit_eval.hpp"
#include "circir/runtime/transfer.hpp"

namespace circir {

Value ProtocolBackend::import_value(const StoredValue& sv, const Protocol& proto, World& world,
                                    std::string_view var) const {
  auto stored = transfer(sv, storage_of(proto), world, var, false);
  return peek_cleartext(stored);
}

std::vector<Value> ProtocolBackend::eval_circuit(const CircuitFun& f, const Protocol& /*proto*/,
                                                 const std::vector<std::int64_t>& sizes,
                                                 const std::vector<Value>& wires,
                                                 World& world) const {
  CircuitScope scope(world);
  return circir::eval_circuit(f, sizes, wires);
}

StoredValue ProtocolBackend::export_value(const Value& wire, const Protocol& proto,
                                          const Protocol& target, World& world,
                                          std::string_view var) const {
  const Protocol home = storage_of(proto);
  const std::string holder = home.kind == ProtocolKind::Local ? home.hosts.at(0) : std::string();
  auto stored = materialize(wire, holder, home, world, var);
  return transfer(stored, target, world, var, false);
}

void ProtocolBackend::build(World& /*world*/) const {}
void ProtocolBackend::destroy(World& /*world*/) const {}

void MpcBackend::build(World& world) const { ++world.lifecycle().built; }
void MpcBackend::destroy(World& world) const { ++world.lifecycle().destroyed; }

const BackendRegistry& BackendRegistry::standard() {
  static const BackendRegistry registry = [] {
    BackendRegistry r;
    r.add(std::make_unique<LocalBackend>());
    r.add(std::make_unique<ReplBackend>());
    r.add(std::make_unique<MpcBackend>());
    return r;
  }();
  return registry;
}

void BackendRegistry::add(std::unique_ptr<ProtocolBackend> b) {
  const auto kind = b->kind();
  if (backends_.count(kind) != 0) {
    fail(ErrorCode::InternalError,
         "backend for " + std::string(protocol_info(kind).name) + " registered twice");
  }
  backends_.emplace(kind, std::move(b));
}

const ProtocolBackend& BackendRegistry::get(ProtocolKind kind) const {
  auto it = backends_.find(kind);
  if (it == backends_.end()) {
    fail(ErrorCode::InternalError,
         "no backend computes under " + std::string(protocol_info(kind).name));
  }
  return *it->second;
}

}  // namespace circir
