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

#include <map>
#include <memory>
#include <string_view>
#include <vector>

#include "circir/ir/ast.hpp"
#include "circir/runtime/storage.hpp"
#include "circir/runtime/world.hpp"

namespace circir {

/// A computation protocol's execution engine. Values enter through
/// `import_value`, which moves them into the protocol's storage format and
/// then into its internal wire form; results leave through `export_value`.
/// Backends hold no per-run state and may serve several worlds.
class ProtocolBackend {
 public:
  virtual ~ProtocolBackend() = default;

  [[nodiscard]] virtual ProtocolKind kind() const = 0;

  virtual Value import_value(const StoredValue& sv, const Protocol& proto, World& world,
                             std::string_view var) const;
  virtual std::vector<Value> eval_circuit(const CircuitFun& f, const Protocol& proto,
                                          const std::vector<std::int64_t>& sizes,
                                          const std::vector<Value>& wires, World& world) const;
  virtual StoredValue export_value(const Value& wire, const Protocol& proto,
                                   const Protocol& target, World& world,
                                   std::string_view var) const;

  /// Circuit construction and teardown around one evaluation.
  virtual void build(World& world) const;
  virtual void destroy(World& world) const;
};

/// Cleartext computation at one host.
class LocalBackend : public ProtocolBackend {
 public:
  [[nodiscard]] ProtocolKind kind() const override { return ProtocolKind::Local; }
};

/// Every host of the set computes on its own copy.
class ReplBackend : public ProtocolBackend {
 public:
  [[nodiscard]] ProtocolKind kind() const override { return ProtocolKind::Repl; }
};

/// Mock MPC: inputs arrive as additive shares and results leave as shares;
/// the circuit itself runs on the reconstructed cleartext.
class MpcBackend : public ProtocolBackend {
 public:
  [[nodiscard]] ProtocolKind kind() const override { return ProtocolKind::MPC; }
  void build(World& world) const override;
  void destroy(World& world) const override;
};

/// Backends keyed by protocol kind. Each kind is registered once.
class BackendRegistry {
 public:
  /// Local, Repl and MPC.
  static const BackendRegistry& standard();

  void add(std::unique_ptr<ProtocolBackend> b);
  /// Throws InternalError when no backend computes under `kind`.
  [[nodiscard]] const ProtocolBackend& get(ProtocolKind kind) const;

 private:
  std::map<ProtocolKind, std::unique_ptr<ProtocolBackend>> backends_;
};

}  // namespace circir
