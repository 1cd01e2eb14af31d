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

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "circir/runtime/script.hpp"
#include "circir/runtime/sharing.hpp"
#include "circir/runtime/trace.hpp"

namespace circir {

/// Supplies an input when a host's scripted queue is empty. Used by tests to
/// drive generated programs; returning nullopt means the script is exhausted.
using InputProvider =
    std::function<std::optional<Value>(const std::string& host, ElemType elem, const Shape& shape)>;

/// Backend bookkeeping, for checking the build/import/eval/export/destroy
/// lifecycle.
struct LifecycleStats {
  std::size_t built = 0;
  std::size_t destroyed = 0;
};

/// Mutable state of one run: scripted input queues, per-host output logs,
/// the event trace and the seeded randomness. All hosts live here; sending
/// a value between hosts is a trace entry, not a socket write.
class World {
 public:
  World(IoScript script, std::uint64_t seed, bool cleartext_reference = false);

  /// Pops the next input of `host`, checking it against the concrete type.
  /// Throws ScriptExhausted or TypeMismatch.
  Value next_input(const std::string& host, ElemType elem, const Shape& shape);
  void emit_output(const std::string& host, const Value& v);

  void log(EventData data);

  [[nodiscard]] const Trace& trace() const { return trace_; }
  Trace take_trace() { return std::move(trace_); }
  [[nodiscard]] const std::map<std::string, std::vector<Value>>& outputs() const {
    return outputs_;
  }

  Rng& rng() { return rng_; }

  /// Removes and returns the first unused fault of `kind` on `var`.
  std::optional<Fault> take_fault(Fault::Kind kind, std::string_view var);

  [[nodiscard]] bool cleartext_reference() const { return cleartext_reference_; }

  void set_input_provider(InputProvider p) { provider_ = std::move(p); }

  /// Circuit purity instrumentation: I/O attempted while a circuit is being
  /// evaluated is counted here.
  void enter_circuit() { ++circuit_depth_; }
  void exit_circuit() { --circuit_depth_; }
  [[nodiscard]] std::size_t purity_violations() const { return purity_violations_; }

  LifecycleStats& lifecycle() { return lifecycle_; }

 private:
  IoScript script_;
  Rng rng_;
  bool cleartext_reference_;
  InputProvider provider_;
  Trace trace_;
  std::map<std::string, std::vector<Value>> outputs_;
  std::uint64_t next_seq_ = 0;
  int circuit_depth_ = 0;
  std::size_t purity_violations_ = 0;
  LifecycleStats lifecycle_;
};

/// RAII marker for "a circuit is being evaluated".
class CircuitScope {
 public:
  explicit CircuitScope(World& w) : w_(w) { w_.enter_circuit(); }
  ~CircuitScope() { w_.exit_circuit(); }
  CircuitScope(const CircuitScope&) = delete;
  CircuitScope& operator=(const CircuitScope&) = delete;

 private:
  World& w_;
};

}  // namespace circir
