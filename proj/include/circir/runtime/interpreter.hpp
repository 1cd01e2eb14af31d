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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "circir/ir/ast.hpp"
#include "circir/ir/error.hpp"
#include "circir/runtime/backend.hpp"
#include "circir/runtime/script.hpp"
#include "circir/runtime/storage.hpp"
#include "circir/runtime/trace.hpp"
#include "circir/runtime/world.hpp"

namespace circir {

struct RunLimits {
  std::uint64_t max_steps = 1'000'000;
  std::uint64_t max_depth = 1'000;
};

struct RunOptions {
  IoScript script;
  std::uint64_t seed = 0;
  RunLimits limits;
  /// Replace every protocol by plain cleartext: same control flow and I/O,
  /// no sharing, commitments or equivocation checks.
  bool cleartext_reference = false;
  InputProvider input_provider;
  const BackendRegistry* backends = nullptr;  // standard registry when null
};

enum class ExitKind { Completed, StepLimit, Error };

std::string_view to_string(ExitKind k);

struct RunError {
  ErrorCode code;
  std::string message;
};

struct RunResult {
  Trace trace;
  ExitKind exit = ExitKind::Completed;
  std::optional<RunError> error;
  std::map<std::string, std::vector<Value>> outputs;
  std::uint64_t steps = 0;
  std::size_t purity_violations = 0;
  LifecycleStats lifecycle;
};

/// Interprets `main` of a checked program. Statements run in order; a call
/// in tail position of a function without results reuses the caller's frame,
/// so unbounded interactive loops end at `max_steps` rather than
/// `max_depth`. Surface programs run too: an inline computation imports the
/// values it reads, evaluates, and exports to its protocol's storage format.
RunResult run_program(const Program& p, RunOptions options);

/// Calls circuit `f` on stored arguments: imports each argument, evaluates,
/// and exports the results into `out_formats`. Logs Import, CircuitEval and
/// Export events. `arg_names` label the Import events; `out_names` the
/// Export events.
std::vector<StoredValue> eval_circuit_call(const CircuitFun& f, const Protocol& proto,
                                           const std::vector<std::int64_t>& sizes,
                                           const std::vector<StoredValue>& args,
                                           const std::vector<std::string>& arg_names,
                                           const std::vector<Protocol>& out_formats,
                                           const std::vector<std::string>& out_names,
                                           World& world,
                                           const BackendRegistry& backends =
                                               BackendRegistry::standard());

}  // namespace circir
