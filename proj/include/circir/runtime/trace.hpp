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
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "circir/ir/protocol.hpp"
#include "circir/ir/value.hpp"

namespace circir {

struct InputEvent {
  std::string host;
  Value value;
  friend bool operator==(const InputEvent&, const InputEvent&) = default;
};

struct OutputEvent {
  std::string host;
  Value value;
  friend bool operator==(const OutputEvent&, const OutputEvent&) = default;
};

/// A value moved from a storage format into a protocol's execution format.
struct ImportEvent {
  std::string var;
  Protocol from;
  Protocol to;
  friend bool operator==(const ImportEvent&, const ImportEvent&) = default;
};

/// A value moved out of a protocol (or storage format) into storage.
struct ExportEvent {
  std::string var;
  Protocol from;
  Protocol to;
  friend bool operator==(const ExportEvent&, const ExportEvent&) = default;
};

struct CircuitEvalEvent {
  std::string function;
  Protocol protocol;
  std::vector<std::pair<std::string, std::int64_t>> sizes;
  friend bool operator==(const CircuitEvalEvent&, const CircuitEvalEvent&) = default;
};

struct EquivocationEvent {
  std::string var;
  bool ok = true;
  friend bool operator==(const EquivocationEvent&, const EquivocationEvent&) = default;
};

using EventData = std::variant<InputEvent, OutputEvent, ImportEvent, ExportEvent,
                               CircuitEvalEvent, EquivocationEvent>;

struct TraceEvent {
  std::uint64_t seq = 0;
  EventData data;
  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

using Trace = std::vector<TraceEvent>;

/// One line per event, e.g.
///   0 input Client int[2] [1,1]
///   1 import db Local(Server) -> MPC(Server, Client)
///   2 circuit biometric MPC(Server, Client) n=2 d=2
///   3 export best MPC(Server, Client) -> Local(Client)
///   4 output Client 1
///   5 equivocation n ok
std::string format_event(const TraceEvent& e);
std::string serialize_trace(const Trace& t);

/// The Input/Output events in order, without sequence numbers.
std::vector<EventData> io_events(const Trace& t);

}  // namespace circir
