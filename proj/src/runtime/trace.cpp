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

#include "circir/runtime/trace.hpp"

#include <sstream>

namespace circir {

std::string format_event(const TraceEvent& e) {
  std::ostringstream os;
  os << e.seq << ' ';
  std::visit(
      [&](const auto& ev) {
        using T = std::decay_t<decltype(ev)>;
        if constexpr (std::is_same_v<T, InputEvent>) {
          os << "input " << ev.host << ' ' << ev.value.to_string();
        } else if constexpr (std::is_same_v<T, OutputEvent>) {
          os << "output " << ev.host << ' ' << ev.value.to_string();
        } else if constexpr (std::is_same_v<T, ImportEvent>) {
          os << "import " << ev.var << ' ' << to_string(ev.from) << " -> " << to_string(ev.to);
        } else if constexpr (std::is_same_v<T, ExportEvent>) {
          os << "export " << ev.var << ' ' << to_string(ev.from) << " -> " << to_string(ev.to);
        } else if constexpr (std::is_same_v<T, CircuitEvalEvent>) {
          os << "circuit " << ev.function << ' ' << to_string(ev.protocol);
          for (const auto& [name, size] : ev.sizes) os << ' ' << name << '=' << size;
        } else {
          os << "equivocation " << ev.var << ' ' << (ev.ok ? "ok" : "fail");
        }
      },
      e.data);
  return os.str();
}

std::string serialize_trace(const Trace& t) {
  std::string out;
  for (const auto& e : t) out += format_event(e) + '\n';
  return out;
}

std::vector<EventData> io_events(const Trace& t) {
  std::vector<EventData> out;
  for (const auto& e : t) {
    if (std::holds_alternative<InputEvent>(e.data) || std::holds_alternative<OutputEvent>(e.data)) {
      out.push_back(e.data);
    }
  }
  return out;
}

}  // namespace circir
