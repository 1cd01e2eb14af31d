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

#include <deque>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "circir/ir/value.hpp"

namespace circir {

/// Test hook that perturbs one transfer. `equivocate` makes the sender hand
/// `host` a different copy when `var` is replicated; `tamper-commit` makes
/// the owner alter its committed copy of `var` after committing.
struct Fault {
  enum class Kind { Equivocate, TamperCommit };
  Kind kind = Kind::Equivocate;
  std::string var;
  std::string host;

  friend bool operator==(const Fault&, const Fault&) = default;
};

/// Scripted inputs for one run. Text form, one directive per line:
///
///   host Client: 7 true int[2,2] [1,2,3,4]
///   fault equivocate n Client
///   fault tamper-commit secret
///
/// `#` starts a comment. Several `host` lines for one host append.
struct IoScript {
  std::map<std::string, std::deque<Value>> inputs;
  std::vector<Fault> faults;

  friend bool operator==(const IoScript&, const IoScript&) = default;
};

/// Throws Error(TypeMismatch) with a line number on malformed text.
IoScript parse_script(std::string_view text);
std::string to_string(const IoScript& s);

/// Parses one value in script/trace syntax.
Value parse_value(std::string_view text);

}  // namespace circir
