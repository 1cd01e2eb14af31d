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

#include <stdexcept>
#include <string>
#include <string_view>

namespace circir {

enum class ErrorCode {
  DivisionByZero,
  TypeMismatch,
  IndexOutOfBounds,
  RankMismatch,
  ShapeMismatch,
  UnknownVariable,
  UnknownFunction,
  ScriptExhausted,
  DepthExceeded,
  CannotStore,
  NoTransferRule,
  CommitmentMismatch,
  EquivocationError,
  NotVisible,
  PreconditionViolated,
  InternalError,
};

std::string_view to_string(ErrorCode code);

/// Error raised by evaluation, transfers and the interpreter. The code is
/// stable and is what tests and the CLI dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace circir
