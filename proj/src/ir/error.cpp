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

#include "circir/ir/error.hpp"

namespace circir {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::IndexOutOfBounds: return "IndexOutOfBounds";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::UnknownFunction: return "UnknownFunction";
    case ErrorCode::ScriptExhausted: return "ScriptExhausted";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::CannotStore: return "CannotStore";
    case ErrorCode::NoTransferRule: return "NoTransferRule";
    case ErrorCode::CommitmentMismatch: return "CommitmentMismatch";
    case ErrorCode::EquivocationError: return "EquivocationError";
    case ErrorCode::NotVisible: return "NotVisible";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace circir
