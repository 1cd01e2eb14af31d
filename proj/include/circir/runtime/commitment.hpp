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

#include "circir/runtime/sharing.hpp"
#include "circir/runtime/storage.hpp"

namespace circir {

/// SHA-256 over a fixed encoding of (value, nonce): element type byte, rank,
/// each dimension and element as little-endian 64-bit words, then the
/// 16-byte nonce.
Digest commitment_digest(const Value& v, const Nonce& nonce);

Nonce fresh_nonce(Rng& rng);

std::string to_hex(const Digest& d);

}  // namespace circir
