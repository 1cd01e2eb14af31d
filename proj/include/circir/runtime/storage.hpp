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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "circir/ir/protocol.hpp"
#include "circir/ir/value.hpp"

namespace circir {

using Nonce = std::array<std::uint8_t, 16>;
using Digest = std::array<std::uint8_t, 32>;

/// What one host holds for a stored value. Cleartext copies and additive
/// shares live in `value`; a commitment owner holds `value` and `nonce`,
/// verifiers hold only `digest`.
struct HostPayload {
  std::optional<Value> value;
  std::optional<Nonce> nonce;
  std::optional<Digest> digest;

  friend bool operator==(const HostPayload&, const HostPayload&) = default;
};

/// Key used for payloads that belong to no particular host: literals, and
/// every value when running against the cleartext reference backend.
inline constexpr std::string_view kAnyHost = "*";

struct StoredValue {
  Protocol format;
  ElemType elem = ElemType::Int;
  Shape shape;
  std::map<std::string, HostPayload> payload;

  static StoredValue cleartext(const Protocol& format, const std::string& host, Value v);
  static StoredValue literal(Value v);

  friend bool operator==(const StoredValue&, const StoredValue&) = default;
};

}  // namespace circir
