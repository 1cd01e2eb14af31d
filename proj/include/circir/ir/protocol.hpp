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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace circir {

/// Built-in protocols. `Public` is internal: it marks literals, which every
/// host knows, and has no concrete syntax.
enum class ProtocolKind : std::uint8_t { Local, Repl, MPC, Shares, Commit, Public };

struct ProtocolInfo {
  ProtocolKind kind;
  std::string_view name;
  bool can_compute;
  bool can_store;
};

const ProtocolInfo& protocol_info(ProtocolKind kind);
std::optional<ProtocolKind> protocol_from_name(std::string_view name);

/// A protocol or storage format reference such as `Repl(Server, Client)` or
/// `Commit(Server; Client)`. An empty host list on Repl/MPC/Shares means
/// "every host of the program" and is resolved against the host universe.
/// For Commit, `hosts` holds the single owner.
struct Protocol {
  ProtocolKind kind = ProtocolKind::Local;
  std::vector<std::string> hosts;
  std::vector<std::string> verifiers;

  static Protocol local(std::string host) { return {ProtocolKind::Local, {std::move(host)}, {}}; }
  static Protocol repl(std::vector<std::string> hosts) {
    return {ProtocolKind::Repl, std::move(hosts), {}};
  }
  static Protocol mpc(std::vector<std::string> hosts) {
    return {ProtocolKind::MPC, std::move(hosts), {}};
  }
  static Protocol shares(std::vector<std::string> hosts) {
    return {ProtocolKind::Shares, std::move(hosts), {}};
  }
  static Protocol commit(std::string owner, std::vector<std::string> verifiers) {
    return {ProtocolKind::Commit, {std::move(owner)}, std::move(verifiers)};
  }
  static Protocol pub() { return {ProtocolKind::Public, {}, {}}; }

  [[nodiscard]] bool can_compute() const { return protocol_info(kind).can_compute; }
  [[nodiscard]] bool can_store() const { return protocol_info(kind).can_store; }
  [[nodiscard]] bool is_bare() const { return hosts.empty() && kind != ProtocolKind::Public; }

  /// Every host that holds data in this format (owner first for Commit).
  [[nodiscard]] std::vector<std::string> participants() const;
  [[nodiscard]] bool involves(std::string_view host) const;

  friend bool operator==(const Protocol&, const Protocol&) = default;
};

/// Canonical text, e.g. `Repl(Server, Client)`.
std::string to_string(const Protocol& p);

/// Storage format that holds the results of computing under `p`: MPC keeps
/// results as additive shares over its hosts; every other computation
/// protocol stores in its own format.
Protocol storage_of(const Protocol& p);

/// Fill in the hosts of a bare protocol from the program's host universe.
Protocol resolve_hosts(const Protocol& p, const std::vector<std::string>& universe);

/// Hidden formats (shares, commitments) rank above cleartext ones. Moving a
/// value from a hidden format into a cleartext one reveals it.
bool is_hidden(ProtocolKind kind);

/// Structural validity of a resolved protocol: host counts and distinctness.
/// Returns an error message, or nullopt when valid.
std::optional<std::string> validate_protocol(const Protocol& p);

}  // namespace circir
