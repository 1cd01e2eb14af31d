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

#include "circir/ir/protocol.hpp"

#include <algorithm>
#include <set>

#include "circir/ir/error.hpp"

namespace circir {

namespace {

constexpr ProtocolInfo kProtocols[] = {
    {ProtocolKind::Local, "Local", true, true},
    {ProtocolKind::Repl, "Repl", true, true},
    {ProtocolKind::MPC, "MPC", true, false},
    {ProtocolKind::Shares, "Shares", false, true},
    {ProtocolKind::Commit, "Commit", false, true},
    {ProtocolKind::Public, "Public", false, false},
};

}  // namespace

const ProtocolInfo& protocol_info(ProtocolKind kind) {
  for (const auto& entry : kProtocols) {
    if (entry.kind == kind) return entry;
  }
  fail(ErrorCode::InternalError, "unknown protocol kind");
}

std::optional<ProtocolKind> protocol_from_name(std::string_view name) {
  for (const auto& entry : kProtocols) {
    if (entry.name == name && entry.kind != ProtocolKind::Public) return entry.kind;
  }
  return std::nullopt;
}

std::vector<std::string> Protocol::participants() const {
  std::vector<std::string> out = hosts;
  out.insert(out.end(), verifiers.begin(), verifiers.end());
  return out;
}

bool Protocol::involves(std::string_view host) const {
  auto all = participants();
  return std::find(all.begin(), all.end(), host) != all.end();
}

std::string to_string(const Protocol& p) {
  std::string out(protocol_info(p.kind).name);
  if (p.kind == ProtocolKind::Public || (p.hosts.empty() && p.verifiers.empty())) return out;
  auto join = [](const std::vector<std::string>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i];
    return s;
  };
  out += "(" + join(p.hosts);
  if (p.kind == ProtocolKind::Commit) out += "; " + join(p.verifiers);
  return out + ")";
}

Protocol storage_of(const Protocol& p) {
  if (p.kind == ProtocolKind::MPC) return Protocol::shares(p.hosts);
  return p;
}

Protocol resolve_hosts(const Protocol& p, const std::vector<std::string>& universe) {
  if (!p.is_bare()) return p;
  Protocol out = p;
  switch (p.kind) {
    case ProtocolKind::Repl:
    case ProtocolKind::MPC:
    case ProtocolKind::Shares:
      out.hosts = universe;
      break;
    default:
      break;
  }
  return out;
}

bool is_hidden(ProtocolKind kind) {
  return kind == ProtocolKind::Shares || kind == ProtocolKind::Commit ||
         kind == ProtocolKind::MPC;
}

std::optional<std::string> validate_protocol(const Protocol& p) {
  const auto name = std::string(protocol_info(p.kind).name);
  auto all = p.participants();
  std::set<std::string> distinct(all.begin(), all.end());
  if (distinct.size() != all.size()) return name + " lists a host more than once";
  switch (p.kind) {
    case ProtocolKind::Local:
      if (p.hosts.size() != 1) return std::string("Local requires exactly one host");
      break;
    case ProtocolKind::Repl:
      if (p.hosts.empty()) return std::string("Repl requires at least one host");
      break;
    case ProtocolKind::MPC:
    case ProtocolKind::Shares:
      if (p.hosts.size() < 2) return name + " requires at least two hosts";
      break;
    case ProtocolKind::Commit:
      if (p.hosts.size() != 1) return std::string("Commit requires exactly one owner");
      if (p.verifiers.empty()) return std::string("Commit requires at least one verifier");
      break;
    case ProtocolKind::Public:
      break;
  }
  if (p.kind != ProtocolKind::Commit && !p.verifiers.empty()) {
    return name + " does not take verifiers";
  }
  return std::nullopt;
}

}  // namespace circir
