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

#include "circir/runtime/transfer.hpp"

#include "circir/check/checker.hpp"
#include "circir/ir/error.hpp"
#include "circir/runtime/commitment.hpp"

namespace circir {

namespace {

const Value& payload_value(const StoredValue& sv, const std::string& host) {
  auto it = sv.payload.find(host);
  if (it == sv.payload.end() || !it->second.value) {
    fail(ErrorCode::InternalError,
         "host " + host + " holds no copy of a " + to_string(sv.format) + " value");
  }
  return *it->second.value;
}

Value perturb(const Value& v) {
  std::vector<std::int64_t> data = v.data();
  for (auto& x : data) {
    x = v.elem() == ElemType::Bool ? 1 - x : static_cast<std::int64_t>(static_cast<std::uint64_t>(x) + 1);
  }
  if (data.empty()) return v;
  return Value::array(v.elem(), v.shape(), std::move(data));
}

std::map<std::string, Value> shares_of(const StoredValue& sv) {
  std::map<std::string, Value> shares;
  for (const auto& h : sv.format.hosts) shares.emplace(h, payload_value(sv, h));
  return shares;
}

Value open_commitment(const StoredValue& sv, const Protocol& target) {
  const auto& owner = sv.format.hosts.at(0);
  const auto& owner_payload = sv.payload.at(owner);
  if (!owner_payload.value || !owner_payload.nonce) {
    fail(ErrorCode::InternalError, "commitment owner holds no opening");
  }
  const Digest opened = commitment_digest(*owner_payload.value, *owner_payload.nonce);
  for (const auto& verifier : sv.format.verifiers) {
    if (!target.involves(verifier)) continue;
    const auto& digest = sv.payload.at(verifier).digest;
    if (!digest || *digest != opened) {
      fail(ErrorCode::CommitmentMismatch,
           "opening of commitment by " + owner + " does not match the digest held by " + verifier);
    }
  }
  return *owner_payload.value;
}

}  // namespace

void equivocation_check(const StoredValue& sv, World& world, std::string_view var) {
  const Value* first = nullptr;
  bool ok = true;
  for (const auto& h : sv.format.hosts) {
    const auto& v = payload_value(sv, h);
    if (first == nullptr) {
      first = &v;
    } else if (v != *first) {
      ok = false;
    }
  }
  world.log(EquivocationEvent{std::string(var), ok});
  if (!ok) {
    std::string detail;
    for (const auto& h : sv.format.hosts) {
      if (!detail.empty()) detail += ", ";
      detail += h + "=" + payload_value(sv, h).to_string();
    }
    fail(ErrorCode::EquivocationError,
         "equivocation detected on '" + std::string(var) + "': " + detail);
  }
}

StoredValue materialize(const Value& v, const std::string& holder, const Protocol& target,
                        World& world, std::string_view var) {
  if (world.cleartext_reference()) {
    auto sv = StoredValue::cleartext(target, std::string(kAnyHost), v);
    return sv;
  }
  StoredValue out;
  out.format = target;
  out.elem = v.elem();
  out.shape = v.shape();
  switch (target.kind) {
    case ProtocolKind::Local:
      out.payload[target.hosts.at(0)].value = v;
      break;
    case ProtocolKind::Repl: {
      auto fault = world.take_fault(Fault::Kind::Equivocate, var);
      for (const auto& h : target.hosts) {
        const bool lie = fault && fault->host == h && h != holder;
        out.payload[h].value = lie ? perturb(v) : v;
      }
      equivocation_check(out, world, var);
      break;
    }
    case ProtocolKind::Shares:
      for (auto& [h, s] : share(v, target.hosts, world.rng())) out.payload[h].value = std::move(s);
      break;
    case ProtocolKind::Commit: {
      const auto& owner = target.hosts.at(0);
      const Nonce nonce = fresh_nonce(world.rng());
      const Digest digest = commitment_digest(v, nonce);
      out.payload[owner].value = v;
      out.payload[owner].nonce = nonce;
      for (const auto& verifier : target.verifiers) out.payload[verifier].digest = digest;
      if (world.take_fault(Fault::Kind::TamperCommit, var)) {
        out.payload[owner].value = perturb(v);
      }
      break;
    }
    case ProtocolKind::MPC:
    case ProtocolKind::Public:
      fail(ErrorCode::CannotStore, std::string(protocol_info(target.kind).name) +
                                       " is not a storage format");
  }
  return out;
}

StoredValue transfer(const StoredValue& sv, const Protocol& target, World& world,
                     std::string_view var, bool log_event) {
  if (sv.format == target) return sv;
  if (!target.can_store()) {
    fail(ErrorCode::CannotStore, to_string(target) + " is not a storage format");
  }
  if (!has_transfer_rule(sv.format, target)) {
    fail(ErrorCode::NoTransferRule,
         "no transfer rule from " + to_string(sv.format) + " to " + to_string(target));
  }
  if (log_event) world.log(ExportEvent{std::string(var), sv.format, target});
  if (world.cleartext_reference()) {
    return materialize(peek_cleartext(sv), "", target, world, var);
  }

  const auto& from = sv.format;
  switch (from.kind) {
    case ProtocolKind::Public:
      return materialize(payload_value(sv, std::string(kAnyHost)), "", target, world, var);
    case ProtocolKind::Local:
      return materialize(payload_value(sv, from.hosts.at(0)), from.hosts.at(0), target, world, var);
    case ProtocolKind::Repl: {
      std::string sender = from.hosts.at(0);
      if (target.kind == ProtocolKind::Local && from.involves(target.hosts.at(0))) {
        sender = target.hosts.at(0);
      }
      return materialize(payload_value(sv, sender), sender, target, world, var);
    }
    case ProtocolKind::Shares:
      return materialize(reconstruct(shares_of(sv), sv.elem), "", target, world, var);
    case ProtocolKind::Commit:
      return materialize(open_commitment(sv, target), from.hosts.at(0), target, world, var);
    case ProtocolKind::MPC:
      break;
  }
  fail(ErrorCode::CannotStore, to_string(from) + " is not a storage format");
}

Value visible_value(const StoredValue& sv, const std::string& host) {
  if (sv.format.kind == ProtocolKind::Public) return payload_value(sv, std::string(kAnyHost));
  if ((sv.format.kind == ProtocolKind::Local || sv.format.kind == ProtocolKind::Repl) &&
      sv.format.involves(host)) {
    if (sv.payload.count(std::string(kAnyHost))) return payload_value(sv, std::string(kAnyHost));
    return payload_value(sv, host);
  }
  fail(ErrorCode::NotVisible,
       "value stored as " + to_string(sv.format) + " is not visible to host " + host);
}

Value public_value(const StoredValue& sv) {
  if (sv.payload.count(std::string(kAnyHost))) return payload_value(sv, std::string(kAnyHost));
  switch (sv.format.kind) {
    case ProtocolKind::Local:
    case ProtocolKind::Repl:
      return payload_value(sv, sv.format.hosts.at(0));
    default:
      fail(ErrorCode::NotVisible, "value stored as " + to_string(sv.format) + " is not public");
  }
}

Value peek_cleartext(const StoredValue& sv) {
  if (sv.payload.count(std::string(kAnyHost))) return payload_value(sv, std::string(kAnyHost));
  switch (sv.format.kind) {
    case ProtocolKind::Local:
    case ProtocolKind::Repl:
    case ProtocolKind::Commit:
      return payload_value(sv, sv.format.hosts.at(0));
    case ProtocolKind::Shares:
      return reconstruct(shares_of(sv), sv.elem);
    default:
      fail(ErrorCode::InternalError, "cannot read " + to_string(sv.format));
  }
}

}  // namespace circir
