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

#include <string>
#include <string_view>

#include "circir/runtime/storage.hpp"
#include "circir/runtime/world.hpp"

namespace circir {

/// Converts a stored value to another storage format following the
/// transfer table:
///
///   from \ to        Local    Repl          Shares        Commit
///   Local / Public   send     broadcast+EC  owner shares  send, commit
///   Repl             send     broadcast+EC  share         send, commit
///   Shares           recon.   recon.+EC     reshare       (no rule)
///   Commit           open     open+EC       (no rule)     (same format only)
///
/// EC is an equivocation check. Opening a commitment verifies the digest at
/// every receiving verifier. Logs one Export event when `log_event` is set
/// and the formats differ. Throws NoTransferRule, CannotStore,
/// EquivocationError or CommitmentMismatch.
StoredValue transfer(const StoredValue& sv, const Protocol& target, World& world,
                     std::string_view var, bool log_event = true);

/// Stores a cleartext value held by `holder` (empty for a value every host
/// already knows) into `target`.
StoredValue materialize(const Value& v, const std::string& holder, const Protocol& target,
                        World& world, std::string_view var);

/// Compares the copies held by every host of a replicated value. Logs an
/// EquivocationCheck event; throws EquivocationError naming all hosts and
/// their copies on disagreement.
void equivocation_check(const StoredValue& sv, World& world, std::string_view var);

/// Cleartext that `host` can read without any transfer: its own copy of a
/// Local/Repl value or a literal. Throws NotVisible otherwise.
Value visible_value(const StoredValue& sv, const std::string& host);

/// Cleartext of a value every host can read (literal or replicated) or that
/// lives in cleartext at a single host. Throws NotVisible for hidden formats.
Value public_value(const StoredValue& sv);

/// Reference view used by the cleartext backend and in tests: reconstructs
/// whatever the format holds, without checks or events.
Value peek_cleartext(const StoredValue& sv);

}  // namespace circir
